#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "eqloc/chern.hpp"
#include "eqloc/laurent.hpp"
#include "eqloc/fixtures.hpp"

using namespace eqloc;

namespace {

Int binomial(int n, int k) {
  Int r(1);
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Independent oracle for CP^5: total Chern class (1+H)^6 in Z[H]/(H^6),
// integrated against int H^5 = 1. A Chern monomial evaluates to the product
// of binomial coefficients C(6,k)^{j_k}.
Int cp5_oracle(const ChernMonomial& m) {
  Int r(1);
  for (size_t k = 0; k < m.exponents.size(); ++k)
    for (int rep = 0; rep < m.exponents[k]; ++rep) r *= binomial(6, static_cast<int>(k + 1));
  return r;
}

ChernMonomial mono(std::vector<int> e) { return ChernMonomial{std::move(e)}; }

}  // namespace

TEST_CASE("monomial degree, name and enumeration") {
  CHECK(mono({5, 0, 0, 0, 0}).degree() == 5);
  CHECK(mono({1, 2, 0, 0, 0}).name() == "c1 c2^2");
  CHECK(mono({0, 0, 0, 0, 0}).name() == "1");

  auto parts5 = monomials_of_degree(5, 5);
  REQUIRE(parts5.size() == 7);  // partitions of 5
  CHECK(parts5.front() == mono({5, 0, 0, 0, 0}));
  CHECK(parts5.back() == mono({0, 0, 0, 0, 1}));
  CHECK(std::is_sorted(parts5.begin(), parts5.end(), std::greater<ChernMonomial>()));

  CHECK(monomials_of_degree(2, 2).size() == 2);
  CHECK(monomials_of_degree(5, 0).size() == 1);
  CHECK(monomials_of_degree(5, 4).size() == 5);
}

TEST_CASE("chern_class_at_point is sigma_k") {
  FixedPoint p{{1, 2}, ""};
  CHECK(chern_class_at_point(p, 0) == 1);
  CHECK(chern_class_at_point(p, 1) == 3);
  CHECK(chern_class_at_point(p, 2) == 2);
  CHECK(chern_class_at_point({{1, 2, -3}, ""}, 1) == 0);
}

TEST_CASE("abbv_integrate examples") {
  // CP^2, c_1^2: 9/2 + 0 + 9/2 = 9.
  CHECK(abbv_integrate(fixtures::cp2(), mono({2, 0})) == Rat(9));

  // Top class counts fixed points.
  for (const auto& [name, d] : fixtures::all()) {
    INFO(name);
    ChernMonomial top;
    top.exponents.assign(static_cast<size_t>(d.n), 0);
    top.exponents.back() = 1;
    CHECK(abbv_integrate(d, top) == Rat(static_cast<long long>(d.points.size())));
  }

  // Degree-0 monomial on CP^2: 1/2 - 1 + 1/2 = 0.
  CHECK(abbv_integrate(fixtures::cp2(), mono({0, 0})) == Rat(0));
}

TEST_CASE("chern tables") {
  ChernTable cp2 = chern_table(fixtures::cp2());
  CHECK(cp2.at(mono({2, 0})) == Rat(9));
  CHECK(cp2.at(mono({0, 1})) == Rat(3));

  ChernTable s6 = chern_table(fixtures::s6());
  CHECK(s6.at(mono({3, 0, 0})) == Rat(0));
  CHECK(s6.at(mono({1, 1, 0})) == Rat(0));
  CHECK(s6.at(mono({0, 0, 1})) == Rat(2));

  ChernTable cp5 = chern_table(fixtures::cp5());
  REQUIRE(cp5.size() == 7);
  for (const auto& [m, v] : cp5) {
    INFO(m.name());
    CHECK(v == Rat(cp5_oracle(m)));
  }
  CHECK(cp5.at(mono({5, 0, 0, 0, 0})) == Rat(7776));
  CHECK(cp5.at(mono({1, 2, 0, 0, 0})) == Rat(1350));
  CHECK(cp5.at(mono({0, 0, 0, 0, 1})) == Rat(6));
}

TEST_CASE("integrality_check") {
  CHECK(integrality_check(chern_table(fixtures::cp5())).empty());
  CHECK(integrality_check(ChernTable{}).empty());

  ChernTable t;
  t.emplace(mono({1, 2, 0, 0, 0}), Rat(1532, 3));
  auto v = integrality_check(t);
  REQUIRE(v.size() == 1);
  CHECK(v[0].monomial == mono({1, 2, 0, 0, 0}));
  CHECK(v[0].value == Rat(1532, 3));
}

TEST_CASE("vanishing_check") {
  for (const auto& [name, d] : fixtures::all()) {
    INFO(name);
    CHECK(vanishing_check(d).empty());
  }
  // {(1,2),(1,-2)}: the degree-0 sum vanishes but the c_1 sum is 2.
  FixedPointDataset bad = fixtures::make(2, {{1, 2}, {1, -2}}, "bad");
  CHECK(abbv_integrate(bad, mono({0, 0})) == Rat(0));
  auto v = vanishing_check(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].monomial == mono({1, 0}));
  CHECK(v[0].value == Rat(2));
}

TEST_CASE("c1sq_divisibility_check") {
  CHECK(c1sq_divisibility_check(fixtures::s2xs6()).empty());
  CHECK_THROWS_AS(c1sq_divisibility_check(fixtures::cp5()), std::invalid_argument);
  CHECK_THROWS_AS(c1sq_divisibility_check(fixtures::s6()), std::invalid_argument);
}

TEST_CASE("c1^2 factor identity in the paired regime") {
  // With weight sums (a, a, -a, -a), adding a c_1^2 factor multiplies each
  // localization summand by a^2.
  FixedPointDataset d = fixtures::s2xs6();
  Rat a2(49);
  for (int deg = 0; deg + 2 <= d.n; ++deg)
    for (const auto& m : monomials_of_degree(d.n, deg)) {
      ChernMonomial up = m;
      up.exponents[0] += 2;
      CHECK(abbv_integrate(d, up) == a2 * abbv_integrate(d, m));
    }
}

TEST_CASE("gs_chern_number") {
  CHECK(gs_chern_number(NProfile{{1, 1, 0, 0, 1, 1}}, 5) == 92);
  CHECK(gs_chern_number(NProfile{{0, 1, 1, 1, 1, 0}}, 5) == 20);
  CHECK(gs_chern_number(NProfile{{0, 0, 2, 2, 0, 0}}, 5) == -4);
}

TEST_CASE("gs_cross_check") {
  CHECK(abbv_integrate(fixtures::cp5(), mono({1, 0, 0, 1, 0})) == Rat(90));
  CHECK(gs_chern_number(n_profile(fixtures::cp5()), 5) == 90);
  CHECK(!gs_cross_check(fixtures::cp5()));

  CHECK(gs_chern_number(n_profile(fixtures::s6()), 3) == 0);
  CHECK(!gs_cross_check(fixtures::s6()));

  CHECK(abbv_integrate(fixtures::cp2(), mono({2, 0})) == Rat(9));
  CHECK(gs_chern_number(n_profile(fixtures::cp2()), 2) == 9);
  CHECK(!gs_cross_check(fixtures::cp2()));

  for (const auto& [name, d] : fixtures::all()) {
    INFO(name);
    CHECK(!gs_cross_check(d));
  }
}

TEST_CASE("abbv invariances") {
  std::mt19937_64 rng(3);
  FixedPointDataset d = fixtures::cp2xs6();
  ChernTable base = chern_table(d);

  FixedPointDataset shuffled = d;
  std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
  for (auto& p : shuffled.points) std::shuffle(p.weights.begin(), p.weights.end(), rng);
  CHECK(chern_table(shuffled) == base);

  // Scaling by c multiplies a degree-k sum by c^{k-n}; degree-n Chern numbers
  // are scale-invariant.
  FixedPointDataset scaled = d;
  for (auto& p : scaled.points)
    for (auto& w : p.weights) w *= 3;
  CHECK(chern_table(scaled) == base);
  for (int deg = 0; deg < d.n; ++deg)
    for (const auto& m : monomials_of_degree(d.n, deg)) {
      Rat factor = rat_pow(Rat(3), deg - d.n);
      CHECK(abbv_integrate(scaled, m) == factor * abbv_integrate(d, m));
    }
}
