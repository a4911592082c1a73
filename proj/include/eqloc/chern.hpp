#ifndef EQLOC_CHERN_HPP
#define EQLOC_CHERN_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqloc/dataset.hpp"

namespace eqloc {

// Exponent vector (j_1, ..., j_n) encoding c_1^{j_1} ... c_n^{j_n}.
struct ChernMonomial {
  std::vector<int> exponents;

  int degree() const {
    int d = 0;
    for (size_t k = 0; k < exponents.size(); ++k) d += static_cast<int>(k + 1) * exponents[k];
    return d;
  }

  std::string name() const {
    std::string s;
    for (size_t k = 0; k < exponents.size(); ++k) {
      if (exponents[k] == 0) continue;
      if (!s.empty()) s += " ";
      s += "c" + std::to_string(k + 1);
      if (exponents[k] > 1) s += "^" + std::to_string(exponents[k]);
    }
    return s.empty() ? "1" : s;
  }

  auto operator<=>(const ChernMonomial&) const = default;
};

// All exponent vectors of the given weighted degree, in descending
// lexicographic order (so reports are byte-stable, c_1-heavy terms first).
inline std::vector<ChernMonomial> monomials_of_degree(int n, int degree) {
  std::vector<ChernMonomial> out;
  std::vector<int> cur(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int k, int remaining) -> void {
    if (k == n) {
      if (remaining == 0) out.push_back({cur});
      return;
    }
    if (k == n - 1) {
      if (remaining % n == 0) {
        cur[static_cast<size_t>(k)] = remaining / n;
        out.push_back({cur});
        cur[static_cast<size_t>(k)] = 0;
      }
      return;
    }
    for (int j = remaining / (k + 1); j >= 0; --j) {
      cur[static_cast<size_t>(k)] = j;
      self(self, k + 1, remaining - j * (k + 1));
    }
    cur[static_cast<size_t>(k)] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// c_k|_p = sigma_k(weights) (the t^k factor is implicit).
inline Int chern_class_at_point(const FixedPoint& p, int k) {
  const int n = static_cast<int>(p.weights.size());
  if (k < 0 || k > n) throw std::invalid_argument("chern_class_at_point: k out of range");
  std::vector<Int> e(static_cast<size_t>(n) + 1, Int(0));
  e[0] = 1;
  for (long long w : p.weights)
    for (int j = n; j >= 1; --j) e[static_cast<size_t>(j)] += Int(w) * e[static_cast<size_t>(j - 1)];
  return e[static_cast<size_t>(k)];
}

// ABBV localization of the monomial: sum over points of
//   prod_k sigma_k(w_p)^{j_k} / prod_i w_{p,i}.
// Degree-n monomials are candidate Chern numbers; lower degrees must vanish
// for genuine data, but the raw value is returned and judged elsewhere.
inline Rat abbv_integrate(const FixedPointDataset& d, const ChernMonomial& m) {
  if (m.degree() > d.n) throw std::invalid_argument("abbv_integrate: monomial degree exceeds n");
  Rat total(0);
  for (const auto& p : d.points) {
    Int num(1);
    for (size_t k = 0; k < m.exponents.size(); ++k)
      for (int rep = 0; rep < m.exponents[k]; ++rep)
        num *= chern_class_at_point(p, static_cast<int>(k + 1));
    total += Rat(num) / Rat(weight_product(p));
  }
  return total;
}

using ChernTable = std::map<ChernMonomial, Rat, std::greater<ChernMonomial>>;

inline ChernTable chern_table(const FixedPointDataset& d) {
  ChernTable t;
  for (const auto& m : monomials_of_degree(d.n, d.n)) t.emplace(m, abbv_integrate(d, m));
  return t;
}

struct ChernViolation {
  ChernMonomial monomial;
  Rat value;

  std::string describe() const { return monomial.name() + " = " + to_string(value); }
};

// Every Chern number of a genuine manifold is an integer.
inline std::vector<ChernViolation> integrality_check(const ChernTable& t) {
  std::vector<ChernViolation> out;
  for (const auto& [m, v] : t)
    if (!is_integer(v)) out.push_back({m, v});
  return out;
}

// Localization sums of weighted degree below n vanish (the push-forward lands
// in negative ordinary degree).
inline std::vector<ChernViolation> vanishing_check(const FixedPointDataset& d) {
  std::vector<ChernViolation> out;
  for (int deg = 0; deg < d.n; ++deg)
    for (const auto& m : monomials_of_degree(d.n, deg)) {
      Rat v = abbv_integrate(d, m);
      if (v != 0) out.push_back({m, v});
    }
  return out;
}

// With 4 fixed points and n >= 4, every Chern number carrying a c_1^2 factor
// vanishes.
inline std::vector<ChernViolation> c1sq_divisibility_check(const FixedPointDataset& d) {
  if (d.points.size() != 4 || d.n < 4)
    throw std::invalid_argument("c1sq_divisibility_check requires 4 points and n >= 4");
  std::vector<ChernViolation> out;
  for (const auto& m : monomials_of_degree(d.n, d.n)) {
    if (m.exponents[0] < 2) continue;
    Rat v = abbv_integrate(d, m);
    if (v != 0) out.push_back({m, v});
  }
  return out;
}

// Godinho-Sabatini closed form:
//   int_M c_1 c_{n-1} = sum_i N_i [6i(i-1) + (5n - 3n^2)/2].
// Computed in exact rationals; the bracket always combines to an integer, and
// that is asserted rather than assumed.
inline Int gs_chern_number(const NProfile& profile, int n) {
  if (n < 1) throw std::invalid_argument("gs_chern_number: n must be positive");
  Rat total(0);
  Rat shift(5LL * n - 3LL * n * n, 2);
  for (size_t i = 0; i < profile.counts.size(); ++i)
    total += Rat(profile.counts[i]) * (Rat(6LL * static_cast<long long>(i) * (static_cast<long long>(i) - 1)) + shift);
  if (!is_integer(total)) throw std::logic_error("gs_chern_number: non-integer total");
  return integer_value(total);
}

// The c_1 c_{n-1} monomial as an exponent vector.
inline ChernMonomial c1_cnm1_monomial(int n) {
  ChernMonomial m;
  m.exponents.assign(static_cast<size_t>(n), 0);
  if (n == 1) {
    m.exponents[0] = 1;
  } else {
    m.exponents[0] += 1;
    m.exponents[static_cast<size_t>(n - 2)] += 1;
  }
  return m;
}

// Cross-check the localization value of c_1 c_{n-1} against the closed form.
// Returns a description of the mismatch, or nullopt on agreement.
inline std::optional<std::string> gs_cross_check(const FixedPointDataset& d) {
  Rat lhs = abbv_integrate(d, c1_cnm1_monomial(d.n));
  Int rhs = gs_chern_number(n_profile(d), d.n);
  if (lhs == Rat(rhs)) return std::nullopt;
  return "ABBV c1*c" + std::to_string(d.n - 1) + " = " + to_string(lhs) +
         " but the N-profile formula gives " + to_string(rhs);
}

}  // namespace eqloc

#endif
