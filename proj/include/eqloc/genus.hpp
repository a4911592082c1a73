#ifndef EQLOC_GENUS_HPP
#define EQLOC_GENUS_HPP

#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "eqloc/dataset.hpp"
#include "eqloc/ratfun.hpp"

namespace eqloc {

// Fixed-point contribution to chi^i:
//   sigma_i(g^{w_1}, ..., g^{w_n}) / prod_j (1 - g^{w_j}),
// sigma_i expanded directly over i-subsets (n <= 6 in practice).
inline RationalFunction chi_term(const FixedPoint& p, int i) {
  const int n = static_cast<int>(p.weights.size());
  Laurent num;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != i) continue;
    long s = 0;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) s += static_cast<long>(p.weights[j]);
    num += Laurent::monomial(s);
  }
  Laurent den(1);
  for (long long w : p.weights)
    den = den * (Laurent(1) - Laurent::monomial(static_cast<long>(w)));
  return RationalFunction(std::move(num), std::move(den));
}

// One coefficient chi^i of the chi_y-genus. A sum that does not reduce to a
// constant integer is a certification verdict, not an error; the reduced
// function is kept as the witness.
struct ChiValue {
  std::optional<Rat> constant;
  RationalFunction reduced;

  bool is_integer() const { return constant && eqloc::is_integer(*constant); }
  Int value() const { return integer_value(*constant); }
};

inline ChiValue chi_number(const FixedPointDataset& d, int i) {
  RationalFunction sum;
  for (const auto& p : d.points) sum += chi_term(p, i);
  return ChiValue{sum.constant_value(), sum};
}

struct ChiVector {
  std::vector<ChiValue> values;  // indices 0..n

  bool all_integer() const {
    for (const auto& v : values)
      if (!v.is_integer()) return false;
    return true;
  }
};

inline ChiVector chi_vector(const FixedPointDataset& d) {
  ChiVector cv;
  for (int i = 0; i <= d.n; ++i) cv.values.push_back(chi_number(d, i));
  return cv;
}

// Todd(M) = chi^0.
inline std::optional<Int> todd_genus(const ChiVector& cv) {
  if (!cv.values.front().is_integer()) return std::nullopt;
  return cv.values.front().value();
}
inline std::optional<Int> todd_genus(const FixedPointDataset& d) { return todd_genus(chi_vector(d)); }

// chi_{-1}(M) = sum_i (-1)^i chi^i.
inline std::optional<Int> euler_number(const ChiVector& cv) {
  if (!cv.all_integer()) return std::nullopt;
  Int e(0);
  for (size_t i = 0; i < cv.values.size(); ++i)
    e += (i % 2 == 0 ? cv.values[i].value() : -cv.values[i].value());
  return e;
}
inline std::optional<Int> euler_number(const FixedPointDataset& d) { return euler_number(chi_vector(d)); }

// chi_1(M) = sum_i chi^i. Informational only.
inline std::optional<Int> signature(const ChiVector& cv) {
  if (!cv.all_integer()) return std::nullopt;
  Int s(0);
  for (const auto& v : cv.values) s += v.value();
  return s;
}
inline std::optional<Int> signature(const FixedPointDataset& d) { return signature(chi_vector(d)); }

// Structural conditions tying the chi^i to the N-profile:
//   chi^i = (-1)^i N_i, N_i = N_{n-i}, N_i >= 0, sum N_i = #points.
inline std::vector<std::string> check_chi_structure(const FixedPointDataset& d, const ChiVector& cv) {
  std::vector<std::string> violations;
  NProfile prof = n_profile(d);
  for (int i = 0; i <= d.n; ++i) {
    const ChiValue& v = cv.values[static_cast<size_t>(i)];
    if (!v.constant) {
      violations.push_back("chi^" + std::to_string(i) + " does not reduce to a constant");
      continue;
    }
    if (!v.is_integer()) {
      violations.push_back("chi^" + std::to_string(i) + " = " + to_string(*v.constant) +
                           " is not an integer");
      continue;
    }
    Int expected = prof.counts[static_cast<size_t>(i)];
    if (i % 2 == 1) expected = -expected;
    if (v.value() != expected)
      violations.push_back("chi^" + std::to_string(i) + " = " + to_string(v.value()) +
                           ", expected (-1)^i N_i = " + to_string(expected));
  }
  if (!prof.symmetric()) {
    std::string s = "N-profile not symmetric: (";
    for (size_t i = 0; i < prof.counts.size(); ++i)
      s += (i ? "," : "") + std::to_string(prof.counts[i]);
    violations.push_back(s + ")");
  }
  if (prof.total() != static_cast<long long>(d.points.size()))
    violations.push_back("sum of N_i differs from the number of fixed points");
  return violations;
}

inline std::vector<std::string> check_chi_structure(const FixedPointDataset& d) {
  return check_chi_structure(d, chi_vector(d));
}

}  // namespace eqloc

#endif
