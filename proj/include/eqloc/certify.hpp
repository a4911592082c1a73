#ifndef EQLOC_CERTIFY_HPP
#define EQLOC_CERTIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqloc/chern.hpp"
#include "eqloc/dataset.hpp"
#include "eqloc/genus.hpp"

namespace eqloc {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  std::string paper_ref;
};

// Structured pass/fail record of every necessary condition, with exact
// witness values. Skipped checks (inapplicable preconditions) never fail the
// verdict; checks never short-circuit.
struct Certificate {
  std::string label;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
};

namespace detail {

inline std::string profile_string(const NProfile& prof) {
  std::string s = "(";
  for (size_t i = 0; i < prof.counts.size(); ++i) s += (i ? "," : "") + std::to_string(prof.counts[i]);
  return s + ")";
}

inline std::string join_violations(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

inline std::string join_violations(const std::vector<ChernViolation>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x.describe();
  return s;
}

}  // namespace detail

// An odd number of fixed points forces dim M divisible by 4.
inline CheckResult check_parity(const FixedPointDataset& d) {
  CheckResult r{"parity", CheckStatus::pass, "", "parity of the fixed-point count"};
  size_t k = d.points.size();
  if (d.dim() % 4 != 0 && k % 2 != 0) {
    r.status = CheckStatus::fail;
    r.witness = "dim " + std::to_string(d.dim()) + " is not divisible by 4 but there are " +
                std::to_string(k) + " fixed points";
  } else {
    r.witness = std::to_string(k) + " points, dim " + std::to_string(d.dim());
  }
  return r;
}

// Classification with at most 3 fixed points: 1 point -> dim 0, 2 points ->
// dim 2 or 6, 3 points -> dim 4. Inapplicable for 4 or more points.
inline CheckResult check_few_points(const FixedPointDataset& d) {
  CheckResult r{"few-points", CheckStatus::pass, "", "classification of actions with at most 3 fixed points"};
  size_t k = d.points.size();
  int dim = d.dim();
  bool bad = (k == 1 && dim != 0) || (k == 2 && dim != 2 && dim != 6) || (k == 3 && dim != 4);
  if (k >= 4) {
    r.status = CheckStatus::skipped;
    r.witness = "only applies to at most 3 fixed points";
  } else if (bad) {
    r.status = CheckStatus::fail;
    r.witness = std::to_string(k) + " fixed points cannot occur in dim " + std::to_string(dim);
  } else {
    r.witness = std::to_string(k) + " points, dim " + std::to_string(dim);
  }
  return r;
}

// Some pair of consecutive N_i are both nonzero.
inline CheckResult check_consecutive(const NProfile& prof) {
  CheckResult r{"consecutive-nonzero", CheckStatus::pass, detail::profile_string(prof),
                "two consecutive nonzero chi_y coefficients"};
  if (!prof.has_consecutive_nonzero()) {
    r.status = CheckStatus::fail;
    r.witness = "no index i with N_i != 0 and N_{i+1} != 0 in " + detail::profile_string(prof);
  }
  return r;
}

// For 4 fixed points and n >= 4 the weight sums pair up as (a, a, -a, -a);
// moreover either all sums vanish together with sum of 1/prod(w), or some
// pairing also satisfies the product conditions prod(q1) = -prod(q2),
// prod(q3) = -prod(q4). Failure of both branches fails the check.
inline CheckResult check_pairing(const FixedPointDataset& d) {
  CheckResult r{"pairing", CheckStatus::pass, "", "pairing of weight sums for 4 fixed points"};
  if (d.points.size() != 4 || d.n < 4) {
    r.status = CheckStatus::skipped;
    r.witness = "only applies to 4 fixed points with n >= 4";
    return r;
  }
  std::array<long long, 4> s;
  std::array<Int, 4> pr;
  for (int i = 0; i < 4; ++i) {
    s[static_cast<size_t>(i)] = weight_sum(d.points[static_cast<size_t>(i)]);
    pr[static_cast<size_t>(i)] = weight_product(d.points[static_cast<size_t>(i)]);
  }
  static constexpr std::array<std::array<int, 4>, 3> kPairings = {
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  bool weak = false;
  bool strong_pairing = false;
  for (const auto& q : kPairings) {
    auto su = [&](int i) { return s[static_cast<size_t>(q[static_cast<size_t>(i)])]; };
    auto pu = [&](int i) -> const Int& { return pr[static_cast<size_t>(q[static_cast<size_t>(i)])]; };
    if (su(0) == su(1) && su(2) == su(3) && su(0) == -su(2)) {
      weak = true;
      if (pu(0) == -pu(1) && pu(2) == -pu(3)) strong_pairing = true;
    }
  }
  Rat inv_sum(0);
  for (const auto& p : pr) inv_sum += Rat(1) / Rat(p);
  bool all_zero_branch = (s[0] == 0 && s[1] == 0 && s[2] == 0 && s[3] == 0 && inv_sum == 0);

  std::string sums = "sums (" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                     std::to_string(s[2]) + "," + std::to_string(s[3]) + ")";
  if (!weak) {
    r.status = CheckStatus::fail;
    r.witness = "no pairing with " + sums + " of the form (a,a,-a,-a)";
  } else if (!all_zero_branch && !strong_pairing) {
    r.status = CheckStatus::fail;
    r.witness = sums + " pair up but neither the all-zero branch nor the product conditions hold";
  } else {
    r.witness = sums;
    if (all_zero_branch) r.witness += "; all-zero branch holds (sum of 1/prod(w) = 0)";
    if (strong_pairing) r.witness += "; product-condition branch holds";
  }
  return r;
}

// Dimension-10 Todd identity:
//   chi^0 = (1/1440)(-c1c4 + c1^2 c3 + 3 c1 c2^2 - c1^3 c2).
inline CheckResult check_todd_identity(const FixedPointDataset& d, const ChiVector& cv,
                                       const ChernTable& table) {
  CheckResult r{"todd-identity", CheckStatus::pass, "", "Todd genus identity in dimension 10"};
  if (d.n != 5) {
    r.status = CheckStatus::skipped;
    r.witness = "only applies in dimension 10";
    return r;
  }
  if (!cv.values.front().is_integer()) {
    r.status = CheckStatus::skipped;
    r.witness = "chi^0 is not a constant integer";
    return r;
  }
  auto entry = [&](std::array<int, 5> e) {
    return table.at(ChernMonomial{{e[0], e[1], e[2], e[3], e[4]}});
  };
  Rat rhs = (-entry({1, 0, 0, 1, 0}) + entry({2, 0, 1, 0, 0}) + Rat(3) * entry({1, 2, 0, 0, 0}) -
             entry({3, 1, 0, 0, 0})) /
            Rat(1440);
  Rat lhs(cv.values.front().value());
  if (lhs == rhs) {
    r.witness = "Todd = " + to_string(lhs) + " matches the Chern-number combination";
  } else {
    r.status = CheckStatus::fail;
    r.witness = "Todd = " + to_string(lhs) + " but the Chern-number combination gives " + to_string(rhs);
  }
  return r;
}

inline CheckResult check_todd_identity(const FixedPointDataset& d) {
  if (d.n != 5) {
    CheckResult r{"todd-identity", CheckStatus::skipped, "only applies in dimension 10",
                  "Todd genus identity in dimension 10"};
    return r;
  }
  return check_todd_identity(d, chi_vector(d), chern_table(d));
}

// Runs every applicable check in a fixed order and records all outcomes.
inline Certificate certify(const FixedPointDataset& d) {
  Certificate cert;
  cert.label = d.label;

  {
    CheckResult r{"validation", CheckStatus::pass,
                  std::to_string(d.points.size()) + " points with " + std::to_string(d.n) +
                      " nonzero weights each",
                  "weights at isolated fixed points"};
    try {
      d.validate();
    } catch (const std::invalid_argument& e) {
      r.status = CheckStatus::fail;
      r.witness = e.what();
    }
    cert.checks.push_back(std::move(r));
  }

  NProfile prof = n_profile(d);
  ChiVector cv = chi_vector(d);
  ChernTable table = chern_table(d);

  cert.checks.push_back(check_parity(d));
  cert.checks.push_back(check_few_points(d));

  {
    auto violations = check_chi_structure(d, cv);
    CheckResult r{"chi-structure", CheckStatus::pass, "N = " + detail::profile_string(prof),
                  "fixed-point formula for the chi_y coefficients"};
    if (!violations.empty()) {
      r.status = CheckStatus::fail;
      r.witness = detail::join_violations(violations);
    }
    cert.checks.push_back(std::move(r));
  }

  cert.checks.push_back(check_consecutive(prof));

  {
    CheckResult r{"chi-constancy", CheckStatus::pass, "", "chi_y sums reduce to constants"};
    std::vector<std::string> bad;
    for (int i = 0; i <= d.n; ++i)
      if (!cv.values[static_cast<size_t>(i)].is_integer())
        bad.push_back("chi^" + std::to_string(i));
    if (bad.empty()) {
      std::string s;
      for (const auto& v : cv.values) s += (s.empty() ? "(" : ",") + to_string(v.value());
      r.witness = "chi = " + s + ")";
    } else {
      r.status = CheckStatus::fail;
      r.witness = detail::join_violations(bad) + " not constant integers";
    }
    cert.checks.push_back(std::move(r));
  }

  {
    auto violations = vanishing_check(d);
    CheckResult r{"vanishing", CheckStatus::pass, "all localization sums of degree < n vanish",
                  "dimensional vanishing under localization"};
    if (!violations.empty()) {
      r.status = CheckStatus::fail;
      r.witness = detail::join_violations(violations);
    }
    cert.checks.push_back(std::move(r));
  }

  {
    auto violations = integrality_check(table);
    CheckResult r{"integrality", CheckStatus::pass, "all Chern numbers are integers",
                  "integrality of Chern numbers"};
    if (!violations.empty()) {
      r.status = CheckStatus::fail;
      r.witness = detail::join_violations(violations);
    }
    cert.checks.push_back(std::move(r));
  }

  {
    auto mismatch = gs_cross_check(d);
    CheckResult r{"gs-cross-check", CheckStatus::pass,
                  "c1*c" + std::to_string(d.n - 1) + " = " +
                      to_string(gs_chern_number(prof, d.n)),
                  "closed form for c1*c(n-1) from the N-profile"};
    if (mismatch) {
      r.status = CheckStatus::fail;
      r.witness = *mismatch;
    }
    cert.checks.push_back(std::move(r));
  }

  cert.checks.push_back(check_pairing(d));

  {
    CheckResult r{"c1sq-vanishing", CheckStatus::pass, "",
                  "vanishing of Chern numbers with a c1^2 factor"};
    if (d.points.size() != 4 || d.n < 4) {
      r.status = CheckStatus::skipped;
      r.witness = "only applies to 4 fixed points with n >= 4";
    } else {
      auto violations = c1sq_divisibility_check(d);
      if (violations.empty()) {
        r.witness = "all degree-n monomials with j_1 >= 2 vanish";
      } else {
        r.status = CheckStatus::fail;
        r.witness = detail::join_violations(violations);
      }
    }
    cert.checks.push_back(std::move(r));
  }

  cert.checks.push_back(check_todd_identity(d, cv, table));
  return cert;
}

inline nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  j["label"] = cert.label;
  j["verdict"] = cert.passed() ? "pass" : "fail";
  j["checks"] = nlohmann::json::array();
  for (const auto& c : cert.checks)
    j["checks"].push_back({{"check", c.check},
                           {"status", to_string(c.status)},
                           {"witness", c.witness},
                           {"paper_ref", c.paper_ref}});
  j["warnings"] = cert.warnings;
  return j;
}

inline std::string certificate_to_text(const Certificate& cert) {
  std::string out = "dataset: " + (cert.label.empty() ? std::string("(unlabeled)") : cert.label) + "\n";
  for (const auto& w : cert.warnings) out += "warning: " + w + "\n";
  for (const auto& c : cert.checks) {
    std::string status = to_string(c.status);
    out += "[" + status + "]" + std::string(status.size() < 7 ? 8 - status.size() : 1, ' ') +
           c.check;
    if (!c.witness.empty()) out += ": " + c.witness;
    out += "\n";
  }
  out += std::string("verdict: ") + (cert.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace eqloc

#endif
