#ifndef EQLOC_THEOREM_HPP
#define EQLOC_THEOREM_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqloc/certify.hpp"
#include "eqloc/chern.hpp"
#include "eqloc/dataset.hpp"

namespace eqloc {

// Admissible N-profiles for 4 fixed points in dimension 10: non-negative,
// summing to 4, symmetric, and with the lowest nonzero count followed by a
// nonzero neighbour (the adjacency property the case analysis runs on; the
// bare exists-a-consecutive-pair condition would also admit (1,0,1,1,0,1)).
inline std::vector<NProfile> enumerate_cases() {
  std::vector<NProfile> out;
  std::vector<long long> c(6, 0);
  auto rec = [&](auto&& self, size_t i, long long remaining) -> void {
    if (i == 6) {
      if (remaining != 0) return;
      NProfile prof{c};
      if (!prof.symmetric()) return;
      size_t j = 0;
      while (j < 6 && c[j] == 0) ++j;
      if (j >= 5 || c[j + 1] == 0) return;
      out.push_back(std::move(prof));
      return;
    }
    for (long long v = 0; v <= remaining; ++v) {
      c[i] = v;
      self(self, i + 1, remaining - v);
    }
    c[i] = 0;
  };
  rec(rec, 0, 4);
  return out;
}

// One profile case of the dimension-10, 4-fixed-point analysis. With
// c1^3 c2 = c1^2 c3 = 0 the Todd identity reduces to
//   1440 Todd = -c1c4 + 3 c1c2^2,
// which determines c1c2^2; a non-integral value is the contradiction.
struct CaseReport {
  NProfile profile;
  Int todd;
  Int c1c4;
  Rat c1c2sq;
  bool contradiction = false;
};

inline CaseReport case_contradiction(const NProfile& profile) {
  CaseReport r;
  r.profile = profile;
  r.todd = profile.counts.front();
  r.c1c4 = gs_chern_number(profile, 5);
  r.c1c2sq = Rat(1440 * r.todd + r.c1c4, 3);
  r.contradiction = !is_integer(r.c1c2sq);
  return r;
}

struct ProofReport {
  std::vector<CaseReport> cases;
  bool all_contradictory = false;
  std::vector<std::string> conclusion;
};

// Mechanical reproduction of the non-existence argument for 4 fixed points in
// dimension 10, and of the resulting lower bound of 6.
inline ProofReport reproduce_theorem() {
  ProofReport rep;
  for (const auto& prof : enumerate_cases()) rep.cases.push_back(case_contradiction(prof));
  rep.all_contradictory =
      std::all_of(rep.cases.begin(), rep.cases.end(), [](const CaseReport& c) { return c.contradiction; });
  if (!rep.all_contradictory)
    throw std::logic_error("reproduce_theorem: a profile case came out consistent");
  rep.conclusion = {
      "dim 10 is not divisible by 4, so the number of fixed points is even",
      "2 fixed points force dim 2 or dim 6, so the count is not 2",
      "all " + std::to_string(rep.cases.size()) +
          " admissible N-profiles for 4 fixed points force a non-integral Chern number c1c2^2",
      "therefore a circle action on a 10-dimensional compact almost complex manifold with a fixed point has at least 6 fixed points",
  };
  return rep;
}

// Canonical representative under weight/point permutation and uniform
// scaling: divide by the global gcd, sort weights within each point, sort
// points lexicographically.
inline FixedPointDataset canonicalize(const FixedPointDataset& d) {
  FixedPointDataset out = d;
  long long g = 0;
  for (const auto& p : out.points)
    for (long long w : p.weights) g = std::gcd(g, w);
  for (auto& p : out.points) {
    for (auto& w : p.weights) w /= g;
    std::sort(p.weights.begin(), p.weights.end());
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const FixedPoint& a, const FixedPoint& b) { return a.weights < b.weights; });
  for (size_t i = 0; i < out.points.size(); ++i) out.points[i].id = "p" + std::to_string(i);
  return out;
}

struct SearchReport {
  int bound = 0;
  long long candidates = 0;
  // (stage name, candidates rejected there), in pipeline order.
  std::vector<std::pair<std::string, long long>> rejected;
  long long passing = 0;
  std::vector<FixedPointDataset> passing_datasets;
};

namespace detail {

struct PointStats {
  std::vector<long long> weights;  // sorted
  int negatives = 0;
  long long sum = 0;
  long long product = 1;
  long long gcd = 0;
};

inline std::vector<PointStats> candidate_points(int bound, int n) {
  std::vector<PointStats> out;
  std::vector<long long> cur(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int i, long long minval) -> void {
    if (i == n) {
      PointStats ps;
      ps.weights = cur;
      for (long long w : cur) {
        if (w < 0) ++ps.negatives;
        ps.sum += w;
        ps.product *= w;
        ps.gcd = std::gcd(ps.gcd, w);
      }
      out.push_back(std::move(ps));
      return;
    }
    for (long long w = minval; w <= bound; ++w) {
      if (w == 0) continue;
      cur[static_cast<size_t>(i)] = w;
      self(self, i + 1, w);
    }
  };
  rec(rec, 0, -bound);
  return out;
}

inline bool pairing_stage(const std::array<const PointStats*, 4>& q) {
  static constexpr std::array<std::array<int, 4>, 3> kPairings = {
      {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  bool strong = false;
  for (const auto& pr : kPairings) {
    auto* a = q[static_cast<size_t>(pr[0])];
    auto* b = q[static_cast<size_t>(pr[1])];
    auto* c = q[static_cast<size_t>(pr[2])];
    auto* e = q[static_cast<size_t>(pr[3])];
    if (a->sum == b->sum && c->sum == e->sum && a->sum == -c->sum &&
        a->product == -b->product && c->product == -e->product) {
      strong = true;
      break;
    }
  }
  if (strong) return true;
  if (q[0]->sum || q[1]->sum || q[2]->sum || q[3]->sum) return false;
  Rat inv(0);
  for (const auto* p : q) inv += Rat(1) / Rat(p->product);
  return inv == 0;
}

}  // namespace detail

// Exhaustive search over canonical 4-point datasets in dimension 10 with all
// |w| <= bound. Cheap integer-level checks run first; the symbolic chi
// reduction and full certification only see the survivors. Streams through
// the candidate space without materializing it.
inline SearchReport search_weights(int bound) {
  if (bound < 1) throw std::invalid_argument("search_weights: bound must be >= 1");
  constexpr int kN = 5;
  SearchReport rep;
  rep.bound = bound;
  long long profile_rej = 0, pairing_rej = 0, chern_rej = 0, certify_rej = 0;

  const auto pts = detail::candidate_points(bound, kN);
  const size_t m = pts.size();
  for (size_t i1 = 0; i1 < m; ++i1)
    for (size_t i2 = i1; i2 < m; ++i2)
      for (size_t i3 = i2; i3 < m; ++i3)
        for (size_t i4 = i3; i4 < m; ++i4) {
          long long g = std::gcd(std::gcd(pts[i1].gcd, pts[i2].gcd),
                                 std::gcd(pts[i3].gcd, pts[i4].gcd));
          if (g != 1) continue;  // not canonical; a scaled copy is visited instead
          ++rep.candidates;
          std::array<const detail::PointStats*, 4> q = {&pts[i1], &pts[i2], &pts[i3], &pts[i4]};

          std::array<long long, kN + 1> prof{};
          for (const auto* p : q) ++prof[static_cast<size_t>(p->negatives)];
          bool symmetric = true, consecutive = false;
          for (int i = 0; i <= kN; ++i) {
            if (prof[static_cast<size_t>(i)] != prof[static_cast<size_t>(kN - i)]) symmetric = false;
            if (i < kN && prof[static_cast<size_t>(i)] && prof[static_cast<size_t>(i + 1)])
              consecutive = true;
          }
          if (!symmetric || !consecutive) {
            ++profile_rej;
            continue;
          }
          if (!detail::pairing_stage(q)) {
            ++pairing_rej;
            continue;
          }

          FixedPointDataset d;
          d.n = kN;
          d.label = "candidate";
          for (size_t pi = 0; pi < 4; ++pi) d.points.push_back({q[pi]->weights, "p" + std::to_string(pi)});

          bool chern_ok = vanishing_check(d).empty() && integrality_check(chern_table(d)).empty() &&
                          !gs_cross_check(d) && c1sq_divisibility_check(d).empty();
          if (!chern_ok) {
            ++chern_rej;
            continue;
          }
          if (!certify(d).passed()) {
            ++certify_rej;
            continue;
          }
          ++rep.passing;
          rep.passing_datasets.push_back(d);
        }

  rep.rejected = {{"profile", profile_rej},
                  {"pairing", pairing_rej},
                  {"chern", chern_rej},
                  {"certify", certify_rej}};
  return rep;
}

inline nlohmann::json proof_report_to_json(const ProofReport& rep) {
  nlohmann::json j;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : rep.cases) {
    nlohmann::json jc;
    jc["profile"] = c.profile.counts;
    jc["todd"] = to_string(c.todd);
    jc["c1c4"] = to_string(c.c1c4);
    jc["c1c2sq"] = {{"num", to_string(numerator(c.c1c2sq))}, {"den", to_string(denominator(c.c1c2sq))}};
    jc["verdict"] = c.contradiction ? "contradiction" : "consistent";
    j["cases"].push_back(std::move(jc));
  }
  j["all_contradictory"] = rep.all_contradictory;
  j["conclusion"] = rep.conclusion;
  j["minimum_fixed_points"] = 6;
  return j;
}

inline std::string proof_report_to_text(const ProofReport& rep) {
  std::string out = "4 fixed points in dimension 10: case analysis over N-profiles\n";
  for (const auto& c : rep.cases) {
    out += "  N = " + detail::profile_string(c.profile) + "  Todd = " + to_string(c.todd) +
           "  c1c4 = " + to_string(c.c1c4) + "  c1c2^2 = " + to_string(c.c1c2sq) + "  -> " +
           (c.contradiction ? "contradiction (non-integral Chern number)" : "consistent") + "\n";
  }
  for (const auto& line : rep.conclusion) out += line + "\n";
  return out;
}

inline nlohmann::json search_report_to_json(const SearchReport& rep) {
  nlohmann::json j;
  j["bound"] = rep.bound;
  j["candidates"] = rep.candidates;
  j["rejected"] = nlohmann::json::object();
  for (const auto& [stage, count] : rep.rejected) j["rejected"][stage] = count;
  j["passing"] = rep.passing;
  j["passing_datasets"] = nlohmann::json::array();
  for (const auto& d : rep.passing_datasets) j["passing_datasets"].push_back(dataset_to_json(d));
  return j;
}

inline std::string search_report_to_text(const SearchReport& rep) {
  std::string out = "search: 4 points, dim 10, |w| <= " + std::to_string(rep.bound) + "\n";
  out += "  canonical candidates: " + std::to_string(rep.candidates) + "\n";
  for (const auto& [stage, count] : rep.rejected)
    out += "  rejected at " + stage + ": " + std::to_string(count) + "\n";
  out += "  passing: " + std::to_string(rep.passing) + "\n";
  return out;
}

}  // namespace eqloc

#endif
