#ifndef EQLOC_FIXTURES_HPP
#define EQLOC_FIXTURES_HPP

#include <map>
#include <string>
#include <vector>

#include "eqloc/dataset.hpp"

namespace eqloc {

// Built-in weight data for standard circle actions. Each fixture passes the
// full certifier (asserted in the test suite).
namespace fixtures {

inline FixedPointDataset make(int n, std::vector<std::vector<long long>> pts, std::string label) {
  FixedPointDataset d;
  d.n = n;
  d.label = std::move(label);
  int idx = 0;
  for (auto& w : pts) d.points.push_back({std::move(w), "p" + std::to_string(idx++)});
  d.validate();
  return d;
}

// Standard linear action on CP^2: weights a_j - a_k at point k, a = (0,1,2).
inline FixedPointDataset cp2() {
  return make(2, {{1, 2}, {-1, 1}, {-2, -1}}, "cp2");
}

// Standard linear action on CP^5: point k has weights {j - k : j != k}.
inline FixedPointDataset cp5() {
  std::vector<std::vector<long long>> pts;
  for (int k = 0; k <= 5; ++k) {
    std::vector<long long> w;
    for (int j = 0; j <= 5; ++j)
      if (j != k) w.push_back(j - k);
    pts.push_back(std::move(w));
  }
  return make(5, std::move(pts), "cp5");
}

inline FixedPointDataset s6() {
  return make(3, {{1, 2, -3}, {-1, -2, 3}}, "s6");
}

// S^2 x S^6 with rotation weight 7 on the S^2 factor.
inline FixedPointDataset s2xs6() {
  return make(4,
              {{7, 1, 2, -3}, {7, -1, -2, 3}, {-7, 1, 2, -3}, {-7, -1, -2, 3}},
              "s2xs6");
}

// Diagonal action on CP^2 x S^6: concatenated weight vectors.
inline FixedPointDataset cp2xs6() {
  std::vector<std::vector<long long>> pts;
  for (const auto& a : {std::vector<long long>{1, 2}, {-1, 1}, {-2, -1}})
    for (const auto& b : {std::vector<long long>{1, 2, -3}, {-1, -2, 3}}) {
      std::vector<long long> w = a;
      w.insert(w.end(), b.begin(), b.end());
      pts.push_back(std::move(w));
    }
  return make(5, std::move(pts), "cp2xs6");
}

inline std::map<std::string, FixedPointDataset> all() {
  return {{"cp2", cp2()}, {"cp5", cp5()}, {"s6", s6()}, {"s2xs6", s2xs6()}, {"cp2xs6", cp2xs6()}};
}

}  // namespace fixtures
}  // namespace eqloc

#endif
