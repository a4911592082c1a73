#ifndef EQLOC_DATASET_HPP
#define EQLOC_DATASET_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqloc/rational.hpp"

namespace eqloc {

// Isolated fixed point of a circle action: the n nonzero integer weights on
// the complex line summands of the tangent space.
struct FixedPoint {
  std::vector<long long> weights;
  std::string id;

  bool operator==(const FixedPoint&) const = default;
};

struct FixedPointDataset {
  int n = 0;  // half-dimension, dim M = 2n
  std::vector<FixedPoint> points;
  std::string label;

  int dim() const { return 2 * n; }

  void validate() const {
    if (n < 1) throw std::invalid_argument("n must be a positive integer");
    if (points.empty()) throw std::invalid_argument("point list is empty");
    for (const auto& p : points) {
      if (static_cast<int>(p.weights.size()) != n)
        throw std::invalid_argument("point '" + p.id + "' has " +
                                    std::to_string(p.weights.size()) + " weights, expected " +
                                    std::to_string(n));
      for (long long w : p.weights)
        if (w == 0) throw std::invalid_argument("point '" + p.id + "' has a zero weight");
    }
  }
};

inline int negative_count(const FixedPoint& p) {
  int c = 0;
  for (long long w : p.weights)
    if (w < 0) ++c;
  return c;
}

inline long long weight_sum(const FixedPoint& p) {
  return std::accumulate(p.weights.begin(), p.weights.end(), 0LL);
}

inline Int weight_product(const FixedPoint& p) {
  Int prod(1);
  for (long long w : p.weights) prod *= w;
  return prod;
}

// Counts of fixed points by number of negative weights, (N_0, ..., N_n).
struct NProfile {
  std::vector<long long> counts;

  long long total() const { return std::accumulate(counts.begin(), counts.end(), 0LL); }

  bool symmetric() const {
    size_t m = counts.size();
    for (size_t i = 0; i < m; ++i)
      if (counts[i] != counts[m - 1 - i]) return false;
    return true;
  }

  // Some index i has N_i != 0 and N_{i+1} != 0.
  bool has_consecutive_nonzero() const {
    for (size_t i = 0; i + 1 < counts.size(); ++i)
      if (counts[i] != 0 && counts[i + 1] != 0) return true;
    return false;
  }

  bool operator==(const NProfile&) const = default;
};

inline NProfile n_profile(const FixedPointDataset& d) {
  NProfile prof;
  prof.counts.assign(static_cast<size_t>(d.n) + 1, 0);
  for (const auto& p : d.points) ++prof.counts[static_cast<size_t>(negative_count(p))];
  return prof;
}

// --- On-disk format ---
//
// A dataset file is a JSON object:
//   { "n": <positive integer>,
//     "points": [ [w1, ..., wn], ... ],
//     "label": <optional string> }
// Unknown fields are reported as warnings, not failures.

struct ParseResult {
  FixedPointDataset dataset;
  std::vector<std::string> warnings;
};

inline ParseResult parse_dataset_json(const nlohmann::json& j) {
  ParseResult res;
  if (!j.is_object()) throw std::invalid_argument("dataset document must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("missing or non-integer field 'n'");
  if (!j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("missing or non-array field 'points'");
  res.dataset.n = j["n"].get<int>();
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw std::invalid_argument("field 'label' must be a string");
    res.dataset.label = j["label"].get<std::string>();
  }
  for (auto& [key, value] : j.items()) {
    if (key != "n" && key != "points" && key != "label")
      res.warnings.push_back("unknown field '" + key + "' ignored");
  }
  size_t idx = 0;
  for (const auto& jp : j["points"]) {
    if (!jp.is_array()) throw std::invalid_argument("each point must be an array of integers");
    FixedPoint p;
    p.id = "p" + std::to_string(idx++);
    for (const auto& jw : jp) {
      if (!jw.is_number_integer()) throw std::invalid_argument("weights must be integers");
      p.weights.push_back(jw.get<long long>());
    }
    res.dataset.points.push_back(std::move(p));
  }
  res.dataset.validate();
  return res;
}

inline ParseResult parse_dataset(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed dataset document: ") + e.what());
  }
  return parse_dataset_json(j);
}

inline nlohmann::json dataset_to_json(const FixedPointDataset& d) {
  nlohmann::json j;
  j["n"] = d.n;
  j["points"] = nlohmann::json::array();
  for (const auto& p : d.points) j["points"].push_back(p.weights);
  if (!d.label.empty()) j["label"] = d.label;
  return j;
}

}  // namespace eqloc

#endif
