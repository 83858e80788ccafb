#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starspec/graph.hpp"

namespace starspec {

/// Vertex-disjoint union of stars S_{d_1}, ..., S_{d_k} with
/// d_1 >= ... >= d_k >= 1.
class StarForest {
 public:
  /// Sorts descending. Throws Error{param_out_of_range} on an empty list
  /// or a degree below 1.
  explicit StarForest(std::vector<int> degrees);

  /// Accepts "d1,d2,...,dk" (any order) and "k:d1,...,dk".
  static StarForest parse(std::string_view text);

  std::span<const int> degrees() const { return degrees_; }
  int k() const { return static_cast<int>(degrees_.size()); }
  int sum_degrees() const { return sum_; }
  int order() const { return sum_ + k(); }
  int largest() const { return degrees_.front(); }
  int smallest() const { return degrees_.back(); }

  std::string to_string() const;          // "d1,d2,...,dk"
  std::string to_compact_string() const;  // "k:d1,d2,...,dk"

  friend auto operator<=>(const StarForest&, const StarForest&) = default;

 private:
  std::vector<int> degrees_;
  int sum_ = 0;
};

/// The forest itself as a graph; star i has its center before its leaves.
Graph star_forest_graph(const StarForest& f);

/// Exact containment test. Centers are chosen per role (equal degrees
/// collapsed), then leaves are assigned by augmenting paths in the network
/// source -> center (capacity d_i) -> non-center neighbor (1) -> sink (1).
bool contains_star_forest(const Graph& g, const StarForest& f);

/// Exhaustive search over ordered center tuples and leaf subsets. Exponential;
/// meant as an independent check for small graphs.
bool contains_star_forest_oracle(const Graph& g, const StarForest& f);

inline bool is_f_free(const Graph& g, const StarForest& f) { return !contains_star_forest(g, f); }

/// Coarse edge bound for F-free graphs of order n >= sum d_i + k:
/// (sum d_i + 2k - 3) n - (k - 1)(sum d_i + k - 1). Requires k >= 2.
std::int64_t edge_bound_coarse(const StarForest& f, std::int64_t n);

/// Extremal edge count for F-free graphs of large order:
/// max_i (i-1)(n-i+1) + C(i-1, 2) + floor((d_i - 1)(n-i+1) / 2).
/// Requires k >= 2, d_k >= 2, n >= order of F.
std::int64_t edge_bound_large_order(const StarForest& f, std::int64_t n);

}  // namespace starspec
