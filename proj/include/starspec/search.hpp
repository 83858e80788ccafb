#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starspec/enumeration.hpp"
#include "starspec/graph.hpp"
#include "starspec/star_forest.hpp"

namespace starspec {

/// Outcome of an exhaustive scan for the F-free graph of largest spectral
/// radius within a class.
struct SearchRecord {
  int n = 0;
  GraphClass cls = GraphClass::all;
  StarForest forest{{1}};
  std::int64_t count_enumerated = 0;
  std::int64_t count_f_free = 0;
  double max_rho = 0.0;
  /// graph6 of every maximizer up to isomorphism, sorted by canonical code.
  std::vector<std::string> argmax;
  /// Applicable spectral bound at (n, k, d_k); absent when k < 2 or n < k.
  std::optional<double> bound_value;
  /// Whether n clears the proved order threshold for this class.
  bool bound_applicable = false;
  std::optional<double> gap;  // bound_value - max_rho
  /// The F-free extremal construction for this class and its radius.
  std::optional<std::string> family_graph6;
  std::optional<double> family_rho;

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

/// K_{k-1} joined with a maximum-degree (d_k - 1) graph for general classes,
/// K_{k-1, n-k+1} for bipartite ones. Absent when n < k or k < 2.
std::optional<Graph> extremal_construction(int n, const StarForest& f, GraphClass cls);

/// Spectral bound for the class: the general bound for all/connected, the
/// bipartite bound for bipartite classes.
std::optional<double> class_bound(int n, const StarForest& f, GraphClass cls);

/// Whether n reaches the order threshold of the class. For F = kS_2 and
/// bipartite classes the explicit threshold n >= 11k - 4 also counts.
bool bound_applicable(int n, const StarForest& f, GraphClass cls);

SearchRecord extremal_search(int n, const StarForest& f, GraphClass cls, unsigned threads = 0);

struct EdgeViolation {
  std::string graph6;
  int edges = 0;
  std::int64_t bound = 0;
};

/// Every F-free graph of the class against the coarse edge bound. Requires
/// k >= 2 and n >= sum d_i + k.
std::vector<EdgeViolation> verify_edge_bound(int n, const StarForest& f, GraphClass cls = GraphClass::all,
                                             unsigned threads = 0);

struct MarginRow {
  std::string graph6;
  double q = 0.0;
  double margin = 0.0;  // q - conjectured bound
};

struct ConjectureReport {
  int n = 0;
  GraphClass cls = GraphClass::all;
  StarForest forest{{1}};
  double bound = 0.0;
  std::int64_t count_f_free = 0;
  double max_margin = 0.0;
  /// Largest margins first, at most `top` rows.
  std::vector<MarginRow> top;
  /// Every graph strictly above the bound (by more than 1e-9).
  std::vector<MarginRow> exceeding;
  /// The conjectured extremal construction, when it fits the class.
  std::optional<MarginRow> family;
};

ConjectureReport test_conjecture_q(int n, const StarForest& f, GraphClass cls, std::size_t top = 10,
                                   unsigned threads = 0);

struct JoinCheck {
  int n = 0;
  int k = 0;
  int d = 0;
  double bound = 0.0;
  double rho_regular = 0.0;
  /// Radius after deleting one edge of H; absent when H has no edges.
  std::optional<double> rho_deleted;
  bool equality_holds = false;
  bool deletion_strict = true;
};

/// Radius of K_{k-1} joined with a (d-1)-regular graph against the bound,
/// and strictness after one edge deletion in H.
JoinCheck check_join_bound(int n, int k, int d);

struct BipartiteViolation {
  std::string graph6;
  std::string property;
  double value = 0.0;
  double limit = 0.0;
};

/// Bipartite property suite over every F-free graph of the class: Wilf's
/// bound rho <= n/2, spectral symmetry, and the bipartite spectral bound
/// wherever bound_applicable holds.
std::vector<BipartiteViolation> verify_bipartite(int n, const StarForest& f,
                                                 GraphClass cls = GraphClass::bipartite,
                                                 unsigned threads = 0);

}  // namespace starspec
