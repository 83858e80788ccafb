#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace starspec {

inline constexpr int kMaxOrder = 64;

/// Bit v set means vertex v is in the set.
using VertexMask = std::uint64_t;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

constexpr VertexMask mask_below(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1 with one 64-bit adjacency
/// row per vertex. Rows beyond n are kept zero so equality is a plain
/// member-wise comparison.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Validates symmetry, loop-freeness and range of every row.
  static Graph from_rows(int n, std::span<const VertexMask> rows);

  int order() const { return n_; }
  int edge_count() const;
  VertexMask vertices() const { return mask_below(n_); }
  VertexMask neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  /// Adds vertex n adjacent to `nbrs` (a subset of the current vertices).
  Graph with_vertex(VertexMask nbrs) const;

  /// Vertex v of this graph becomes vertex position[v] of the result.
  Graph relabeled(std::span<const int> position) const;

  /// Subgraph induced by `keep`, vertices renumbered in increasing order.
  Graph induced(VertexMask keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::array<VertexMask, kMaxOrder> rows_{};
};

struct Bipartition {
  VertexMask left = 0;
  VertexMask right = 0;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Disjoint union plus every edge between the two vertex sets; vertices of
/// `g` come first.
Graph join(const Graph& g, const Graph& h);
Graph graph_union(const Graph& g, const Graph& h);
Graph disjoint_copies(int k, const Graph& g);
Graph complement(const Graph& g);

std::vector<int> degrees(const Graph& g);
int max_degree(const Graph& g);
int min_degree(const Graph& g);
bool is_regular(const Graph& g, int r);

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexMask> components(const Graph& g);
bool is_connected(const Graph& g);
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_triangle_free(const Graph& g);

}  // namespace starspec
