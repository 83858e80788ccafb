#include "starspec/graph.hpp"

#include <algorithm>
#include <string>

#include "starspec/error.hpp"

namespace starspec {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::order_too_large: return "OrderTooLarge";
    case Errc::bad_edge: return "BadEdge";
    case Errc::parse_error: return "ParseError";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::disconnected: return "Disconnected";
    case Errc::param_out_of_range: return "ParamOutOfRange";
    case Errc::no_regular_graph: return "NoRegularGraph";
    case Errc::negative_discriminant: return "NegativeDiscriminant";
    case Errc::division_by_zero_k2: return "DivisionByZeroK2";
    case Errc::empty_class: return "EmptyClass";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_order(int n) {
  if (n < 0) {
    throw Error(Errc::param_out_of_range, "negative vertex count " + std::to_string(n));
  }
  if (n > kMaxOrder) {
    throw Error(Errc::order_too_large,
                "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
}

template <class Fn>
void for_each_vertex(VertexMask set, Fn&& fn) {
  while (set != 0) {
    fn(std::countr_zero(set));
    set &= set - 1;
  }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::bad_edge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                      ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw Error(Errc::bad_edge, "loop at vertex " + std::to_string(u));
    }
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const VertexMask> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::param_out_of_range, "expected " + std::to_string(n) + " adjacency rows");
  }
  Graph g;
  g.n_ = n;
  const VertexMask all = mask_below(n);
  for (int u = 0; u < n; ++u) {
    const VertexMask row = rows[u];
    if ((row & ~all) != 0) {
      throw Error(Errc::bad_edge, "row " + std::to_string(u) + " names a vertex >= n");
    }
    if ((row & bit(u)) != 0) {
      throw Error(Errc::bad_edge, "loop at vertex " + std::to_string(u));
    }
    g.rows_[u] = row;
  }
  for (int u = 0; u < n; ++u) {
    for_each_vertex(g.rows_[u], [&](int v) {
      if (!g.has_edge(v, u)) {
        throw Error(Errc::bad_edge, "asymmetric adjacency between " + std::to_string(u) +
                                        " and " + std::to_string(v));
      }
    });
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(rows_[u] & ~mask_below(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw Error(Errc::bad_edge, "cannot add edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
  }
  Graph g = *this;
  g.rows_[u] |= bit(v);
  g.rows_[v] |= bit(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw Error(Errc::bad_edge, "cannot remove edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
  }
  Graph g = *this;
  g.rows_[u] &= ~bit(v);
  g.rows_[v] &= ~bit(u);
  return g;
}

Graph Graph::with_vertex(VertexMask nbrs) const {
  if (n_ >= kMaxOrder) {
    throw Error(Errc::order_too_large, "cannot add a vertex to a graph of order 64");
  }
  if ((nbrs & ~vertices()) != 0) {
    throw Error(Errc::bad_edge, "new vertex adjacent to a nonexistent vertex");
  }
  Graph g = *this;
  const int v = n_;
  g.n_ = n_ + 1;
  g.rows_[v] = nbrs;
  for_each_vertex(nbrs, [&](int u) { g.rows_[u] |= bit(v); });
  return g;
}

Graph Graph::relabeled(std::span<const int> position) const {
  Graph g;
  g.n_ = n_;
  for (int u = 0; u < n_; ++u) {
    VertexMask row = 0;
    for_each_vertex(rows_[u], [&](int v) { row |= bit(position[v]); });
    g.rows_[position[u]] = row;
  }
  return g;
}

Graph Graph::induced(VertexMask keep) const {
  keep &= vertices();
  std::array<int, kMaxOrder> index{};
  int m = 0;
  for_each_vertex(keep, [&](int v) { index[v] = m++; });
  Graph g;
  g.n_ = m;
  for_each_vertex(keep, [&](int u) {
    VertexMask row = 0;
    for_each_vertex(rows_[u] & keep, [&](int v) { row |= bit(index[v]); });
    g.rows_[index[u]] = row;
  });
  return g;
}

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph complete_graph(int n) {
  check_order(n);
  std::vector<VertexMask> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = mask_below(n) & ~bit(v);
  return Graph::from_rows(n, rows);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::param_out_of_range, "a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  check_order(a + b);
  std::vector<VertexMask> rows(a + b);
  const VertexMask left = mask_below(a);
  const VertexMask right = mask_below(a + b) & ~left;
  for (int v = 0; v < a; ++v) rows[v] = g.neighbors(v) | right;
  for (int v = 0; v < b; ++v) rows[a + v] = (h.neighbors(v) << a) | left;
  return Graph::from_rows(a + b, rows);
}

Graph graph_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  check_order(a + b);
  std::vector<VertexMask> rows(a + b);
  for (int v = 0; v < a; ++v) rows[v] = g.neighbors(v);
  for (int v = 0; v < b; ++v) rows[a + v] = h.neighbors(v) << a;
  return Graph::from_rows(a + b, rows);
}

Graph disjoint_copies(int k, const Graph& g) {
  if (k < 1) throw Error(Errc::param_out_of_range, "need at least one copy");
  check_order(k * g.order());
  Graph out = g;
  for (int i = 1; i < k; ++i) out = graph_union(out, g);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexMask> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = ~g.neighbors(v) & mask_below(n) & ~bit(v);
  return Graph::from_rows(n, rows);
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = kMaxOrder;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_regular(const Graph& g, int r) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != r) return false;
  }
  return true;
}

std::vector<VertexMask> components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask unseen = g.vertices();
  while (unseen != 0) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition parts;
  for (VertexMask comp : components(g)) {
    // Breadth-first layers alternate sides.
    VertexMask side[2] = {comp & (~comp + 1), 0};
    VertexMask frontier = side[0];
    int layer = 0;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      if ((next & side[layer]) != 0) return std::nullopt;
      next &= ~(side[0] | side[1]);
      layer ^= 1;
      side[layer] |= next;
      frontier = next;
    }
    parts.left |= side[0];
    parts.right |= side[1];
  }
  return parts;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    VertexMask later = g.neighbors(u) & ~mask_below(u + 1);
    bool found = false;
    for_each_vertex(later, [&](int v) {
      if ((g.neighbors(v) & g.neighbors(u)) != 0) found = true;
    });
    if (found) return false;
  }
  return true;
}

}  // namespace starspec
