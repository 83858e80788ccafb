#include "starspec/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "starspec/canonical.hpp"
#include "starspec/error.hpp"

namespace starspec {

std::string_view graph_class_name(GraphClass cls) {
  switch (cls) {
    case GraphClass::all: return "all";
    case GraphClass::connected: return "connected";
    case GraphClass::bipartite: return "bipartite";
    case GraphClass::connected_bipartite: return "connected_bipartite";
  }
  return "?";
}

GraphClass parse_graph_class(std::string_view name) {
  for (auto cls : {GraphClass::all, GraphClass::connected, GraphClass::bipartite,
                   GraphClass::connected_bipartite}) {
    if (name == graph_class_name(cls)) return cls;
  }
  throw Error(Errc::parse_error, "unknown graph class '" + std::string(name) + "'");
}

bool is_bipartite_class(GraphClass cls) {
  return cls == GraphClass::bipartite || cls == GraphClass::connected_bipartite;
}

bool in_class(const Graph& g, GraphClass cls) {
  switch (cls) {
    case GraphClass::all: return true;
    case GraphClass::connected: return is_connected(g);
    case GraphClass::bipartite: return is_bipartite(g);
    case GraphClass::connected_bipartite: return is_connected(g) && is_bipartite(g);
  }
  return false;
}

void check_enumeration_order(int n, GraphClass cls) {
  if (n < 1) throw Error(Errc::param_out_of_range, "enumeration needs n >= 1");
  const int ceiling = is_bipartite_class(cls) ? kEnumerationCeilingSparse : kEnumerationCeilingAll;
  if (n > ceiling) {
    throw Error(Errc::order_too_large, "enumerating class " + std::string(graph_class_name(cls)) +
                                           " supports n <= " + std::to_string(ceiling));
  }
}

int split_level(int n) { return std::max(1, n - 2); }

namespace {

// Vertex invariant used to shortlist canonical deletion candidates.
int deletion_invariant(const Graph& g, int v) {
  int nbr_degrees = 0;
  for (VertexMask nb = g.neighbors(v); nb != 0; nb &= nb - 1) nbr_degrees += g.degree(std::countr_zero(nb));
  return g.degree(v) * 4096 + nbr_degrees;
}

bool orbit_via_generators(const CanonicalLabeling& lab, int n, int u, int v) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : lab.automorphisms) {
    for (int x = 0; x < n; ++x) parent[find(x)] = find(perm[x]);
  }
  return find(u) == find(v);
}

// The canonical deletion vertex is the shortlisted vertex with the largest
// canonical position. Returns the child's labeling when the new vertex is in
// its orbit.
std::optional<CanonicalLabeling> accept_child(const Graph& child) {
  const int n = child.order();
  const int added = n - 1;
  const int added_inv = deletion_invariant(child, added);
  VertexMask shortlist = 0;
  for (int v = 0; v < n; ++v) {
    const int inv = deletion_invariant(child, v);
    if (inv > added_inv) return std::nullopt;
    if (inv == added_inv) shortlist |= bit(v);
  }
  CanonicalLabeling lab = canonical_labeling(child, kCanonicalMaxOrder);
  int chosen = added;
  for (VertexMask rest = shortlist; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (lab.position[v] > lab.position[chosen]) chosen = v;
  }
  if (chosen == added || orbit_via_generators(lab, n, added, chosen) ||
      same_orbit(child, added, chosen, kCanonicalMaxOrder)) {
    return lab;
  }
  return std::nullopt;
}

GraphClass base_class(GraphClass cls) {
  return is_bipartite_class(cls) ? GraphClass::bipartite : GraphClass::all;
}

template <class Fn>
void children(const Graph& parent, GraphClass base, Fn&& fn) {
  const int m = parent.order();
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
  for (VertexMask nbrs = 0; nbrs < (VertexMask{1} << m); ++nbrs) {
    const Graph child = parent.with_vertex(nbrs);
    if (base == GraphClass::bipartite && !is_bipartite(child)) continue;
    auto lab = accept_child(child);
    if (!lab || !seen.insert(lab->code).second) continue;
    fn(child.relabeled(lab->position));
  }
}

void descend(const Graph& g, int n, GraphClass cls, const GraphVisitor& visit) {
  if (g.order() == n) {
    if (in_class(g, cls)) visit(g);
    return;
  }
  children(g, base_class(cls), [&](const Graph& child) { descend(child, n, cls, visit); });
}

}  // namespace

std::vector<Graph> generation_frontier(int level, GraphClass cls) {
  if (level < 1) throw Error(Errc::param_out_of_range, "frontier level must be >= 1");
  std::vector<Graph> out;
  descend(empty_graph(1), level, base_class(cls), [&](const Graph& g) { out.push_back(g); });
  return out;
}

void for_each_descendant(const Graph& root, int n, GraphClass cls, const GraphVisitor& visit) {
  descend(root, n, cls, visit);
}

void for_each_graph(int n, GraphClass cls, const GraphVisitor& visit) {
  check_enumeration_order(n, cls);
  for (const Graph& root : generation_frontier(split_level(n), cls)) descend(root, n, cls, visit);
}

std::vector<Graph> enumerate_graphs(int n, GraphClass cls) {
  std::vector<std::pair<CanonicalCode, Graph>> keyed;
  for_each_graph(n, cls, [&](const Graph& g) { keyed.emplace_back(canonical_code(g, kCanonicalMaxOrder), g); });
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(kv.second);
  return out;
}

}  // namespace starspec
