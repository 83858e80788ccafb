#pragma once

#include <atomic>
#include <functional>
#include <string_view>
#include <thread>
#include <vector>

#include "starspec/graph.hpp"

namespace starspec {

enum class GraphClass { all, connected, bipartite, connected_bipartite };

std::string_view graph_class_name(GraphClass cls);
GraphClass parse_graph_class(std::string_view name);
bool in_class(const Graph& g, GraphClass cls);
bool is_bipartite_class(GraphClass cls);

inline constexpr int kEnumerationCeilingAll = 10;
inline constexpr int kEnumerationCeilingSparse = 12;

/// Throws Error{order_too_large} above the class ceiling and
/// Error{param_out_of_range} for n < 1.
void check_enumeration_order(int n, GraphClass cls);

using GraphVisitor = std::function<void(const Graph&)>;

/// Canonical representatives of the hereditary base class (all graphs, or
/// bipartite graphs) on `level` vertices, generated by vertex augmentation.
std::vector<Graph> generation_frontier(int level, GraphClass cls);

/// Extends one generation-tree node to order n and visits every descendant
/// that lies in `cls`. Subtrees of distinct frontier nodes are disjoint.
void for_each_descendant(const Graph& root, int n, GraphClass cls, const GraphVisitor& visit);

/// Visits one canonical representative per isomorphism class. A child is
/// kept only when the added vertex is in the automorphism orbit of its
/// canonical deletion vertex, and isomorphic siblings are collapsed, so no
/// global set of seen graphs is held.
void for_each_graph(int n, GraphClass cls, const GraphVisitor& visit);

/// All representatives, sorted by canonical code.
std::vector<Graph> enumerate_graphs(int n, GraphClass cls);

/// Level at which work is split between threads.
int split_level(int n);

/// Scans the class with `threads` workers (0 = hardware concurrency). Each
/// worker folds graphs into its own copy of `init` with `visit(state, g)`;
/// the copies are combined with `merge(acc, part)`, which must be
/// associative and commutative.
template <class State, class Visit, class Merge>
State parallel_scan(int n, GraphClass cls, unsigned threads, State init, Visit visit, Merge merge) {
  check_enumeration_order(n, cls);
  const std::vector<Graph> roots = generation_frontier(split_level(n), cls);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, roots.size())));
  std::vector<State> parts(threads, init);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      for_each_descendant(roots[i], n, cls, [&](const Graph& g) { visit(parts[w], g); });
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  State acc = std::move(init);
  for (auto& p : parts) merge(acc, std::move(p));
  return acc;
}

}  // namespace starspec
