#include "starspec/extremal.hpp"

#include <cmath>
#include <string>

#include "starspec/error.hpp"

namespace starspec {

namespace {

[[noreturn]] void out_of_range(const std::string& what) { throw Error(Errc::param_out_of_range, what); }

void require_join_params(int n, int k, int d) {
  if (k < 2) out_of_range("k must be at least 2");
  if (d < 1) out_of_range("d must be at least 1");
  if (n < k) out_of_range("n must be at least k");
  if (n > kMaxOrder) throw Error(Errc::order_too_large, "order " + std::to_string(n) + " exceeds 64");
}

void require_bound_params(int n, int k) {
  if (k < 2) out_of_range("k must be at least 2");
  if (n < k) out_of_range("n must be at least k");
}

}  // namespace

Graph make_complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) out_of_range("part sizes must be nonnegative");
  return join(empty_graph(a), empty_graph(b));
}

Graph make_S(int n, int h) {
  if (h < 0 || h > n) out_of_range("S_{n,h} needs 0 <= h <= n");
  return join(complete_graph(h), empty_graph(n - h));
}

Graph make_S_plus(int n, int h) {
  if (h < 0 || h > n - 2) out_of_range("S+_{n,h} needs 0 <= h <= n - 2");
  return join(complete_graph(h), graph_union(complete_graph(2), empty_graph(n - h - 2)));
}

Graph make_F(int n, int k) {
  if (k < 1 || k - 1 > n) out_of_range("F_{n,k} needs 1 <= k and k - 1 <= n");
  const int m = n - k + 1;
  const int p = m / 2;
  const int s = m % 2;
  Graph h = complete_graph(s);
  if (p > 0) h = graph_union(disjoint_copies(p, complete_graph(2)), h);
  return join(complete_graph(k - 1), h);
}

Graph make_regular_circulant(int m, int r) {
  if (m < 0 || r < 0) out_of_range("circulant parameters must be nonnegative");
  if (r >= m && !(m == 0 && r == 0)) {
    throw Error(Errc::no_regular_graph, "no " + std::to_string(r) + "-regular graph on " +
                                            std::to_string(m) + " vertices (need r < m)");
  }
  if ((r % 2 == 1) && (m % 2 == 1)) {
    throw Error(Errc::no_regular_graph, "no " + std::to_string(r) + "-regular graph on " +
                                            std::to_string(m) + " vertices (r*m is odd)");
  }
  std::vector<Edge> edges;
  for (int v = 0; v < m; ++v) {
    for (int off = 1; off <= r / 2; ++off) edges.emplace_back(v, (v + off) % m);
    if (r % 2 == 1 && v < m / 2) edges.emplace_back(v, v + m / 2);
  }
  return Graph::from_edges(m, edges);
}

bool join_regular_feasible(int n, int k, int d) {
  const int m = n - k + 1;
  const int r = d - 1;
  return k >= 1 && d >= 1 && m >= 1 && r < m && (r % 2 == 0 || m % 2 == 0);
}

Graph make_join_regular(int n, int k, int d) {
  require_join_params(n, k, d);
  return join(complete_graph(k - 1), make_regular_circulant(n - k + 1, d - 1));
}

Graph make_join_near_regular(int n, int k, int d) {
  require_join_params(n, k, d);
  const int m = n - k + 1;
  const int r = d - 1;
  Graph h;
  if (r >= m) {
    h = complete_graph(m);
  } else if (r % 2 == 0 || m % 2 == 0) {
    h = make_regular_circulant(m, r);
  } else {
    h = graph_union(make_regular_circulant(m - 1, r), empty_graph(1));
  }
  return join(complete_graph(k - 1), h);
}

double spectral_bound(int n, int k, int dk) {
  require_bound_params(n, k);
  if (dk < 1) out_of_range("d_k must be at least 1");
  const double a = k - dk - 1;
  const double disc = a * a + 4.0 * (k - 1) * static_cast<double>(n - k + 1);
  return (k + dk - 3 + std::sqrt(disc)) / 2.0;
}

double bipartite_spectral_bound(int n, int k) {
  require_bound_params(n, k);
  return std::sqrt(static_cast<double>(k - 1) * (n - k + 1));
}

double least_eigenvalue_bound(int n, int k) { return -bipartite_spectral_bound(n, k); }

double signless_bound(int n, int k, int dk) {
  require_bound_params(n, k);
  if (dk < 1) out_of_range("d_k must be at least 1");
  const double a = static_cast<double>(n) + 2.0 * k - 2.0 * dk - 2.0;
  const double disc = a * a - 8.0 * (k - 1) * static_cast<double>(k - dk - 1);
  if (disc < 0.0) {
    throw Error(Errc::negative_discriminant,
                "discriminant " + std::to_string(disc) + " is negative at n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ", d_k=" + std::to_string(dk));
  }
  return (static_cast<double>(n) + 2.0 * k + 2.0 * dk - 6.0 + std::sqrt(disc)) / 2.0;
}

}  // namespace starspec
