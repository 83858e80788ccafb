#pragma once

#include "starspec/graph.hpp"

namespace starspec {

/// K_{a,b} with parts 0..a-1 and a..a+b-1.
Graph make_complete_bipartite(int a, int b);

/// K_h joined with the edgeless graph on n - h vertices.
Graph make_S(int n, int h);

/// K_h joined with K_2 plus n - h - 2 isolated vertices.
Graph make_S_plus(int n, int h);

/// K_{k-1} joined with p disjoint edges plus s isolated vertices, where
/// n - k + 1 = 2p + s and s in {0, 1}.
Graph make_F(int n, int k);

/// Circulant r-regular graph on m vertices: offsets +-1..+-floor(r/2), plus
/// the antipodal offset m/2 when r is odd. Throws Error{no_regular_graph}
/// unless r < m and r*m is even.
Graph make_regular_circulant(int m, int r);

/// K_{k-1} joined with a (d-1)-regular graph on n - k + 1 vertices.
Graph make_join_regular(int n, int k, int d);

/// K_{k-1} joined with H of maximum degree d - 1 and as many edges as
/// possible: the circulant when regular is feasible, otherwise a regular
/// circulant on n - k vertices plus an isolated vertex. H is complete when
/// n - k + 1 <= d - 1. At d = 2 this is F_{n,k}.
Graph make_join_near_regular(int n, int k, int d);

/// Whether a (d-1)-regular graph on n - k + 1 vertices exists.
bool join_regular_feasible(int n, int k, int d);

/// Upper bound on the spectral radius of F-free graphs (k components,
/// smallest star degree d_k):
/// (k + d - 3 + sqrt((k - d - 1)^2 + 4(k-1)(n-k+1))) / 2.
double spectral_bound(int n, int k, int dk);

/// sqrt((k-1)(n-k+1)), the bipartite spectral bound.
double bipartite_spectral_bound(int n, int k);

/// -sqrt((k-1)(n-k+1)), the least-eigenvalue bound.
double least_eigenvalue_bound(int n, int k);

/// Conjectured signless Laplacian bound:
/// (n + 2k + 2d - 6 + sqrt((n + 2k - 2d - 2)^2 - 8(k-1)(k-d-1))) / 2.
double signless_bound(int n, int k, int dk);

}  // namespace starspec
