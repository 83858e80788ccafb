#include "starspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "starspec/error.hpp"

namespace starspec {

namespace {

constexpr int kMaxPowerIterations = 10000;
constexpr double kRayleighChange = 1e-13;
constexpr double kPowerResidual = 1e-11;

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::empty_graph, "graph has no vertices");
}

void multiply_adjacency(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (int v = 0; v < g.order(); ++v) {
    double s = 0.0;
    for (VertexMask nb = g.neighbors(v); nb != 0; nb &= nb - 1) s += x[std::countr_zero(nb)];
    y[v] = s;
  }
}

double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

struct PowerResult {
  double value = 0.0;  // Rayleigh quotient of the iterated operator
  std::vector<double> x;
  bool converged = false;
};

// Power iteration for the dominant eigenpair of a symmetric operator whose
// dominant eigenvalue is nonnegative and largest in magnitude.
template <class Apply>
PowerResult power_iterate(std::vector<double> x, Apply&& apply) {
  const std::size_t n = x.size();
  std::vector<double> y(n);
  PowerResult out;
  double norm = norm2(x);
  if (norm == 0.0) return out;
  for (double& xi : x) xi /= norm;
  double previous = 0.0;
  bool restarted = false;
  for (int it = 0; it < kMaxPowerIterations; ++it) {
    apply(x, y);
    const double lambda = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += (y[i] - lambda * x[i]) * (y[i] - lambda * x[i]);
    r = std::sqrt(r);
    const double scale = std::max(1.0, std::abs(lambda));
    if (it > 0 && std::abs(lambda - previous) <= kRayleighChange * scale &&
        r <= kPowerResidual * scale) {
      out.value = lambda;
      out.x = x;
      out.converged = true;
      return out;
    }
    previous = lambda;
    norm = norm2(y);
    if (norm == 0.0) {
      // The start vector was orthogonal to every eigenvector with a nonzero
      // eigenvalue; retry once from a fixed perturbation.
      if (restarted) return out;
      restarted = true;
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = x[i] != 0.0 ? 1.0 + 0.01 * static_cast<double>(i + 1) / static_cast<double>(n) : 0.0;
      }
      norm = norm2(x);
      for (double& xi : x) xi /= norm;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  out.value = previous;
  out.x = x;
  return out;
}

std::vector<double> indicator(int n, VertexMask set) {
  std::vector<double> x(n, 0.0);
  for (; set != 0; set &= set - 1) x[std::countr_zero(set)] = 1.0;
  return x;
}

}  // namespace

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) a(u, v) = g.has_edge(u, v) ? 1.0 : 0.0;
  }
  return a;
}

SymmetricMatrix signless_laplacian_matrix(const Graph& g) {
  SymmetricMatrix q = adjacency_matrix(g);
  for (int v = 0; v < g.order(); ++v) q(v, v) = g.degree(v);
  return q;
}

SpectrumResult symmetric_spectrum(const SymmetricMatrix& m) {
  const int n = m.size();
  EigenDecomposition eig = jacobi_eigen(m, kSolverTolerance);
  SpectrumResult out;
  out.method = "jacobi";
  out.sweeps = eig.sweeps;
  for (int i = 0; i < n; ++i) {
    const auto& x = eig.vectors[i];
    for (int r = 0; r < n; ++r) {
      double s = 0.0;
      for (int c = 0; c < n; ++c) s += m(r, c) * x[c];
      out.max_residual = std::max(out.max_residual, std::abs(s - eig.values[i] * x[r]));
    }
  }
  out.eigenvalues = std::move(eig.values);
  return out;
}

SpectrumResult adjacency_spectrum(const Graph& g) {
  require_nonempty(g);
  return symmetric_spectrum(adjacency_matrix(g));
}

SpectrumResult signless_laplacian_spectrum(const Graph& g) {
  require_nonempty(g);
  return symmetric_spectrum(signless_laplacian_matrix(g));
}

double spectral_radius(const Graph& g) {
  require_nonempty(g);
  double rho = 0.0;
  for (VertexMask comp : components(g)) {
    if (std::popcount(comp) == 1) continue;
    // A + I has the Perron root strictly dominant even for bipartite parts.
    PowerResult p = power_iterate(indicator(g.order(), comp),
                                  [&](const std::vector<double>& x, std::vector<double>& y) {
                                    multiply_adjacency(g, x, y);
                                    for (std::size_t i = 0; i < x.size(); ++i) y[i] += x[i];
                                  });
    if (!p.converged) return adjacency_spectrum(g).eigenvalues.front();
    rho = std::max(rho, p.value - 1.0);
  }
  return rho;
}

double least_eigenvalue(const Graph& g) {
  require_nonempty(g);
  const double c = max_degree(g);
  if (c == 0.0) return 0.0;
  // cI - A is positive semidefinite because rho <= max degree. The start
  // vector avoids the all-ones direction, which is the Perron vector of
  // every regular graph and would pin the iteration at c - rho.
  std::vector<double> x(g.order());
  for (int i = 0; i < g.order(); ++i) x[i] = std::cos(1.0 + 2.3 * i) + 0.25 * (i % 3);
  PowerResult p = power_iterate(std::move(x), [&](const std::vector<double>& v, std::vector<double>& y) {
    multiply_adjacency(g, v, y);
    for (std::size_t i = 0; i < v.size(); ++i) y[i] = c * v[i] - y[i];
  });
  if (!p.converged) return adjacency_spectrum(g).eigenvalues.back();
  return c - p.value;
}

double signless_laplacian_radius(const Graph& g) {
  require_nonempty(g);
  double q = 0.0;
  for (VertexMask comp : components(g)) {
    if (std::popcount(comp) == 1) continue;
    PowerResult p = power_iterate(indicator(g.order(), comp),
                                  [&](const std::vector<double>& x, std::vector<double>& y) {
                                    multiply_adjacency(g, x, y);
                                    for (std::size_t i = 0; i < x.size(); ++i) y[i] += g.degree(static_cast<int>(i)) * x[i];
                                  });
    if (!p.converged) return signless_laplacian_spectrum(g).eigenvalues.front();
    q = std::max(q, p.value);
  }
  return q;
}

PerronData perron_vector(const Graph& g) {
  require_nonempty(g);
  if (!is_connected(g)) throw Error(Errc::disconnected, "Perron vector needs a connected graph");
  const int n = g.order();
  PerronData out;
  if (n == 1) {
    out.vector = {1.0};
    out.min_entry = 1.0;
    return out;
  }
  PowerResult p = power_iterate(std::vector<double>(n, 1.0),
                                [&](const std::vector<double>& x, std::vector<double>& y) {
                                  multiply_adjacency(g, x, y);
                                  for (std::size_t i = 0; i < x.size(); ++i) y[i] += x[i];
                                });
  std::vector<double> x;
  if (p.converged) {
    out.rho = p.value - 1.0;
    x = std::move(p.x);
  } else {
    EigenDecomposition eig = jacobi_eigen(adjacency_matrix(g), kSolverTolerance);
    out.rho = eig.values.front();
    x = std::move(eig.vectors.front());
    if (std::accumulate(x.begin(), x.end(), 0.0) < 0.0) {
      for (double& xi : x) xi = -xi;
    }
  }
  const double top = *std::max_element(x.begin(), x.end());
  for (double& xi : x) xi /= top;
  out.min_entry = *std::min_element(x.begin(), x.end());
  std::vector<double> y(n);
  multiply_adjacency(g, x, y);
  for (int i = 0; i < n; ++i) out.residual = std::max(out.residual, std::abs(y[i] - out.rho * x[i]));
  out.vector = std::move(x);
  return out;
}

PerronFloor check_perron_floor(const Graph& g) {
  PerronData p = perron_vector(g);
  PerronFloor out;
  out.rho = p.rho;
  out.min_entry = p.min_entry;
  if (p.rho == 0.0) {
    // K1: the single entry is the maximum, and there is no floor to check.
    out.holds = true;
    out.margin = 0.0;
    return out;
  }
  out.margin = p.min_entry - 1.0 / p.rho;
  out.holds = out.margin >= -kCrossCheckTolerance;
  return out;
}

}  // namespace starspec
