#pragma once

#include <string>
#include <vector>

#include "starspec/graph.hpp"
#include "starspec/jacobi.hpp"

namespace starspec {

inline constexpr double kSolverTolerance = 1e-12;
inline constexpr double kCrossCheckTolerance = 1e-9;

struct SpectrumResult {
  std::vector<double> eigenvalues;  // descending
  std::string method;
  double max_residual = 0.0;  // max over pairs of ||Mx - lambda x||_inf
  int sweeps = 0;
};

struct PerronData {
  double rho = 0.0;
  std::vector<double> vector;  // positive, max entry exactly 1
  double min_entry = 0.0;
  double residual = 0.0;  // ||Ax - rho x||_inf
};

struct PerronFloor {
  bool holds = false;
  double margin = 0.0;  // min_entry - 1/rho
  double min_entry = 0.0;
  double rho = 0.0;
};

SymmetricMatrix adjacency_matrix(const Graph& g);
SymmetricMatrix signless_laplacian_matrix(const Graph& g);

/// Full spectrum of an arbitrary symmetric matrix through the Jacobi solver.
SpectrumResult symmetric_spectrum(const SymmetricMatrix& m);

SpectrumResult adjacency_spectrum(const Graph& g);
SpectrumResult signless_laplacian_spectrum(const Graph& g);

/// Largest adjacency eigenvalue. Power iteration on A + I per component;
/// falls back to the full spectrum when the iteration is slow.
double spectral_radius(const Graph& g);

/// Smallest adjacency eigenvalue, recovered as c - lambda_max(cI - A) with
/// c = max degree.
double least_eigenvalue(const Graph& g);

/// Largest eigenvalue of Q = D + A.
double signless_laplacian_radius(const Graph& g);

/// Throws Error{disconnected} unless `g` is connected.
PerronData perron_vector(const Graph& g);

/// Whether every Perron entry is at least 1/rho (up to the cross-check
/// tolerance). Diagnostic on arbitrary graphs.
PerronFloor check_perron_floor(const Graph& g);

}  // namespace starspec
