#pragma once

#include <vector>

namespace starspec {

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double trace() const;
  double frobenius_norm() const;

 private:
  int n_;
  std::vector<double> a_;
};

struct EigenDecomposition {
  /// Sorted descending.
  std::vector<double> values;
  /// vectors[i] is the unit eigenvector for values[i].
  std::vector<std::vector<double>> vectors;
  int sweeps = 0;
  /// Off-diagonal Frobenius norm when the iteration stopped.
  double off_norm = 0.0;
  bool converged = false;
};

/// Cyclic Jacobi rotations until the off-diagonal norm drops below
/// `tolerance * max(1, ||A||_F)`.
EigenDecomposition jacobi_eigen(SymmetricMatrix a, double tolerance = 1e-12,
                                int max_sweeps = 100);

}  // namespace starspec
