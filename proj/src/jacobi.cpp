#include "starspec/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace starspec {

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) s += 2.0 * a(i, j) * a(i, j);
  }
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(SymmetricMatrix a, double tolerance, int max_sweeps) {
  const int n = a.size();
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

  const double target = tolerance * std::max(1.0, a.frobenius_norm());
  EigenDecomposition out;
  out.off_norm = off_diagonal_norm(a);
  while (out.off_norm > target && out.sweeps < max_sweeps) {
    ++out.sweeps;
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Rutishauser's stable rotation: t = tan(phi) with |phi| <= pi/4.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        if (s == 0.0) continue;
        rotated = true;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p);
          const double vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
    out.off_norm = off_diagonal_norm(a);
    if (!rotated) break;
  }
  out.converged = out.off_norm <= target;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (int idx : order) {
    out.values.push_back(a(idx, idx));
    std::vector<double> col(n);
    for (int k = 0; k < n; ++k) col[k] = V(k, idx);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

}  // namespace starspec
