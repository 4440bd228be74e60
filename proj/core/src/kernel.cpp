#include "augtk/kernel.hpp"

#include <cmath>
#include <string>

namespace augtk {

BaseKernel linear_kernel() {
  return {[](const SparseVector& a, const SparseVector& b) { return dot(a, b); },
          "linear"};
}

BaseKernel polynomial_kernel(unsigned degree, double offset) {
  return {[degree, offset](const SparseVector& a, const SparseVector& b) {
            return std::pow(dot(a, b) + offset, degree);
          },
          "poly" + std::to_string(degree)};
}

BaseKernel rbf_kernel(double gamma) {
  return {[gamma](const SparseVector& a, const SparseVector& b) {
            double d2 = norm_squared(a) - 2.0 * dot(a, b) + norm_squared(b);
            return std::exp(-gamma * d2);
          },
          "rbf"};
}

double expanded_kernel(const SparseVector& x, const DomainId& dx,
                       const SparseVector& x2, const DomainId& dx2,
                       const BaseKernel& base, double beta) {
  if (beta < 0.0) throw Error("beta must be >= 0");
  double k = base.evaluate(x, x2);
  return dx == dx2 ? (1.0 + beta) * k : k;
}

std::vector<std::vector<double>> kernel_matrix(
    const std::vector<std::pair<SparseVector, DomainId>>& points,
    const BaseKernel& base, double beta) {
  if (points.empty()) throw Error("kernel_matrix needs at least one point");
  const std::size_t n = points.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double v = expanded_kernel(points[i].first, points[i].second,
                                 points[j].first, points[j].second, base,
                                 beta);
      m[i][j] = v;
      m[j][i] = v;
    }
  }
  return m;
}

}  // namespace augtk
