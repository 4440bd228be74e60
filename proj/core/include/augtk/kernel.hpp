#pragma once

#include <functional>
#include <string>
#include <vector>

#include "augtk/types.hpp"

namespace augtk {

/// Symmetric positive semi-definite base kernel K(x, x').
struct BaseKernel {
  std::function<double(const SparseVector&, const SparseVector&)> evaluate;
  std::string descriptor;
};

BaseKernel linear_kernel();
BaseKernel polynomial_kernel(unsigned degree, double offset = 1.0);
BaseKernel rbf_kernel(double gamma);

/// Kernel over (point, domain) pairs: (1+beta)*K within a domain, K across
/// domains.  beta = 1 gives the 2K/K construction; beta = 0 collapses to the
/// base kernel.
double expanded_kernel(const SparseVector& x, const DomainId& dx,
                       const SparseVector& x2, const DomainId& dx2,
                       const BaseKernel& base, double beta = 1.0);

/// Dense n x n Gram matrix of expanded_kernel values, row-major.
std::vector<std::vector<double>> kernel_matrix(
    const std::vector<std::pair<SparseVector, DomainId>>& points,
    const BaseKernel& base, double beta = 1.0);

}  // namespace augtk
