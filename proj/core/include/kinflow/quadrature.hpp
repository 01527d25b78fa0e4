#ifndef KINFLOW_QUADRATURE_HPP
#define KINFLOW_QUADRATURE_HPP

#include <stdexcept>
#include <vector>

namespace kinflow {

struct UnsupportedOrder : std::runtime_error {
  UnsupportedOrder() : std::runtime_error("quadrature rule supports 1..6 points") {}
};

// Gauss-Legendre rule on the reference cell [-1/2, 1/2], weights sum to 1,
// so sum_i w_i f(s_i) approximates the cell mean of f.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

QuadratureRule gauss_rule(int n_points);

}  // namespace kinflow

#endif
