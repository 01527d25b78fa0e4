#include "bench/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "kinflow/quadrature.hpp"

namespace kinflow::bench {

Norms error_norms(const Grid& grid, const std::vector<ConservedState>& means,
                  const CaseDef& cs, double t) {
  if (!cs.exact) throw std::logic_error("case has no exact solution");
  QuadratureRule q = gauss_rule(6);
  int ny = grid.dim == 2 ? grid.ny : 1;
  Norms n;
  for (int jj = 0; jj < ny; ++jj)
    for (int ii = 0; ii < grid.nx; ++ii) {
      double exact = 0.0;
      int nyq = grid.dim == 2 ? q.size() : 1;
      for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < nyq; ++b) {
          double x = grid.x_center(grid.ng + ii) + q.nodes[a] * grid.dx;
          double y = grid.dim == 2
                         ? grid.y_center(grid.ng + jj) + q.nodes[b] * grid.dy
                         : 0.0;
          exact += q.weights[a] * (grid.dim == 2 ? q.weights[b] : 1.0) *
                   cs.exact(x, y, t).rho;
        }
      double e = std::abs(means[static_cast<size_t>(jj) * grid.nx + ii].rho - exact);
      n.l1 += e;
      n.l2 += e * e;
      n.linf = std::max(n.linf, e);
    }
  double cells = static_cast<double>(grid.nx) * ny;
  n.l1 /= cells;
  n.l2 = std::sqrt(n.l2 / cells);
  return n;
}

Norms error_norms_q(const Grid& grid, const std::vector<double>& rho_q,
                    const CaseDef& cs, double t) {
  if (!cs.exact) throw std::logic_error("case has no exact solution");
  QuadratureRule q = gauss_rule(6);
  int ny = grid.dim == 2 ? grid.ny : 1;
  int per_cell = grid.dim == 2 ? q.size() * q.size() : q.size();
  if (rho_q.size() != static_cast<size_t>(grid.nx) * ny * per_cell)
    throw std::logic_error("sample count does not match the grid");
  Norms n;
  size_t at = 0;
  for (int jj = 0; jj < ny; ++jj)
    for (int ii = 0; ii < grid.nx; ++ii) {
      int nyq = grid.dim == 2 ? q.size() : 1;
      for (int b = 0; b < nyq; ++b)
        for (int a = 0; a < q.size(); ++a) {
          double x = grid.x_center(grid.ng + ii) + q.nodes[a] * grid.dx;
          double y = grid.dim == 2
                         ? grid.y_center(grid.ng + jj) + q.nodes[b] * grid.dy
                         : 0.0;
          double w = q.weights[a] * (grid.dim == 2 ? q.weights[b] : 1.0);
          double e = std::abs(rho_q[at++] - cs.exact(x, y, t).rho);
          n.l1 += w * e;
          n.l2 += w * e * e;
          n.linf = std::max(n.linf, e);
        }
    }
  double cells = static_cast<double>(grid.nx) * ny;
  n.l1 /= cells;
  n.l2 = std::sqrt(n.l2 / cells);
  return n;
}

Norms error_vs_reference(const Grid& grid, const std::vector<ConservedState>& means,
                         const std::vector<double>& fine_rho) {
  if (grid.dim != 1 || fine_rho.size() % grid.nx != 0)
    throw std::logic_error("reference grid is not a refinement");
  int ratio = static_cast<int>(fine_rho.size()) / grid.nx;
  Norms n;
  for (int i = 0; i < grid.nx; ++i) {
    double ref = 0.0;
    for (int k = 0; k < ratio; ++k) ref += fine_rho[static_cast<size_t>(i) * ratio + k];
    ref /= ratio;
    double e = std::abs(means[i].rho - ref);
    n.l1 += e;
    n.l2 += e * e;
    n.linf = std::max(n.linf, e);
  }
  n.l1 /= grid.nx;
  n.l2 = std::sqrt(n.l2 / grid.nx);
  return n;
}

double order_of(double coarse, double fine) {
  if (!(coarse > 0.0) || !(fine > 0.0)) return 0.0;
  return std::log2(coarse / fine);
}

}  // namespace kinflow::bench
