#ifndef KINFLOW_DG_PROJECT_IMPL_HPP
#define KINFLOW_DG_PROJECT_IMPL_HPP

#include "kinflow/quadrature.hpp"

namespace kinflow::dg {

template <class F>
DGSolution project(F&& f, const Grid& grid, const DGBasis& basis) {
  DGSolution u(grid, basis);
  QuadratureRule q = gauss_rule(6);
  if (grid.dim == 1) {
    for (int i = grid.ng; i < grid.ng + grid.nx; ++i) {
      double* c = u.cell(i, 0);
      for (int n = 0; n < q.size(); ++n) {
        double x = grid.x_center(i) + q.nodes[n] * grid.dx;
        ConservedState w = f(x, 0.0);
        for (int l = 0; l < basis.n_modes; ++l) {
          double wphi = q.weights[n] * basis.eval(l, q.nodes[n], 0.0);
          for (int v = 0; v < 4; ++v) c[l * 4 + v] += wphi * w[v];
        }
      }
    }
  } else {
    for (int j = grid.ng; j < grid.ng + grid.ny; ++j)
      for (int i = grid.ng; i < grid.ng + grid.nx; ++i) {
        double* c = u.cell(i, j);
        for (int m = 0; m < q.size(); ++m)
          for (int n = 0; n < q.size(); ++n) {
            double x = grid.x_center(i) + q.nodes[m] * grid.dx;
            double y = grid.y_center(j) + q.nodes[n] * grid.dy;
            ConservedState w = f(x, y);
            double wq = q.weights[m] * q.weights[n];
            for (int l = 0; l < basis.n_modes; ++l) {
              double wphi = wq * basis.eval(l, q.nodes[m], q.nodes[n]);
              for (int v = 0; v < 4; ++v) c[l * 4 + v] += wphi * w[v];
            }
          }
      }
  }
  return u;
}

}  // namespace kinflow::dg

#endif
