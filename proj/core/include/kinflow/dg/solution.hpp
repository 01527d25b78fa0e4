#ifndef KINFLOW_DG_SOLUTION_HPP
#define KINFLOW_DG_SOLUTION_HPP

#include <vector>

#include "kinflow/dg/basis.hpp"
#include "kinflow/euler.hpp"
#include "kinflow/grid.hpp"

namespace kinflow::dg {

// Modal coefficients per cell; mode 0 is the cell average. Layout is
// cell-major with the four conserved variables innermost.
struct DGSolution {
  Grid grid;
  DGBasis basis;
  std::vector<double> coeffs;

  DGSolution() = default;
  DGSolution(const Grid& g, const DGBasis& b)
      : grid(g), basis(b),
        coeffs(static_cast<size_t>(g.cell_count()) * b.n_modes * 4, 0.0) {}

  double* cell(int i, int j = 0) {
    return coeffs.data() + static_cast<size_t>(grid.index(i, j)) * basis.n_modes * 4;
  }
  const double* cell(int i, int j = 0) const {
    return coeffs.data() + static_cast<size_t>(grid.index(i, j)) * basis.n_modes * 4;
  }

  ConservedState cell_mean(int i, int j = 0) const {
    const double* c = cell(i, j);
    return {c[0], c[1], c[2], c[3]};
  }

  // Pointwise evaluation at reference coords of cell (i,j).
  ConservedState eval(int i, int j, double s, double t) const {
    const double* c = cell(i, j);
    ConservedState w{};
    for (int l = 0; l < basis.n_modes; ++l) {
      double phi = basis.eval(l, s, t);
      for (int v = 0; v < 4; ++v) w[v] += c[l * 4 + v] * phi;
    }
    return w;
  }
};

void fill_ghosts(DGSolution& u, const BoundarySpec& bc, double time);

// L2 projection of a pointwise field onto the modal space (6-point tensor
// Gauss rule, exact for the basis itself).
template <class F>
DGSolution project(F&& f, const Grid& grid, const DGBasis& basis);

}  // namespace kinflow::dg

#include "kinflow/dg/project_impl.hpp"

#endif
