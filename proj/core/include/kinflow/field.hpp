#ifndef KINFLOW_FIELD_HPP
#define KINFLOW_FIELD_HPP

#include <vector>

#include "kinflow/euler.hpp"
#include "kinflow/grid.hpp"

namespace kinflow {

// Cell-averaged conserved variables; the compact scheme additionally stores
// cell-averaged x/y slopes.
struct FVField {
  Grid grid;
  std::vector<ConservedState> w;
  std::vector<ConservedState> wx;
  std::vector<ConservedState> wy;
  bool has_slopes = false;

  FVField() = default;
  explicit FVField(const Grid& g, bool slopes = false)
      : grid(g), w(g.cell_count()), has_slopes(slopes) {
    if (slopes) {
      wx.assign(g.cell_count(), {});
      if (g.dim == 2) wy.assign(g.cell_count(), {});
    }
  }

  ConservedState& at(int i, int j = 0) { return w[grid.index(i, j)]; }
  const ConservedState& at(int i, int j = 0) const { return w[grid.index(i, j)]; }
};

// Fills the 3-cell ghost frame in place; interior cells are untouched.
// `time` feeds the moving-shock boundary of the double Mach case.
void fill_ghosts(FVField& field, const BoundarySpec& bc, double time);

}  // namespace kinflow

#endif
