#ifndef KINFLOW_GRID_HPP
#define KINFLOW_GRID_HPP

#include <functional>
#include <stdexcept>

#include "kinflow/euler.hpp"

namespace kinflow {

// Uniform structured grid with a fixed 3-cell ghost layer (wide enough for
// every fifth-order stencil in the suite). 1D grids set ny = 1 and ignore y.
struct Grid {
  int dim = 1;
  double xmin = 0.0, xmax = 1.0;
  double ymin = 0.0, ymax = 1.0;
  int nx = 1, ny = 1;
  int ng = 3;

  double dx = 0.0, dy = 0.0;

  static Grid make_1d(double x0, double x1, int n, int ghosts = 3) {
    Grid g;
    g.dim = 1;
    g.xmin = x0; g.xmax = x1; g.nx = n; g.ny = 1; g.ng = ghosts;
    g.dx = (x1 - x0) / n;
    g.dy = 1.0;
    return g;
  }
  static Grid make_2d(double x0, double x1, double y0, double y1,
                      int nx, int ny, int ghosts = 3) {
    Grid g;
    g.dim = 2;
    g.xmin = x0; g.xmax = x1; g.ymin = y0; g.ymax = y1;
    g.nx = nx; g.ny = ny; g.ng = ghosts;
    g.dx = (x1 - x0) / nx;
    g.dy = (y1 - y0) / ny;
    return g;
  }

  // Storage extents including ghosts; interior cell (i,j) with
  // 0 <= i < nx maps to storage index i + ng.
  int sx() const { return nx + 2 * ng; }
  int sy() const { return dim == 2 ? ny + 2 * ng : 1; }
  int cell_count() const { return sx() * sy(); }
  int index(int i, int j) const { return j * sx() + i; }

  double x_center(int i) const { return xmin + (i - ng + 0.5) * dx; }
  double y_center(int j) const { return dim == 2 ? ymin + (j - ng + 0.5) * dy : 0.0; }
  double x_face(int i) const { return xmin + (i - ng) * dx; }
  double y_face(int j) const { return ymin + (j - ng) * dy; }
  double cell_volume() const { return dim == 2 ? dx * dy : dx; }
};

enum class BoundaryKind {
  Periodic,
  NonReflecting,    // zero-gradient extrapolation
  FixedProfile,     // frozen initial profile
  ReflectingWall,
  DoubleMachBottom, // post-shock state for x < 1/6, wall reflection beyond
  DoubleMachTop,    // pre/post-shock split at the moving shock abscissa
};

struct SideSpec {
  BoundaryKind kind = BoundaryKind::Periodic;
  ConservedState fixed_state{};  // FixedProfile payload (constant)
  // Optional spatially varying FixedProfile payload; overrides fixed_state.
  std::function<ConservedState(double x, double y)> profile;
};

// Per-side boundary plan; sides are indexed 0:left 1:right 2:bottom 3:top.
struct BoundarySpec {
  SideSpec side[4];

  static BoundarySpec periodic() { return BoundarySpec{}; }
  bool is_periodic_x() const {
    return side[0].kind == BoundaryKind::Periodic &&
           side[1].kind == BoundaryKind::Periodic;
  }
  bool is_periodic_y() const {
    return side[2].kind == BoundaryKind::Periodic &&
           side[3].kind == BoundaryKind::Periodic;
  }
};

// Double Mach reflection geometry: Mach 10 shock through (1/6, 0) at 60 deg.
namespace double_mach {
inline constexpr double kWallStart = 1.0 / 6.0;
inline ConservedState post_shock_state() {
  ConservedState w;
  const double rho = 8.0, u = 4.125 * std::sqrt(3.0), v = -4.125, p = 116.5;
  w.rho = rho; w.mom_x = rho * u; w.mom_y = rho * v;
  w.energy = p / 0.4 + 0.5 * rho * (u * u + v * v);
  return w;
}
inline ConservedState pre_shock_state() {
  ConservedState w;
  w.rho = 1.4; w.mom_x = 0.0; w.mom_y = 0.0;
  w.energy = 1.0 / 0.4;
  return w;
}
// Shock abscissa at height y: the foot travels along the wall at 20/sqrt(3).
inline double shock_x(double y, double t) {
  return kWallStart + (y + 20.0 * t) / std::sqrt(3.0);
}
}  // namespace double_mach

}  // namespace kinflow

#endif
