#include "kinflow/dg/solution.hpp"

#include <cstring>

#include "kinflow/quadrature.hpp"

namespace kinflow::dg {

namespace {

inline void copy_cell(DGSolution& u, int di, int dj, int si, int sj) {
  std::memcpy(u.cell(di, dj), u.cell(si, sj),
              sizeof(double) * u.basis.n_modes * 4);
}

inline void set_constant(DGSolution& u, int i, int j, const ConservedState& w) {
  double* c = u.cell(i, j);
  std::memset(c, 0, sizeof(double) * u.basis.n_modes * 4);
  for (int v = 0; v < 4; ++v) c[v] = w[v];
}

// L2-project a FixedProfile payload onto the ghost cell's modes.
void set_profile(DGSolution& u, int i, int j, const SideSpec& spec) {
  if (!spec.profile) {
    set_constant(u, i, j, spec.fixed_state);
    return;
  }
  const Grid& g = u.grid;
  QuadratureRule q = gauss_rule(6);
  double* c = u.cell(i, j);
  std::memset(c, 0, sizeof(double) * u.basis.n_modes * 4);
  if (g.dim == 1) {
    for (int a = 0; a < q.size(); ++a) {
      ConservedState w = spec.profile(g.x_center(i) + q.nodes[a] * g.dx, 0.0);
      for (int l = 0; l < u.basis.n_modes; ++l) {
        double phi = q.weights[a] * u.basis.eval(l, q.nodes[a], 0.0);
        for (int v = 0; v < 4; ++v) c[l * 4 + v] += phi * w[v];
      }
    }
  } else {
    for (int b = 0; b < q.size(); ++b)
      for (int a = 0; a < q.size(); ++a) {
        ConservedState w = spec.profile(g.x_center(i) + q.nodes[a] * g.dx,
                                        g.y_center(j) + q.nodes[b] * g.dy);
        for (int l = 0; l < u.basis.n_modes; ++l) {
          double phi = q.weights[a] * q.weights[b] *
                       u.basis.eval(l, q.nodes[a], q.nodes[b]);
          for (int v = 0; v < 4; ++v) c[l * 4 + v] += phi * w[v];
        }
      }
  }
}

// Mirror the polynomial of the source cell across a wall normal to `axis`:
// odd modes in the normal direction flip sign, and so does the normal
// momentum component.
inline void mirror_cell(DGSolution& u, int di, int dj, int si, int sj, Axis axis) {
  const double* s = u.cell(si, sj);
  double* d = u.cell(di, dj);
  int mom = axis == Axis::X ? 1 : 2;
  for (int l = 0; l < u.basis.n_modes; ++l) {
    int deg = axis == Axis::X ? u.basis.powers[l][0] : u.basis.powers[l][1];
    double sign = (deg % 2 == 0) ? 1.0 : -1.0;
    for (int v = 0; v < 4; ++v) {
      double val = sign * s[l * 4 + v];
      d[l * 4 + v] = (v == mom) ? -val : val;
    }
  }
}

void fill_x(DGSolution& u, const SideSpec& spec, bool left, int j0, int j1) {
  const Grid& g = u.grid;
  int ng = g.ng;
  for (int j = j0; j < j1; ++j)
    for (int k = 0; k < ng; ++k) {
      int gi = left ? ng - 1 - k : ng + g.nx + k;
      int wrap = left ? ng + g.nx - 1 - k : ng + k;
      int edge = left ? ng : ng + g.nx - 1;
      int mir = left ? ng + k : ng + g.nx - 1 - k;
      switch (spec.kind) {
        case BoundaryKind::Periodic: copy_cell(u, gi, j, wrap, j); break;
        case BoundaryKind::NonReflecting: copy_cell(u, gi, j, edge, j); break;
        case BoundaryKind::FixedProfile: set_profile(u, gi, j, spec); break;
        case BoundaryKind::ReflectingWall: mirror_cell(u, gi, j, mir, j, Axis::X); break;
        default:
          throw std::logic_error("double Mach conditions apply to y sides only");
      }
    }
}

void fill_y(DGSolution& u, const SideSpec& spec, bool bottom, double time) {
  const Grid& g = u.grid;
  int ng = g.ng;
  for (int i = 0; i < g.sx(); ++i)
    for (int k = 0; k < ng; ++k) {
      int gj = bottom ? ng - 1 - k : ng + g.ny + k;
      int wrap = bottom ? ng + g.ny - 1 - k : ng + k;
      int edge = bottom ? ng : ng + g.ny - 1;
      int mir = bottom ? ng + k : ng + g.ny - 1 - k;
      switch (spec.kind) {
        case BoundaryKind::Periodic: copy_cell(u, i, gj, i, wrap); break;
        case BoundaryKind::NonReflecting: copy_cell(u, i, gj, i, edge); break;
        case BoundaryKind::FixedProfile: set_profile(u, i, gj, spec); break;
        case BoundaryKind::ReflectingWall: mirror_cell(u, i, gj, i, mir, Axis::Y); break;
        case BoundaryKind::DoubleMachBottom:
          if (g.x_center(i) < double_mach::kWallStart)
            set_constant(u, i, gj, double_mach::post_shock_state());
          else
            mirror_cell(u, i, gj, i, mir, Axis::Y);
          break;
        case BoundaryKind::DoubleMachTop: {
          double xs = double_mach::shock_x(g.ymax, time);
          set_constant(u, i, gj,
                       g.x_center(i) < xs ? double_mach::post_shock_state()
                                          : double_mach::pre_shock_state());
          break;
        }
      }
    }
}

}  // namespace

void fill_ghosts(DGSolution& u, const BoundarySpec& bc, double time) {
  const Grid& g = u.grid;
  if (g.dim == 1) {
    fill_x(u, bc.side[0], true, 0, 1);
    fill_x(u, bc.side[1], false, 0, 1);
    return;
  }
  fill_x(u, bc.side[0], true, g.ng, g.ng + g.ny);
  fill_x(u, bc.side[1], false, g.ng, g.ng + g.ny);
  fill_y(u, bc.side[2], true, time);
  fill_y(u, bc.side[3], false, time);
}

}  // namespace kinflow::dg
