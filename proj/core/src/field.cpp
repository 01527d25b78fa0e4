#include "kinflow/field.hpp"

namespace kinflow {

namespace {

// Mirror sign pattern for a wall with normal along `axis`: the normal
// momentum component flips.
inline ConservedState mirror(const ConservedState& w, Axis axis) {
  ConservedState m = w;
  if (axis == Axis::X) m.mom_x = -m.mom_x;
  else m.mom_y = -m.mom_y;
  return m;
}

inline void set_cell(FVField& f, int i, int j, const ConservedState& w,
                     const ConservedState& sx, const ConservedState& sy) {
  int id = f.grid.index(i, j);
  f.w[id] = w;
  if (f.has_slopes) {
    f.wx[id] = sx;
    if (f.grid.dim == 2) f.wy[id] = sy;
  }
}

inline ConservedState neg(const ConservedState& w) { return -1.0 * w; }

// Cell mean of a FixedProfile payload over ghost cell (i,j) via 4-point
// Gauss per direction, plus the mean slopes for the compact scheme.
void set_profile_cell(FVField& f, int i, int j, const SideSpec& spec) {
  const Grid& g = f.grid;
  static constexpr double kN[4] = {-0.43056815579702629, -0.16999052179242813,
                                   0.16999052179242813, 0.43056815579702629};
  static constexpr double kW[4] = {0.17392742256872693, 0.32607257743127307,
                                   0.32607257743127307, 0.17392742256872693};
  double xc = g.x_center(i), yc = g.y_center(j);
  ConservedState mean{};
  if (g.dim == 1) {
    for (int a = 0; a < 4; ++a)
      mean = mean + kW[a] * spec.profile(xc + kN[a] * g.dx, yc);
  } else {
    for (int b = 0; b < 4; ++b)
      for (int a = 0; a < 4; ++a)
        mean = mean + (kW[a] * kW[b]) *
                          spec.profile(xc + kN[a] * g.dx, yc + kN[b] * g.dy);
  }
  ConservedState sx{}, sy{};
  if (f.has_slopes) {
    // Mean derivative = difference of the face means.
    auto face_mean_x = [&](double x) {
      ConservedState s{};
      if (g.dim == 1) return spec.profile(x, yc);
      for (int b = 0; b < 4; ++b)
        s = s + kW[b] * spec.profile(x, yc + kN[b] * g.dy);
      return s;
    };
    sx = (1.0 / g.dx) * (face_mean_x(xc + 0.5 * g.dx) - face_mean_x(xc - 0.5 * g.dx));
    if (g.dim == 2) {
      auto face_mean_y = [&](double y) {
        ConservedState s{};
        for (int a = 0; a < 4; ++a)
          s = s + kW[a] * spec.profile(xc + kN[a] * g.dx, y);
        return s;
      };
      sy = (1.0 / g.dy) *
           (face_mean_y(yc + 0.5 * g.dy) - face_mean_y(yc - 0.5 * g.dy));
    }
  }
  set_cell(f, i, j, mean, sx, sy);
}

void fill_x_side(FVField& f, const SideSpec& spec, bool left, double /*time*/,
                 int j0, int j1) {
  const Grid& g = f.grid;
  int ng = g.ng;
  for (int j = j0; j < j1; ++j) {
    for (int k = 0; k < ng; ++k) {
      int gi = left ? ng - 1 - k : ng + g.nx + k;         // ghost column
      int src_wrap = left ? ng + g.nx - 1 - k : ng + k;   // periodic partner
      int src_edge = left ? ng : ng + g.nx - 1;           // boundary cell
      int src_mir = left ? ng + k : ng + g.nx - 1 - k;    // mirror partner
      int id_wrap = g.index(src_wrap, j), id_edge = g.index(src_edge, j),
          id_mir = g.index(src_mir, j);
      switch (spec.kind) {
        case BoundaryKind::Periodic:
          set_cell(f, gi, j, f.w[id_wrap],
                   f.has_slopes ? f.wx[id_wrap] : ConservedState{},
                   f.has_slopes && g.dim == 2 ? f.wy[id_wrap] : ConservedState{});
          break;
        case BoundaryKind::NonReflecting:
          set_cell(f, gi, j, f.w[id_edge],
                   f.has_slopes ? f.wx[id_edge] : ConservedState{},
                   f.has_slopes && g.dim == 2 ? f.wy[id_edge] : ConservedState{});
          break;
        case BoundaryKind::FixedProfile:
          if (spec.profile) set_profile_cell(f, gi, j, spec);
          else set_cell(f, gi, j, spec.fixed_state, {}, {});
          break;
        case BoundaryKind::ReflectingWall:
          set_cell(f, gi, j, mirror(f.w[id_mir], Axis::X),
                   f.has_slopes ? neg(mirror(f.wx[id_mir], Axis::X)) : ConservedState{},
                   f.has_slopes && g.dim == 2 ? mirror(f.wy[id_mir], Axis::X)
                                              : ConservedState{});
          break;
        default:
          throw std::logic_error("double Mach conditions apply to y sides only");
      }
    }
  }
}

void fill_y_side(FVField& f, const SideSpec& spec, bool bottom, double time) {
  const Grid& g = f.grid;
  int ng = g.ng;
  for (int i = 0; i < g.sx(); ++i) {
    for (int k = 0; k < ng; ++k) {
      int gj = bottom ? ng - 1 - k : ng + g.ny + k;
      int src_wrap = bottom ? ng + g.ny - 1 - k : ng + k;
      int src_edge = bottom ? ng : ng + g.ny - 1;
      int src_mir = bottom ? ng + k : ng + g.ny - 1 - k;
      int id_wrap = g.index(i, src_wrap), id_edge = g.index(i, src_edge),
          id_mir = g.index(i, src_mir);
      switch (spec.kind) {
        case BoundaryKind::Periodic:
          set_cell(f, i, gj, f.w[id_wrap],
                   f.has_slopes ? f.wx[id_wrap] : ConservedState{},
                   f.has_slopes ? f.wy[id_wrap] : ConservedState{});
          break;
        case BoundaryKind::NonReflecting:
          set_cell(f, i, gj, f.w[id_edge],
                   f.has_slopes ? f.wx[id_edge] : ConservedState{},
                   f.has_slopes ? f.wy[id_edge] : ConservedState{});
          break;
        case BoundaryKind::FixedProfile:
          if (spec.profile) set_profile_cell(f, i, gj, spec);
          else set_cell(f, i, gj, spec.fixed_state, {}, {});
          break;
        case BoundaryKind::ReflectingWall:
          set_cell(f, i, gj, mirror(f.w[id_mir], Axis::Y),
                   f.has_slopes ? mirror(f.wx[id_mir], Axis::Y) : ConservedState{},
                   f.has_slopes ? neg(mirror(f.wy[id_mir], Axis::Y)) : ConservedState{});
          break;
        case BoundaryKind::DoubleMachBottom: {
          double x = g.x_center(i);
          if (x < double_mach::kWallStart)
            set_cell(f, i, gj, double_mach::post_shock_state(), {}, {});
          else
            set_cell(f, i, gj, mirror(f.w[id_mir], Axis::Y),
                     f.has_slopes ? mirror(f.wx[id_mir], Axis::Y) : ConservedState{},
                     f.has_slopes ? neg(mirror(f.wy[id_mir], Axis::Y))
                                  : ConservedState{});
          break;
        }
        case BoundaryKind::DoubleMachTop: {
          double xs = double_mach::shock_x(g.ymax, time);
          double x = g.x_center(i);
          set_cell(f, i, gj,
                   x < xs ? double_mach::post_shock_state()
                          : double_mach::pre_shock_state(),
                   {}, {});
          break;
        }
      }
    }
  }
}

}  // namespace

void fill_ghosts(FVField& field, const BoundarySpec& bc, double time) {
  const Grid& g = field.grid;
  if (g.dim == 1) {
    fill_x_side(field, bc.side[0], true, time, 0, 1);
    fill_x_side(field, bc.side[1], false, time, 0, 1);
    return;
  }
  // x sides over interior rows first, then y sides over every column so the
  // corner ghosts see already-filled x ghosts.
  fill_x_side(field, bc.side[0], true, time, g.ng, g.ng + g.ny);
  fill_x_side(field, bc.side[1], false, time, g.ng, g.ng + g.ny);
  fill_y_side(field, bc.side[2], true, time);
  fill_y_side(field, bc.side[3], false, time);
}

}  // namespace kinflow
