#include "kinflow/euler.hpp"

namespace kinflow {

PrimitiveState cons_to_prim(const ConservedState& w, const GasModel& model) {
  if (!(w.rho > 0.0)) throw NonPositiveDensity();
  PrimitiveState p;
  p.rho = w.rho;
  p.u_x = w.mom_x / w.rho;
  p.u_y = w.mom_y / w.rho;
  double kinetic = 0.5 * (w.mom_x * p.u_x + w.mom_y * p.u_y);
  p.pressure = (model.gamma - 1.0) * (w.energy - kinetic);
  if (!(p.pressure > 0.0)) throw NonPositivePressure();
  p.lambda = p.rho / (2.0 * p.pressure);
  return p;
}

ConservedState prim_to_cons(const PrimitiveState& p, const GasModel& model) {
  ConservedState w;
  w.rho = p.rho;
  w.mom_x = p.rho * p.u_x;
  w.mom_y = p.rho * p.u_y;
  w.energy = p.pressure / (model.gamma - 1.0) +
             0.5 * p.rho * (p.u_x * p.u_x + p.u_y * p.u_y);
  return w;
}

ConservedState euler_flux(const ConservedState& w, Axis axis, const GasModel& model) {
  PrimitiveState p = cons_to_prim(w, model);
  ConservedState f;
  if (axis == Axis::X) {
    f.rho = w.mom_x;
    f.mom_x = w.mom_x * p.u_x + p.pressure;
    f.mom_y = w.mom_y * p.u_x;
    f.energy = p.u_x * (w.energy + p.pressure);
  } else {
    f.rho = w.mom_y;
    f.mom_x = w.mom_x * p.u_y;
    f.mom_y = w.mom_y * p.u_y + p.pressure;
    f.energy = p.u_y * (w.energy + p.pressure);
  }
  return f;
}

namespace {

struct RoeAverage {
  double u, v, h, c;  // velocity, total enthalpy, sound speed
};

RoeAverage roe_average(const ConservedState& wl, const ConservedState& wr,
                       const GasModel& model) {
  PrimitiveState pl = cons_to_prim(wl, model);
  PrimitiveState pr = cons_to_prim(wr, model);
  double sl = std::sqrt(pl.rho), sr = std::sqrt(pr.rho);
  double inv = 1.0 / (sl + sr);
  RoeAverage a;
  a.u = (sl * pl.u_x + sr * pr.u_x) * inv;
  a.v = (sl * pl.u_y + sr * pr.u_y) * inv;
  double hl = (wl.energy + pl.pressure) / pl.rho;
  double hr = (wr.energy + pr.pressure) / pr.rho;
  a.h = (sl * hl + sr * hr) * inv;
  double c2 = (model.gamma - 1.0) * (a.h - 0.5 * (a.u * a.u + a.v * a.v));
  if (!(c2 > 0.0)) throw DegenerateAverage();
  a.c = std::sqrt(c2);
  return a;
}

}  // namespace

EigenSystem eigen_system(const ConservedState& wl, const ConservedState& wr,
                         Axis axis, const GasModel& model) {
  RoeAverage a = roe_average(wl, wr, model);
  // Work in the frame where `un` is the normal velocity and `ut` tangential,
  // then permute momentum slots back for the Y axis.
  double un = axis == Axis::X ? a.u : a.v;
  double ut = axis == Axis::X ? a.v : a.u;
  double c = a.c, h = a.h;
  double g1 = model.gamma - 1.0;
  double q2 = un * un + ut * ut;
  double b = g1 / (c * c);

  // Right eigenvectors in (rho, mn, mt, E) ordering.
  double R[4][4] = {
      {1.0, 1.0, 0.0, 1.0},
      {un - c, un, 0.0, un + c},
      {ut, ut, 1.0, ut},
      {h - un * c, 0.5 * q2, ut, h + un * c}};
  double L[4][4] = {
      {0.5 * (0.5 * b * q2 + un / c), -0.5 * (b * un + 1.0 / c), -0.5 * b * ut, 0.5 * b},
      {1.0 - 0.5 * b * q2, b * un, b * ut, -b},
      {-ut, 0.0, 1.0, 0.0},
      {0.5 * (0.5 * b * q2 - un / c), -0.5 * (b * un - 1.0 / c), -0.5 * b * ut, 0.5 * b}};

  EigenSystem es;
  // Permutation of conserved slots: X axis keeps (mn,mt) = (mx,my);
  // Y axis swaps them.
  int perm[4] = {0, 1, 2, 3};
  if (axis == Axis::Y) { perm[1] = 2; perm[2] = 1; }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      es.right[perm[i]][j] = R[i][j];
      es.left[j][perm[i]] = L[j][i];
    }
  return es;
}

EigenSystem1D eigen_system_1d(const ConservedState& wl, const ConservedState& wr,
                              const GasModel& model) {
  RoeAverage a = roe_average(wl, wr, model);
  double u = a.u, c = a.c, h = a.h;
  double b = (model.gamma - 1.0) / (c * c);

  EigenSystem1D es;
  double R[3][3] = {
      {1.0, 1.0, 1.0},
      {u - c, u, u + c},
      {h - u * c, 0.5 * u * u, h + u * c}};
  double L[3][3] = {
      {0.5 * (0.5 * b * u * u + u / c), -0.5 * (b * u + 1.0 / c), 0.5 * b},
      {1.0 - 0.5 * b * u * u, b * u, -b},
      {0.5 * (0.5 * b * u * u - u / c), -0.5 * (b * u - 1.0 / c), 0.5 * b}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      es.right[i][j] = R[i][j];
      es.left[i][j] = L[i][j];
    }
  return es;
}

}  // namespace kinflow
