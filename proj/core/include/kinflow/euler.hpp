#ifndef KINFLOW_EULER_HPP
#define KINFLOW_EULER_HPP

#include <array>
#include <cmath>
#include <stdexcept>

namespace kinflow {

// Conserved state (rho, rho*U, rho*V, rho*E). 1D runs keep mom_y == 0 so the
// same storage serves both dimensions; the dedicated 3x3 eigensystem below
// covers the genuinely one-dimensional characteristic algebra.
struct ConservedState {
  double rho = 0.0;
  double mom_x = 0.0;
  double mom_y = 0.0;
  double energy = 0.0;

  double& operator[](int i) { return (&rho)[i]; }
  double operator[](int i) const { return (&rho)[i]; }
};

inline ConservedState operator+(ConservedState a, const ConservedState& b) {
  for (int i = 0; i < 4; ++i) a[i] += b[i];
  return a;
}
inline ConservedState operator-(ConservedState a, const ConservedState& b) {
  for (int i = 0; i < 4; ++i) a[i] -= b[i];
  return a;
}
inline ConservedState operator*(double s, ConservedState a) {
  for (int i = 0; i < 4; ++i) a[i] *= s;
  return a;
}

struct PrimitiveState {
  double rho = 0.0;
  double u_x = 0.0;
  double u_y = 0.0;
  double pressure = 0.0;
  double lambda = 0.0;  // rho / (2 p)
};

struct GasModel {
  double gamma = 1.4;
  int dim = 2;

  // K = (4-2g)/(g-1) in 2D, (3-g)/(g-1) in 1D.
  double k_internal() const {
    return dim == 2 ? (4.0 - 2.0 * gamma) / (gamma - 1.0)
                    : (3.0 - gamma) / (gamma - 1.0);
  }
  // Internal dof seen by the kinetic kernel, which always works in the
  // (u,v) plane: a 1D gas folds its transverse direction into xi.
  double k_kinetic() const { return (4.0 - 2.0 * gamma) / (gamma - 1.0); }
};

struct NonPositiveDensity : std::runtime_error {
  NonPositiveDensity() : std::runtime_error("non-positive density") {}
};
struct NonPositivePressure : std::runtime_error {
  NonPositivePressure() : std::runtime_error("non-positive pressure") {}
};
struct DegenerateAverage : std::runtime_error {
  DegenerateAverage() : std::runtime_error("Roe average has non-real sound speed") {}
};

enum class Axis { X = 0, Y = 1 };

PrimitiveState cons_to_prim(const ConservedState& w, const GasModel& model);
ConservedState prim_to_cons(const PrimitiveState& p, const GasModel& model);

// Validity probe that never throws; used by reconstruction fallbacks.
inline bool state_valid(const ConservedState& w) {
  if (!(w.rho > 0.0) || !std::isfinite(w.rho)) return false;
  double ei = w.energy - 0.5 * (w.mom_x * w.mom_x + w.mom_y * w.mom_y) / w.rho;
  return ei > 0.0 && std::isfinite(ei);
}

ConservedState euler_flux(const ConservedState& w, Axis axis, const GasModel& model);

inline double sound_speed(const PrimitiveState& p, const GasModel& model) {
  return std::sqrt(model.gamma * p.pressure / p.rho);
}

// Roe-averaged eigensystem of the flux Jacobian, rows of `left` are left
// eigenvectors, columns of `right` the corresponding right eigenvectors,
// ordered (u-c, u, u, u+c). left * right == identity.
struct EigenSystem {
  std::array<std::array<double, 4>, 4> left{};
  std::array<std::array<double, 4>, 4> right{};
};

EigenSystem eigen_system(const ConservedState& wl, const ConservedState& wr,
                         Axis axis, const GasModel& model);

// 1D variant on (rho, rho*U, rho*E), wave order (u-c, u, u+c).
struct EigenSystem1D {
  std::array<std::array<double, 3>, 3> left{};
  std::array<std::array<double, 3>, 3> right{};
};

EigenSystem1D eigen_system_1d(const ConservedState& wl, const ConservedState& wr,
                              const GasModel& model);

}  // namespace kinflow

#endif
