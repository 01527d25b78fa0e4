#ifndef KINFLOW_GKS_MOMENTS_HPP
#define KINFLOW_GKS_MOMENTS_HPP

#include <array>
#include <stdexcept>

#include "kinflow/euler.hpp"

namespace kinflow::gks {

struct NonPositiveLambda : std::runtime_error {
  NonPositiveLambda() : std::runtime_error("non-positive lambda in moment table") {}
};

// Velocity moments of a Maxwellian with macroscopic (rho, U, V, lambda) and
// K internal degrees of freedom. u moments are split by the sign of u for the
// Heaviside parts of the interface distribution.
struct MomentTable {
  double rho = 0.0, U = 0.0, V = 0.0, lam = 0.0, K = 0.0;
  std::array<double, 9> u_all{}, u_pos{}, u_neg{}, v_all{};
  std::array<double, 4> xi{};  // <xi^{2l}>, l = 0..3
};

MomentTable build_moments(const PrimitiveState& p, const GasModel& model);

// Polynomial in the particle velocity monomials u^m v^n xi^{2l}; large
// enough for every contraction in the third-order flux.
struct VPoly {
  static constexpr int NU = 7, NV = 7, NX = 3;
  double c[NU][NV][NX] = {};

  void clear();
  // Adds coeff * (a . psi) * u^mu * v^mv with psi = (1, u, v, (u^2+v^2+xi^2)/2).
  void add_psi(const std::array<double, 4>& a, double coeff = 1.0, int mu = 0,
               int mv = 0);
};

enum class URange { All, Pos, Neg };

// Four-vector of moments <psi_i * P> over the table's Maxwellian (including
// the density factor).
ConservedState contract4(const VPoly& p, const MomentTable& t, URange range);

// Moment matrix of the Maxwellian, LU-factored once and reused for every
// microslope right-hand side of the same state.
class MomentSolver {
 public:
  explicit MomentSolver(const MomentTable& table);

  // Solves <a . psi> = rhs for the expansion coefficients a.
  std::array<double, 4> solve(const ConservedState& rhs) const;

 private:
  double lu_[4][4];
  int piv_[4];
  double rho_;
};

// Interface equilibrium state assembled from the colliding half Maxwellians:
// W^c = int_{u>0} psi g_l + int_{u<0} psi g_r.
ConservedState compatibility_merge(const ConservedState& wl,
                                   const ConservedState& wr,
                                   const GasModel& model);

}  // namespace kinflow::gks

#endif
