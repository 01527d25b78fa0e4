#ifndef KINFLOW_GKS_FLUX_HPP
#define KINFLOW_GKS_FLUX_HPP

#include "kinflow/fv/recon.hpp"
#include "kinflow/gks/moments.hpp"

namespace kinflow::gks {

// tau = eps*dt + C*dt*|p_l - p_r|/(p_l + p_r) with eps = 0.01, C = 1.
double collision_time(double p_l, double p_r, double dt);

struct GksFluxResult {
  ConservedState flux;    // F at t_n (two-point fit over [0, dt])
  ConservedState dflux;   // dF/dt at t_n
  ConservedState w_zero;  // pointwise interface state at t = 0 (= W^c)
  ConservedState w_mid;   // at t = dt/2
  ConservedState w_end;   // at t = dt
};

// Third-order kinetic interface flux in the kernel frame (normal = u).
// Returns the flux and its time derivative per the two-point integral fit,
// plus the evolved pointwise interface states for the compact slope update.
GksFluxResult gks_flux(const fv::InterfacePoint& pt, double tau, double dt,
                       const GasModel& model);

// First-order kinetic flux-vector-splitting flux of two cell means (kernel
// frame): the free-streaming half-Maxwellian fluxes. Positivity fail-safe
// for faces whose high-order update produced an invalid state.
ConservedState kfvs_flux(const ConservedState& wl, const ConservedState& wr,
                         const GasModel& model);

}  // namespace kinflow::gks

#endif
