#ifndef KINFLOW_DG_SOLVER_HPP
#define KINFLOW_DG_SOLVER_HPP

#include <functional>

#include "kinflow/dg/solution.hpp"
#include "kinflow/quadrature.hpp"

namespace kinflow::dg {

enum class FluxKind { LaxFriedrichs, HLL };

// Local Lax-Friedrichs: 0.5(F(wl)+F(wr)) - 0.5 a (wr-wl) with
// a = max(|u|+c) over the two states.
ConservedState lf_flux(const ConservedState& wl, const ConservedState& wr,
                       Axis axis, const GasModel& model);

// HLL with Einfeldt-style wave-speed bounds from the Roe average.
ConservedState hll_flux(const ConservedState& wl, const ConservedState& wr,
                        Axis axis, const GasModel& model);

// Net outflow of conserved quantities through the domain boundary, as seen
// by the residual's interface fluxes (for conservation diagnostics).
struct BoundaryLedger {
  ConservedState net_outflow{};
};

// Semi-discrete DG residual L(u): fills `dudt` (same layout as coefficients)
// so that du/dt = dudt. Ghosts of `u` are filled here.
class DGOperator {
 public:
  DGOperator(const Grid& grid, const DGBasis& basis, const GasModel& model,
             FluxKind flux);

  void residual(DGSolution& u, const BoundarySpec& bc, double time,
                std::vector<double>& dudt, BoundaryLedger* ledger = nullptr) const;

  double timestep(const DGSolution& u, double cfl) const;

  const GasModel& model() const { return model_; }

 private:
  Grid grid_;
  DGBasis basis_;
  GasModel model_;
  FluxKind flux_;
  int nq_;                        // quadrature points per direction
  QuadratureRule rule_;
  // Tables over [mode][point]; 2D volume points are mq*nq_+nq index.
  std::vector<double> phi_vol_, dphis_vol_, dphit_vol_;
  // Edge traces: value of each mode on the 4 edge midlines (L,R,B,T) at the
  // edge quadrature nodes.
  std::vector<double> phi_edge_[4];

  void residual_1d(DGSolution& u, const BoundarySpec& bc, double time,
                   std::vector<double>& dudt, BoundaryLedger* ledger) const;
  void residual_2d(DGSolution& u, const BoundarySpec& bc, double time,
                   std::vector<double>& dudt, BoundaryLedger* ledger) const;
};

// Stage hook invoked after each Runge-Kutta stage (limiter attachment point).
using StageHook = std::function<void(DGSolution&, double /*time*/)>;

// TVD third-order Runge-Kutta step; hook runs after every stage.
void rk3_step(DGSolution& u, double dt, const DGOperator& op,
              const BoundarySpec& bc, double time, const StageHook& hook,
              BoundaryLedger* ledger = nullptr);

// Classical fourth-order Runge-Kutta step.
void rk4_step(DGSolution& u, double dt, const DGOperator& op,
              const BoundarySpec& bc, double time, const StageHook& hook,
              BoundaryLedger* ledger = nullptr);

}  // namespace kinflow::dg

#endif
