#ifndef KINFLOW_GKS_SOLVER_HPP
#define KINFLOW_GKS_SOLVER_HPP

#include <stdexcept>
#include <vector>

#include "kinflow/gks/flux.hpp"

namespace kinflow::gks {

struct PositivityFailure : std::runtime_error {
  PositivityFailure() : std::runtime_error("invalid state after update (dt retry exhausted)") {}
};

struct GksConfig {
  fv::ReconOptions recon;
  double cfl = 0.5;
  // Epsilon of the artificial collision time tau = eps*dt + C*dt*|dp|/(sum p);
  // 0 runs the inviscid limit for smooth accuracy studies.
  double tau_eps = 0.01;
};

struct FluxLedger {
  ConservedState net_outflow{};
};

// Two-stage fourth-order finite-volume update driven by the time-accurate
// kinetic interface flux. The compact variant (recon.scheme == Hweno5) also
// carries cell-averaged slopes, updated from the evolved interface states by
// Gauss' theorem.
class GksSolver {
 public:
  GksSolver(const Grid& grid, const GasModel& model, const GksConfig& cfg);

  double timestep(const FVField& field) const;

  // One S2O4 step of size dt (halved once and retried on positivity
  // failure); returns the dt actually advanced.
  double step(FVField& field, const BoundarySpec& bc, double time, double dt,
              FluxLedger* ledger = nullptr);

  int halvings() const { return halvings_; }

 private:
  Grid grid_;
  GasModel model_;
  GksConfig cfg_;
  int halvings_ = 0;

  struct FaceData {
    ConservedState f, df;  // face-averaged flux and time derivative
    ConservedState wmid;   // face-averaged interface state at dt/2
  };

  // Flux sweep over all faces of `field` (ghosts are filled here).
  void sweep(FVField& field, const BoundarySpec& bc, double time, double dt,
             std::vector<FaceData>& fx, std::vector<FaceData>& fy) const;

  bool try_step(FVField& field, const BoundarySpec& bc, double time, double dt,
                FluxLedger* ledger) const;
};

}  // namespace kinflow::gks

#endif
