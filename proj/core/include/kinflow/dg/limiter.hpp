#ifndef KINFLOW_DG_LIMITER_HPP
#define KINFLOW_DG_LIMITER_HPP

#include <vector>

#include "kinflow/dg/solver.hpp"

namespace kinflow::dg {

struct LimiterConfig {
  double ck = 1.0;        // detector threshold
  double gamma_lo = 0.1;  // linear weight of the lower-degree candidate
  double gamma_hi = 0.9;  // gamma_lo + gamma_hi == 1
  double epsilon = 1e-10;
  bool detect_density = true;
  bool detect_energy = true;
};

// One flag per interior cell, row-major over (i,j) interior indices.
struct TroubleMask {
  int nx = 0, ny = 0;
  std::vector<char> flag;

  bool at(int ii, int jj = 0) const { return flag[static_cast<size_t>(jj) * nx + ii] != 0; }
  int count() const;
};

class MultiresLimiter {
 public:
  MultiresLimiter(const Grid& grid, const DGBasis& basis, const GasModel& model,
                  const LimiterConfig& config = {});

  // Shock detector: the inflow-boundary jump of each detection variable,
  // normalised by h^R |dI-| min|u_h|, against the threshold ck.
  TroubleMask detect(const DGSolution& u) const;

  // Characteristic-wise hierarchical limiting of every flagged cell.
  // Unflagged cells are untouched; cell averages are preserved exactly.
  void limit(DGSolution& u, const TroubleMask& mask) const;

  // Detect-then-limit on a ghost-filled solution (the RK stage hook body).
  void apply(DGSolution& u, const BoundarySpec& bc, double time) const;

  const TroubleMask& last_mask() const { return last_mask_; }

 private:
  Grid grid_;
  DGBasis basis_;
  GasModel model_;
  LimiterConfig cfg_;
  int nq_;
  QuadratureRule rule_;
  double detector_r_;
  double h_cell_;
  // Per derivative multi-index alpha (|alpha| in 1..k): mode-pair Gram matrix
  // of the reference-coordinate derivatives, plus the mesh scale factor of
  // the smoothness integral.
  struct DerivTerm {
    int order;  // |alpha|
    double scale;
    std::vector<double> gram;  // n_modes x n_modes
  };
  std::vector<DerivTerm> deriv_terms_;
  // Basis traces on the four cell sides (L,R,B,T) at the edge Gauss nodes,
  // [mode * n_edge + node]; a neighbor's trace at a shared face equals its
  // opposite-side table at the same node.
  std::vector<double> trace_[4];
  mutable TroubleMask last_mask_;

  double beta(const double* coeff, int kappa) const;
  void limit_cell(DGSolution& u, const DGSolution& snapshot, int i, int j) const;
};

// Convenience factory for the RK stage hook.
StageHook make_limiter_hook(const MultiresLimiter& limiter, const BoundarySpec& bc);

// Positivity scaling toward the cell mean: wherever the polynomial dips into
// non-positive density or pressure at the evaluation nodes (interior Gauss
// tensor plus cell edges), the higher modes are shrunk just enough to clear
// `eps`. Cell means are untouched; cells whose mean itself is invalid are
// left alone for the solver to report.
void enforce_positivity(DGSolution& u, const GasModel& model, double eps = 1e-13);

}  // namespace kinflow::dg

#endif
