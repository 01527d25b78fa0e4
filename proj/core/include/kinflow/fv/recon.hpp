#ifndef KINFLOW_FV_RECON_HPP
#define KINFLOW_FV_RECON_HPP

#include <vector>

#include "kinflow/field.hpp"
#include "kinflow/fv/weno.hpp"

namespace kinflow::fv {

enum class ReconScheme { Weno3, Weno5, Hweno5 };

struct ReconOptions {
  ReconScheme scheme = ReconScheme::Weno5;
  bool characteristic = false;
  bool nonlinear = true;  // false: pure linear weights (accuracy studies)
};

// All quantities in the kernel frame of the interface: the normal direction
// is "n" and component 1 of every state is the normal momentum (for y-faces
// the momenta are swapped). Derivatives carry physical 1/dx factors.
struct InterfacePoint {
  ConservedState wl, wr;          // one-sided values
  ConservedState dnl, dnr;        // first normal derivatives
  ConservedState d2nl, d2nr;      // second normal derivatives
  ConservedState dtl, dtr;        // first tangential derivatives (2D)
  ConservedState dnc;             // central first normal derivative
  ConservedState d2nc_base;       // central second normal derivative ...
  double d2nc_w0 = 0.0;           // ... completed as base + w0_coef * W0
  ConservedState dtc, d2tc, dntc; // central tangential / mixed derivatives
  bool fallback = false;          // invalid state: use first-order inputs
};

// Tangential Gauss rule per 2D face, on reference coords [-1/2, 1/2].
// Three points keep the face integrals exact through degree 5, matching the
// interior order of the fifth-order reconstructions.
constexpr int kFaceGauss = 3;
constexpr double kFaceNodes[kFaceGauss] = {-0.38729833462074170, 0.0,
                                           0.38729833462074170};
constexpr double kFaceWeights[kFaceGauss] = {5.0 / 18.0, 8.0 / 18.0,
                                             5.0 / 18.0};

// 1D sweep: out[f] describes interface f = 0..nx between cells f-1 and f
// (interior numbering).
void reconstruct_1d(const FVField& field, const ReconOptions& opt,
                    const GasModel& model, std::vector<InterfacePoint>& out);

// 2D sweep for faces normal to `axis`; kFaceGauss tangential points per face.
// Axis X: out[(jj*(nx+1) + f)*kFaceGauss + g], f = 0..nx, jj = 0..ny-1.
// Axis Y: out[(ii*(ny+1) + f)*kFaceGauss + g], f = 0..ny, ii = 0..nx-1.
void reconstruct_2d(const FVField& field, Axis axis, const ReconOptions& opt,
                    const GasModel& model, std::vector<InterfacePoint>& out);

}  // namespace kinflow::fv

#endif
