#ifndef KINFLOW_FV_WENO_HPP
#define KINFLOW_FV_WENO_HPP

#include <array>

namespace kinflow::fv {

// Monomial polynomial in the reference coordinate s = (x - x_i)/dx of the
// target cell; degree <= 4.
struct Poly1D {
  std::array<double, 5> c{};
  int deg = 0;

  double eval(double s, int order = 0) const;
  // Jiang-Shu smoothness: sum over derivative orders of the reference-scaled
  // squared-derivative integrals over [-1/2, 1/2].
  double beta() const;
};

// WENO-Z nonlinear weights: tau = (beta_max - beta_min)^2,
// w_k ~ gamma_k (1 + tau/(eps + beta_k)), normalised.
void weno_z_weights(const double* beta, const double* gamma, int n, double eps,
                    double* w);

struct ReconPoint {
  double value = 0.0;
  double d1 = 0.0;  // d/ds at the evaluation point
  double d2 = 0.0;  // d2/ds2
};

// Combine candidate polynomials with WENO-Z (or plain linear) weights and
// evaluate value/derivatives at s0.
ReconPoint combine(const Poly1D* polys, const double* beta, const double* gamma,
                   int n, double eps, double s0, bool nonlinear);

// Fifth-order reconstruction from means of cells i-2..i+2, evaluated at the
// cell edge s0 = +-1/2 with the classical optimal weights (1/10,6/10,3/10)
// ordered toward the evaluation side.
ReconPoint weno5_point(const double means[5], double s0, bool nonlinear,
                       double eps = 1e-10);

// Third-order reconstruction from means of cells i-1..i+1 at s0 = +-1/2 with
// weights (1/3,2/3); the second derivative comes from the three-cell
// quadratic.
ReconPoint weno3_point(const double means[3], double s0, bool nonlinear,
                       double eps = 1e-10);

// Fifth-order reconstruction at an arbitrary in-cell point: the two biased
// quadratics plus the substituted high-order candidate
// (Q - g0 p0 - g1 p1)/g2, which reproduces the full quartic at the linear
// weights for any s0.
ReconPoint weno5_gauss(const double means[5], double s0, bool nonlinear,
                       const std::array<double, 3>& gamma = {0.1, 0.1, 0.8},
                       double eps = 1e-10);

// Hermite fifth-order reconstruction from means of i-1..i+1 and slope means
// (reference units, physical slope * dx) of i-1 and i+1; same substitution
// construction with linear weights (0.025, 0.025, 0.95).
ReconPoint hweno5_point(const double means[3], const double slopes[2], double s0,
                        bool nonlinear,
                        const std::array<double, 3>& gamma = {0.025, 0.025, 0.95},
                        double eps = 1e-10);

// Fifth-order linear (no limiting) evaluation of the full stencil polynomial:
// quartic through five means.
ReconPoint linear5_point(const double means[5], double s0);

// Quartic determined by four slope means (reference units) of the cells
// i-1..i+2 around an interface; s0 is measured from the interface. Only
// derivatives are meaningful (row 0 pins the free constant to 0).
ReconPoint slope_quartic_point(const double slopes[4], double s0);

}  // namespace kinflow::fv

#endif
