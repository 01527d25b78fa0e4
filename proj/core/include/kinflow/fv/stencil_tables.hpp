#ifndef KINFLOW_FV_STENCIL_TABLES_HPP
#define KINFLOW_FV_STENCIL_TABLES_HPP

// Reconstruction stencil matrices. Each matrix maps stencil data to monomial
// coefficients of the reconstruction polynomial in the local coordinate
// s = (x - x_i)/dx, i.e. coeff[d] = sum_k M[d][k] * data[k] and
// p(s) = sum_d coeff[d] s^d. Derivatives in s pick up the 1/dx Jacobian per
// order when converted to physical coordinates.

namespace kinflow::fv {

// Fifth-order stencil {i-2..i+2}, sub-stencils of cell means:
// sub0 = {i-2,i-1,i}, sub1 = {i-1,i,i+1}, sub2 = {i,i+1,i+2}.
inline constexpr double kWeno5Sub0[3][3] = {
  {-0.041666666666666666667, 0.083333333333333333333, 0.95833333333333333333},
  {0.50000000000000000000, -2.0000000000000000000, 1.5000000000000000000},
  {0.50000000000000000000, -1.0000000000000000000, 0.50000000000000000000},
};
inline constexpr double kWeno5Sub1[3][3] = {
  {-0.041666666666666666667, 1.0833333333333333333, -0.041666666666666666667},
  {-0.50000000000000000000, 0, 0.50000000000000000000},
  {0.50000000000000000000, -1.0000000000000000000, 0.50000000000000000000},
};
inline constexpr double kWeno5Sub2[3][3] = {
  {0.95833333333333333333, 0.083333333333333333333, -0.041666666666666666667},
  {-1.5000000000000000000, 2.0000000000000000000, -0.50000000000000000000},
  {0.50000000000000000000, -1.0000000000000000000, 0.50000000000000000000},
};
// Full quartic through the five means {i-2..i+2}.
inline constexpr double kWeno5Full[5][5] = {
  {0.0046875000000000000000, -0.060416666666666666667, 1.1114583333333333333, -0.060416666666666666667, 0.0046875000000000000000},
  {0.10416666666666666667, -0.70833333333333333333, 0, 0.70833333333333333333, -0.10416666666666666667},
  {-0.062500000000000000000, 0.75000000000000000000, -1.3750000000000000000, 0.75000000000000000000, -0.062500000000000000000},
  {-0.083333333333333333333, 0.16666666666666666667, 0, -0.16666666666666666667, 0.083333333333333333333},
  {0.041666666666666666667, -0.16666666666666666667, 0.25000000000000000000, -0.16666666666666666667, 0.041666666666666666667},
};

// Third-order stencil {i-1..i+1}: linear sub-stencils {i-1,i} and {i,i+1},
// quadratic over all three means.
inline constexpr double kWeno3Sub0[2][2] = {
  {0, 1.0000000000000000000},
  {-1.0000000000000000000, 1.0000000000000000000},
};
inline constexpr double kWeno3Sub1[2][2] = {
  {1.0000000000000000000, 0},
  {-1.0000000000000000000, 1.0000000000000000000},
};
inline constexpr double kWeno3Full[3][3] = {
  {-0.041666666666666666667, 1.0833333333333333333, -0.041666666666666666667},
  {-0.50000000000000000000, 0, 0.50000000000000000000},
  {0.50000000000000000000, -1.0000000000000000000, 0.50000000000000000000},
};

// Hermite fifth-order reconstruction, slope means in reference units
// (physical slope mean * dx). Data layouts:
//   kHwenoSub0: {mean_{i-1}, mean_i, slope_{i-1}}
//   kHwenoSub1: {mean_i, mean_{i+1}, slope_{i+1}}
//   kHwenoFull: {mean_{i-1}, mean_i, mean_{i+1}, slope_{i-1}, slope_{i+1}}
inline constexpr double kHwenoSub0[3][3] = {
  {0.083333333333333333333, 0.91666666666666666667, 0.083333333333333333333},
  {-2.0000000000000000000, 2.0000000000000000000, -1.0000000000000000000},
  {-1.0000000000000000000, 1.0000000000000000000, -1.0000000000000000000},
};
inline constexpr double kHwenoSub1[3][3] = {
  {0.91666666666666666667, 0.083333333333333333333, -0.083333333333333333333},
  {-2.0000000000000000000, 2.0000000000000000000, -1.0000000000000000000},
  {1.0000000000000000000, -1.0000000000000000000, 1.0000000000000000000},
};
inline constexpr double kHwenoFull[5][5] = {
  {-0.097916666666666666667, 1.1958333333333333333, -0.097916666666666666667, -0.028125000000000000000, 0.028125000000000000000},
  {-0.81250000000000000000, 0, 0.81250000000000000000, -0.31250000000000000000, -0.31250000000000000000},
  {1.2500000000000000000, -2.5000000000000000000, 1.2500000000000000000, 0.37500000000000000000, -0.37500000000000000000},
  {0.25000000000000000000, 0, -0.25000000000000000000, 0.25000000000000000000, 0.25000000000000000000},
  {-0.50000000000000000000, 1.0000000000000000000, -0.50000000000000000000, -0.25000000000000000000, 0.25000000000000000000},
};

// Quartic in the interface-centred coordinate s = (x - x_{i+1/2})/dx matching
// the slope means of cells i-1..i+2 (reference units) and the point value W0
// at the interface. Data: {sl_{i-1}, sl_i, sl_{i+1}, sl_{i+2}, W0}. Rows 1
// and 2, scaled by the derivative factorials, reproduce the equilibrium
// interface derivatives S1*dx and S2*dx^2/2.
inline constexpr double kIfaceSlopeQuartic[5][5] = {
  {0, 0, 0, 0, 1.0000000000000000000},
  {-0.083333333333333333333, 0.58333333333333333333, 0.58333333333333333333, -0.083333333333333333333, 0},
  {0.041666666666666666667, -0.62500000000000000000, 0.62500000000000000000, -0.041666666666666666667, 0},
  {0.083333333333333333333, -0.083333333333333333333, -0.083333333333333333333, 0.083333333333333333333, 0},
  {-0.041666666666666666667, 0.12500000000000000000, -0.12500000000000000000, 0.041666666666666666667, 0},
};

}  // namespace kinflow::fv

#endif
