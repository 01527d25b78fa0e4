#include "kinflow/fv/weno.hpp"

#include <algorithm>
#include <cmath>

#include "kinflow/fv/stencil_tables.hpp"

namespace kinflow::fv {

double Poly1D::eval(double s, int order) const {
  double r = 0.0;
  for (int m = deg; m >= order; --m) {
    double fac = 1.0;
    for (int q = 0; q < order; ++q) fac *= m - q;
    r = r * s + fac * c[m];
  }
  return r;
}

namespace {

// Integral of s^k over [-1/2, 1/2].
inline double smoment(int k) {
  if (k % 2) return 0.0;
  double p = std::ldexp(1.0, -k);  // (1/2)^k
  return p / (k + 1);
}

template <int N>
void apply(const double M[N][N], const double* data, Poly1D& p) {
  p.deg = N - 1;
  p.c = {};
  for (int d = 0; d < N; ++d) {
    double acc = 0.0;
    for (int k = 0; k < N; ++k) acc += M[d][k] * data[k];
    p.c[d] = acc;
  }
}

}  // namespace

double Poly1D::beta() const {
  double b = 0.0;
  std::array<double, 5> d = c;
  int dg = deg;
  for (int order = 1; order <= deg; ++order) {
    // differentiate
    for (int m = 0; m < dg; ++m) d[m] = (m + 1) * d[m + 1];
    d[dg] = 0.0;
    --dg;
    for (int a = 0; a <= dg; ++a)
      for (int bidx = 0; bidx <= dg; ++bidx) b += d[a] * d[bidx] * smoment(a + bidx);
  }
  return b;
}

void weno_z_weights(const double* beta, const double* gamma, int n, double eps,
                    double* w) {
  double bmin = beta[0], bmax = beta[0];
  for (int k = 1; k < n; ++k) {
    bmin = std::min(bmin, beta[k]);
    bmax = std::max(bmax, beta[k]);
  }
  double tau = (bmax - bmin) * (bmax - bmin);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    w[k] = gamma[k] * (1.0 + tau / (eps + beta[k]));
    sum += w[k];
  }
  for (int k = 0; k < n; ++k) w[k] /= sum;
}

ReconPoint combine(const Poly1D* polys, const double* beta, const double* gamma,
                   int n, double eps, double s0, bool nonlinear) {
  double w[4];
  if (nonlinear)
    weno_z_weights(beta, gamma, n, eps, w);
  else
    std::copy(gamma, gamma + n, w);
  ReconPoint r;
  for (int k = 0; k < n; ++k) {
    r.value += w[k] * polys[k].eval(s0);
    r.d1 += w[k] * polys[k].eval(s0, 1);
    r.d2 += w[k] * polys[k].eval(s0, 2);
  }
  return r;
}

ReconPoint weno5_point(const double means[5], double s0, bool nonlinear,
                       double eps) {
  Poly1D p[3];
  apply<3>(kWeno5Sub0, means, p[0]);
  apply<3>(kWeno5Sub1, means + 1, p[1]);
  apply<3>(kWeno5Sub2, means + 2, p[2]);
  double beta[3] = {p[0].beta(), p[1].beta(), p[2].beta()};
  double gamma[3];
  if (s0 > 0) {
    gamma[0] = 0.1; gamma[1] = 0.6; gamma[2] = 0.3;
  } else {
    gamma[0] = 0.3; gamma[1] = 0.6; gamma[2] = 0.1;
  }
  return combine(p, beta, gamma, 3, eps, s0, nonlinear);
}

ReconPoint weno3_point(const double means[3], double s0, bool nonlinear,
                       double eps) {
  Poly1D p[2];
  apply<2>(kWeno3Sub0, means, p[0]);
  apply<2>(kWeno3Sub1, means + 1, p[1]);
  double beta[2] = {p[0].beta(), p[1].beta()};
  double gamma[2];
  if (s0 > 0) {
    gamma[0] = 1.0 / 3.0; gamma[1] = 2.0 / 3.0;
  } else {
    gamma[0] = 2.0 / 3.0; gamma[1] = 1.0 / 3.0;
  }
  ReconPoint r = combine(p, beta, gamma, 2, eps, s0, nonlinear);
  Poly1D full;
  apply<3>(kWeno3Full, means, full);
  r.d2 = full.eval(s0, 2);
  return r;
}

ReconPoint weno5_gauss(const double means[5], double s0, bool nonlinear,
                       const std::array<double, 3>& gamma, double eps) {
  Poly1D p[3], full;
  apply<3>(kWeno5Sub0, means, p[0]);
  apply<3>(kWeno5Sub2, means + 2, p[1]);
  apply<5>(kWeno5Full, means, full);
  // Substituted high-order candidate: linear weights reproduce the quartic.
  p[2].deg = 4;
  for (int d = 0; d < 5; ++d) {
    double lo = (d < 3 ? gamma[0] * p[0].c[d] + gamma[1] * p[1].c[d] : 0.0);
    p[2].c[d] = (full.c[d] - lo) / gamma[2];
  }
  double beta[3] = {p[0].beta(), p[1].beta(), full.beta()};
  return combine(p, beta, gamma.data(), 3, eps, s0, nonlinear);
}

ReconPoint hweno5_point(const double means[3], const double slopes[2], double s0,
                        bool nonlinear, const std::array<double, 3>& gamma,
                        double eps) {
  double d0[3] = {means[0], means[1], slopes[0]};
  double d1[3] = {means[1], means[2], slopes[1]};
  double dfull[5] = {means[0], means[1], means[2], slopes[0], slopes[1]};
  Poly1D p[3], full;
  apply<3>(kHwenoSub0, d0, p[0]);
  apply<3>(kHwenoSub1, d1, p[1]);
  apply<5>(kHwenoFull, dfull, full);
  p[2].deg = 4;
  for (int d = 0; d < 5; ++d) {
    double lo = (d < 3 ? gamma[0] * p[0].c[d] + gamma[1] * p[1].c[d] : 0.0);
    p[2].c[d] = (full.c[d] - lo) / gamma[2];
  }
  double beta[3] = {p[0].beta(), p[1].beta(), full.beta()};
  return combine(p, beta, gamma.data(), 3, eps, s0, nonlinear);
}

ReconPoint linear5_point(const double means[5], double s0) {
  Poly1D full;
  apply<5>(kWeno5Full, means, full);
  return {full.eval(s0), full.eval(s0, 1), full.eval(s0, 2)};
}

ReconPoint slope_quartic_point(const double slopes[4], double s0) {
  double data[5] = {slopes[0], slopes[1], slopes[2], slopes[3], 0.0};
  Poly1D q;
  apply<5>(kIfaceSlopeQuartic, data, q);
  return {q.eval(s0), q.eval(s0, 1), q.eval(s0, 2)};
}

}  // namespace kinflow::fv
