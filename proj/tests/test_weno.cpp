#include <doctest.h>

#include <array>
#include <cmath>

#include "kinflow/fv/weno.hpp"

using namespace kinflow::fv;

namespace {

// Quartic test polynomial in the reference coordinate of cell i.
double poly(double s) {
  return 1.0 + 0.5 * s - 0.3 * s * s + 0.2 * s * s * s + 0.7 * s * s * s * s;
}
double dpoly(double s) {
  return 0.5 - 0.6 * s + 0.6 * s * s + 2.8 * s * s * s;
}
double d2poly(double s) { return -0.6 + 1.2 * s + 8.4 * s * s; }
// Antiderivative for exact cell means.
double ipoly(double s) {
  return s + 0.25 * s * s - 0.1 * s * s * s + 0.05 * s * s * s * s +
         0.14 * s * s * s * s * s;
}
double cell_mean(int k) { return ipoly(k + 0.5) - ipoly(k - 0.5); }

}  // namespace

TEST_CASE("Poly1D beta matches the analytic smoothness integral") {
  // For a + b s + c s^2: beta = b^2 + 13/3 c^2.
  Poly1D p;
  p.c = {0.4, 0.7, -1.1, 0, 0};
  p.deg = 2;
  double b = 0.7, c = -1.1;
  CHECK(p.beta() == doctest::Approx(b * b + 13.0 / 3.0 * c * c).epsilon(1e-13));
}

TEST_CASE("weno_z weights reduce to linear weights for equal betas") {
  double beta[3] = {0.37, 0.37, 0.37};
  double gamma[3] = {0.1, 0.6, 0.3};
  double w[3];
  weno_z_weights(beta, gamma, 3, 1e-10, w);
  for (int k = 0; k < 3; ++k) CHECK(w[k] == doctest::Approx(gamma[k]).epsilon(1e-9));
}

TEST_CASE("weno_z weights suppress the rough candidate") {
  double beta[2] = {1e-4, 10.0};
  double gamma[2] = {0.5, 0.5};
  double w[2];
  weno_z_weights(beta, gamma, 2, 1e-10, w);
  CHECK(w[0] + w[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w[0] > 0.999);
}

TEST_CASE("weno5_point linear weights reproduce the quartic edge values") {
  double means[5];
  for (int k = -2; k <= 2; ++k) means[k + 2] = cell_mean(k);
  for (double s0 : {-0.5, 0.5}) {
    ReconPoint r = weno5_point(means, s0, false);
    CHECK(r.value == doctest::Approx(poly(s0)).epsilon(1e-13));
  }
}

TEST_CASE("weno5_point nonlinear weights stay exact on quadratic data") {
  // Every substencil reproduces the quadratic, so any weights are exact.
  auto q = [](double s) { return 2.0 - 0.4 * s + 0.9 * s * s; };
  auto iq = [](double s) { return 2.0 * s - 0.2 * s * s + 0.3 * s * s * s; };
  double means[5];
  for (int k = -2; k <= 2; ++k) means[k + 2] = iq(k + 0.5) - iq(k - 0.5);
  for (double s0 : {-0.5, 0.5}) {
    ReconPoint r = weno5_point(means, s0, true);
    CHECK(r.value == doctest::Approx(q(s0)).epsilon(1e-12));
  }
}

TEST_CASE("weno3_point reproduces quadratics at the edges") {
  auto q = [](double s) { return 1.5 + 0.8 * s - 0.6 * s * s; };
  auto iq = [](double s) { return 1.5 * s + 0.4 * s * s - 0.2 * s * s * s; };
  double means[3];
  for (int k = -1; k <= 1; ++k) means[k + 1] = iq(k + 0.5) - iq(k - 0.5);
  for (double s0 : {-0.5, 0.5}) {
    ReconPoint r = weno3_point(means, s0, false);
    CHECK(r.value == doctest::Approx(q(s0)).epsilon(1e-13));
    // d2 comes from the full three-cell quadratic.
    CHECK(r.d2 == doctest::Approx(-1.2).epsilon(1e-12));
  }
}

TEST_CASE("weno5_gauss linear weights reproduce the full quartic anywhere") {
  double means[5];
  for (int k = -2; k <= 2; ++k) means[k + 2] = cell_mean(k);
  for (double s0 : {-0.5, -1.0 / (2.0 * std::sqrt(3.0)), 0.0, 0.21, 0.5}) {
    ReconPoint r = weno5_gauss(means, s0, false);
    CHECK(r.value == doctest::Approx(poly(s0)).epsilon(1e-12));
    CHECK(r.d1 == doctest::Approx(dpoly(s0)).epsilon(1e-11));
    CHECK(r.d2 == doctest::Approx(d2poly(s0)).epsilon(1e-11));
  }
}

TEST_CASE("linear5_point equals the five-mean quartic") {
  double means[5];
  for (int k = -2; k <= 2; ++k) means[k + 2] = cell_mean(k);
  for (double s0 : {-0.5, 0.13, 0.5}) {
    ReconPoint r = linear5_point(means, s0);
    CHECK(r.value == doctest::Approx(poly(s0)).epsilon(1e-12));
    CHECK(r.d1 == doctest::Approx(dpoly(s0)).epsilon(1e-11));
    CHECK(r.d2 == doctest::Approx(d2poly(s0)).epsilon(1e-11));
  }
}

TEST_CASE("hweno5_point linear weights reproduce the quartic") {
  double means[3], slopes[2];
  for (int k = -1; k <= 1; ++k) means[k + 1] = cell_mean(k);
  // Slope means in reference units: mean of p' over the neighbor cell.
  slopes[0] = poly(-0.5) - poly(-1.5);  // cell i-1
  slopes[1] = poly(1.5) - poly(0.5);    // cell i+1
  for (double s0 : {-0.5, 0.0, 0.5}) {
    ReconPoint r = hweno5_point(means, slopes, s0, false);
    CHECK(r.value == doctest::Approx(poly(s0)).epsilon(1e-12));
    CHECK(r.d1 == doctest::Approx(dpoly(s0)).epsilon(1e-11));
  }
}

TEST_CASE("hweno5_point nonlinear weights stay exact on linear data") {
  double means[3] = {0.6, 1.0, 1.4};
  double slopes[2] = {0.4, 0.4};
  for (double s0 : {-0.5, 0.5}) {
    ReconPoint r = hweno5_point(means, slopes, s0, true);
    CHECK(r.value == doctest::Approx(1.0 + 0.4 * s0).epsilon(1e-10));
  }
}

TEST_CASE("slope_quartic_point recovers interface derivatives") {
  // Interface at s = 0 between cells spanning [-1,0] and [0,1]; the free
  // constant is irrelevant for the derivative rows.
  auto d = [](double s) { return 0.5 - 0.6 * s + 0.6 * s * s + 2.8 * s * s * s; };
  auto p = [](double s) {
    return 0.5 * s - 0.3 * s * s + 0.2 * s * s * s + 0.7 * s * s * s * s;
  };
  double slopes[4];
  for (int k = 0; k < 4; ++k) {
    double a = k - 2.0;  // cells [-2,-1],[-1,0],[0,1],[1,2]
    slopes[k] = p(a + 1) - p(a);
  }
  for (double s0 : {0.0, -0.4, 0.3}) {
    ReconPoint r = slope_quartic_point(slopes, s0);
    CHECK(r.d1 == doctest::Approx(d(s0)).epsilon(1e-11));
    CHECK(r.d2 == doctest::Approx(-0.6 + 1.2 * s0 + 8.4 * s0 * s0).epsilon(1e-10));
  }
}
