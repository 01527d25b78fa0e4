#include <doctest.h>

#include <cmath>

#include "kinflow/dg/basis.hpp"
#include "kinflow/quadrature.hpp"

using namespace kinflow;
using dg::DGBasis;
using dg::Modes1D;

TEST_CASE("gauss rules integrate monomials exactly") {
  for (int n = 1; n <= 6; ++n) {
    QuadratureRule r = gauss_rule(n);
    REQUIRE(r.size() == n);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
    // Exact up to degree 2n-1; mean of s^m over [-1/2,1/2].
    for (int m = 0; m <= 2 * n - 1; ++m) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) q += r.weights[i] * std::pow(r.nodes[i], m);
      double exact = m % 2 ? 0.0 : std::pow(0.5, m) / (m + 1);
      CHECK(q == doctest::Approx(exact).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(gauss_rule(7), UnsupportedOrder);
}

TEST_CASE("1D modes are orthonormal on the reference cell") {
  QuadratureRule r = gauss_rule(6);
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; m <= 4; ++m) {
      double q = 0.0;
      for (int i = 0; i < r.size(); ++i)
        q += r.weights[i] * Modes1D::eval(l, r.nodes[i]) * Modes1D::eval(m, r.nodes[i]);
      CHECK(q == doctest::Approx(l == m ? 1.0 : 0.0).epsilon(1e-12));
    }
}

TEST_CASE("mode derivatives match finite differences") {
  double s = 0.3, eps = 1e-6;
  for (int l = 1; l <= 4; ++l) {
    double fd = (Modes1D::eval(l, s + eps) - Modes1D::eval(l, s - eps)) / (2 * eps);
    CHECK(Modes1D::eval(l, s, 1) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("2D tensor basis: mode count, ordering, orthonormality") {
  DGBasis b2 = DGBasis::make(2, 2);
  DGBasis b4 = DGBasis::make(2, 4);
  CHECK(b2.n_modes == 6);
  CHECK(b4.n_modes == 15);
  // Ordered by total degree, x-degree descending within each block.
  CHECK(b4.powers[0] == std::array<int, 2>{0, 0});
  CHECK(b4.powers[1] == std::array<int, 2>{1, 0});
  CHECK(b4.powers[2] == std::array<int, 2>{0, 1});
  CHECK(b4.powers[3] == std::array<int, 2>{2, 0});
  CHECK(b4.powers[5] == std::array<int, 2>{0, 2});
  CHECK(b4.powers[14] == std::array<int, 2>{0, 4});

  QuadratureRule r = gauss_rule(6);
  for (int l = 0; l < b4.n_modes; ++l)
    for (int m = l; m < b4.n_modes; ++m) {
      double q = 0.0;
      for (int i = 0; i < r.size(); ++i)
        for (int j = 0; j < r.size(); ++j)
          q += r.weights[i] * r.weights[j] * b4.eval(l, r.nodes[i], r.nodes[j]) *
               b4.eval(m, r.nodes[i], r.nodes[j]);
      CHECK(q == doctest::Approx(l == m ? 1.0 : 0.0).epsilon(1e-12));
    }
}
