#ifndef KINFLOW_DG_BASIS_HPP
#define KINFLOW_DG_BASIS_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace kinflow::dg {

struct IndexOutOfRange : std::runtime_error {
  IndexOutOfRange() : std::runtime_error("basis index out of range") {}
};

// Scaled Legendre modes on s in [-1/2, 1/2], normalised so the cell mean of
// v_l * v_m is delta_lm. Stored as monomial coefficients, which keeps
// arbitrary-order derivatives (needed by the smoothness indicators) exact.
class Modes1D {
 public:
  static constexpr int kMaxDegree = 4;

  static const std::array<double, 5>& coeffs(int l) {
    static const std::array<std::array<double, 5>, 5> table = build();
    return table[l];
  }

  // d^order/ds^order v_l at s.
  static double eval(int l, double s, int order = 0) {
    if (l < 0 || l > kMaxDegree) throw IndexOutOfRange();
    const auto& c = coeffs(l);
    double r = 0.0;
    for (int m = kMaxDegree; m >= order; --m) {
      double fac = 1.0;
      for (int q = 0; q < order; ++q) fac *= m - q;
      r = r * s + fac * c[m];
    }
    return r;
  }

 private:
  static std::array<std::array<double, 5>, 5> build() {
    std::array<std::array<double, 5>, 5> t{};
    t[0] = {1.0, 0, 0, 0, 0};
    double n1 = std::sqrt(12.0);
    t[1] = {0, n1, 0, 0, 0};
    double n2 = std::sqrt(180.0);
    t[2] = {-n2 / 12.0, 0, n2, 0, 0};
    double n3 = std::sqrt(2800.0);
    t[3] = {0, -0.15 * n3, 0, n3, 0};
    double n4 = std::sqrt(44100.0);
    t[4] = {3.0 / 560.0 * n4, 0, -3.0 / 14.0 * n4, 0, n4};
    return t;
  }
};

// Orthonormal modal basis of total degree <= k; in 2D the modes are tensor
// products ordered by total degree with the x-degree descending inside each
// block, matching the printed v_0..v_14 listing.
struct DGBasis {
  int dim = 1;
  int degree = 2;
  int n_modes = 3;
  std::vector<std::array<int, 2>> powers;  // (x-degree, y-degree) per mode

  static DGBasis make(int dim, int k) {
    if (k < 0 || k > Modes1D::kMaxDegree)
      throw IndexOutOfRange();
    DGBasis b;
    b.dim = dim;
    b.degree = k;
    b.powers.clear();
    if (dim == 1) {
      for (int l = 0; l <= k; ++l) b.powers.push_back({l, 0});
    } else {
      for (int d = 0; d <= k; ++d)
        for (int ax = d; ax >= 0; --ax) b.powers.push_back({ax, d - ax});
    }
    b.n_modes = static_cast<int>(b.powers.size());
    return b;
  }

  // Mixed derivative d^{ox+oy} v_l / ds^{ox} dt^{oy} in reference coords.
  double eval(int l, double s, double t = 0.0, int ox = 0, int oy = 0) const {
    if (l < 0 || l >= n_modes) throw IndexOutOfRange();
    double r = Modes1D::eval(powers[l][0], s, ox);
    if (dim == 2) r *= Modes1D::eval(powers[l][1], t, oy);
    else if (oy > 0) return 0.0;
    return r;
  }

  int total_degree(int l) const { return powers[l][0] + powers[l][1]; }
};

}  // namespace kinflow::dg

#endif
