#include "kinflow/gks/moments.hpp"

#include <cmath>
#include <cstring>

namespace kinflow::gks {

MomentTable build_moments(const PrimitiveState& p, const GasModel& model) {
  if (!(p.lambda > 0.0)) throw NonPositiveLambda();
  MomentTable t;
  t.rho = p.rho;
  t.U = p.u_x;
  t.V = p.u_y;
  t.lam = p.lambda;
  t.K = model.k_kinetic();

  double inv2l = 0.5 / t.lam;
  t.u_all[0] = 1.0;
  t.u_all[1] = t.U;
  for (int n = 0; n + 2 < 9; ++n)
    t.u_all[n + 2] = t.U * t.u_all[n + 1] + (n + 1) * inv2l * t.u_all[n];

  double sql = std::sqrt(t.lam);
  t.u_pos[0] = 0.5 * std::erfc(-sql * t.U);
  t.u_pos[1] = t.U * t.u_pos[0] +
               0.5 * std::exp(-t.lam * t.U * t.U) / std::sqrt(M_PI * t.lam);
  for (int n = 0; n + 2 < 9; ++n)
    t.u_pos[n + 2] = t.U * t.u_pos[n + 1] + (n + 1) * inv2l * t.u_pos[n];
  for (int n = 0; n < 9; ++n) t.u_neg[n] = t.u_all[n] - t.u_pos[n];

  t.v_all[0] = 1.0;
  t.v_all[1] = t.V;
  for (int n = 0; n + 2 < 9; ++n)
    t.v_all[n + 2] = t.V * t.v_all[n + 1] + (n + 1) * inv2l * t.v_all[n];

  t.xi[0] = 1.0;
  double K = t.K;
  t.xi[1] = K * inv2l;
  t.xi[2] = K * (K + 2.0) * inv2l * inv2l;
  t.xi[3] = K * (K + 2.0) * (K + 4.0) * inv2l * inv2l * inv2l;
  return t;
}

void VPoly::clear() { std::memset(c, 0, sizeof(c)); }

void VPoly::add_psi(const std::array<double, 4>& a, double coeff, int mu, int mv) {
  c[mu][mv][0] += coeff * a[0];
  c[mu + 1][mv][0] += coeff * a[1];
  c[mu][mv + 1][0] += coeff * a[2];
  c[mu + 2][mv][0] += 0.5 * coeff * a[3];
  c[mu][mv + 2][0] += 0.5 * coeff * a[3];
  c[mu][mv][1] += 0.5 * coeff * a[3];
}

ConservedState contract4(const VPoly& p, const MomentTable& t, URange range) {
  const double* mu = range == URange::All ? t.u_all.data()
                   : range == URange::Pos ? t.u_pos.data()
                                          : t.u_neg.data();
  ConservedState r{};
  for (int m = 0; m < VPoly::NU; ++m)
    for (int n = 0; n < VPoly::NV; ++n)
      for (int l = 0; l < VPoly::NX; ++l) {
        double cf = p.c[m][n][l];
        if (cf == 0.0) continue;
        double vx = t.v_all[n] * t.xi[l];
        r.rho += cf * mu[m] * vx;
        r.mom_x += cf * mu[m + 1] * vx;
        r.mom_y += cf * mu[m] * t.v_all[n + 1] * t.xi[l];
        r.energy += 0.5 * cf *
                    (mu[m + 2] * vx + mu[m] * t.v_all[n + 2] * t.xi[l] +
                     mu[m] * t.v_all[n] * t.xi[l + 1]);
      }
  return t.rho * r;
}

MomentSolver::MomentSolver(const MomentTable& table) : rho_(table.rho) {
  // Columns are the psi-moments of the four unit coefficient vectors.
  double m[4][4];
  for (int j = 0; j < 4; ++j) {
    std::array<double, 4> e{};
    e[j] = 1.0;
    VPoly p;
    p.clear();
    p.add_psi(e);
    ConservedState col = contract4(p, table, URange::All);
    for (int i = 0; i < 4; ++i) m[i][j] = col[i] / table.rho;
  }
  // LU with partial pivoting.
  for (int i = 0; i < 4; ++i) piv_[i] = i;
  std::memcpy(lu_, m, sizeof(m));
  for (int k = 0; k < 4; ++k) {
    int p = k;
    for (int i = k + 1; i < 4; ++i)
      if (std::abs(lu_[i][k]) > std::abs(lu_[p][k])) p = i;
    if (p != k) {
      for (int j = 0; j < 4; ++j) std::swap(lu_[k][j], lu_[p][j]);
      std::swap(piv_[k], piv_[p]);
    }
    for (int i = k + 1; i < 4; ++i) {
      lu_[i][k] /= lu_[k][k];
      for (int j = k + 1; j < 4; ++j) lu_[i][j] -= lu_[i][k] * lu_[k][j];
    }
  }
}

std::array<double, 4> MomentSolver::solve(const ConservedState& rhs) const {
  double b[4];
  for (int i = 0; i < 4; ++i) b[i] = rhs[piv_[i]] / rho_;
  for (int i = 1; i < 4; ++i)
    for (int j = 0; j < i; ++j) b[i] -= lu_[i][j] * b[j];
  for (int i = 3; i >= 0; --i) {
    for (int j = i + 1; j < 4; ++j) b[i] -= lu_[i][j] * b[j];
    b[i] /= lu_[i][i];
  }
  return {b[0], b[1], b[2], b[3]};
}

ConservedState compatibility_merge(const ConservedState& wl,
                                   const ConservedState& wr,
                                   const GasModel& model) {
  MomentTable tl = build_moments(cons_to_prim(wl, model), model);
  MomentTable tr = build_moments(cons_to_prim(wr, model), model);
  VPoly one;
  one.clear();
  one.add_psi({1.0, 0.0, 0.0, 0.0});
  return contract4(one, tl, URange::Pos) + contract4(one, tr, URange::Neg);
}

}  // namespace kinflow::gks
