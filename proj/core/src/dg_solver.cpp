#include "kinflow/dg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kinflow/parallel.hpp"

namespace kinflow::dg {

ConservedState lf_flux(const ConservedState& wl, const ConservedState& wr,
                       Axis axis, const GasModel& model) {
  PrimitiveState pl = cons_to_prim(wl, model);
  PrimitiveState pr = cons_to_prim(wr, model);
  double unl = axis == Axis::X ? pl.u_x : pl.u_y;
  double unr = axis == Axis::X ? pr.u_x : pr.u_y;
  double a = std::max(std::abs(unl) + sound_speed(pl, model),
                      std::abs(unr) + sound_speed(pr, model));
  ConservedState fl = euler_flux(wl, axis, model);
  ConservedState fr = euler_flux(wr, axis, model);
  ConservedState f;
  for (int v = 0; v < 4; ++v) f[v] = 0.5 * (fl[v] + fr[v]) - 0.5 * a * (wr[v] - wl[v]);
  return f;
}

ConservedState hll_flux(const ConservedState& wl, const ConservedState& wr,
                        Axis axis, const GasModel& model) {
  PrimitiveState pl = cons_to_prim(wl, model);
  PrimitiveState pr = cons_to_prim(wr, model);
  double unl = axis == Axis::X ? pl.u_x : pl.u_y;
  double unr = axis == Axis::X ? pr.u_x : pr.u_y;
  double cl = sound_speed(pl, model), cr = sound_speed(pr, model);

  // Roe-averaged normal velocity and sound speed for the Einfeldt bounds.
  double sl = std::sqrt(pl.rho), sr = std::sqrt(pr.rho);
  double inv = 1.0 / (sl + sr);
  double uh = (sl * unl + sr * unr) * inv;
  double hl = (wl.energy + pl.pressure) / pl.rho;
  double hr = (wr.energy + pr.pressure) / pr.rho;
  double utl = axis == Axis::X ? pl.u_y : pl.u_x;
  double utr = axis == Axis::X ? pr.u_y : pr.u_x;
  double uth = (sl * utl + sr * utr) * inv;
  double hh = (sl * hl + sr * hr) * inv;
  double ch2 = (model.gamma - 1.0) * (hh - 0.5 * (uh * uh + uth * uth));
  double ch = std::sqrt(std::max(ch2, 0.0));

  double s_l = std::min(unl - cl, uh - ch);
  double s_r = std::max(unr + cr, uh + ch);
  if (s_l >= 0.0) return euler_flux(wl, axis, model);
  if (s_r <= 0.0) return euler_flux(wr, axis, model);
  ConservedState fl = euler_flux(wl, axis, model);
  ConservedState fr = euler_flux(wr, axis, model);
  ConservedState f;
  double d = 1.0 / (s_r - s_l);
  for (int v = 0; v < 4; ++v)
    f[v] = (s_r * fl[v] - s_l * fr[v] + s_l * s_r * (wr[v] - wl[v])) * d;
  return f;
}

DGOperator::DGOperator(const Grid& grid, const DGBasis& basis,
                       const GasModel& model, FluxKind flux)
    : grid_(grid), basis_(basis), model_(model), flux_(flux) {
  nq_ = basis_.degree + 1;
  rule_ = gauss_rule(nq_);
  int nm = basis_.n_modes;
  if (grid_.dim == 1) {
    phi_vol_.resize(nm * nq_);
    dphis_vol_.resize(nm * nq_);
    for (int l = 0; l < nm; ++l)
      for (int q = 0; q < nq_; ++q) {
        phi_vol_[l * nq_ + q] = basis_.eval(l, rule_.nodes[q]);
        dphis_vol_[l * nq_ + q] = basis_.eval(l, rule_.nodes[q], 0.0, 1);
      }
    for (int side = 0; side < 2; ++side) {
      phi_edge_[side].resize(nm);
      double s = side == 0 ? -0.5 : 0.5;
      for (int l = 0; l < nm; ++l) phi_edge_[side][l] = basis_.eval(l, s);
    }
  } else {
    int nq2 = nq_ * nq_;
    phi_vol_.resize(nm * nq2);
    dphis_vol_.resize(nm * nq2);
    dphit_vol_.resize(nm * nq2);
    for (int l = 0; l < nm; ++l)
      for (int m = 0; m < nq_; ++m)
        for (int n = 0; n < nq_; ++n) {
          int q = m * nq_ + n;
          double s = rule_.nodes[m], t = rule_.nodes[n];
          phi_vol_[l * nq2 + q] = basis_.eval(l, s, t);
          dphis_vol_[l * nq2 + q] = basis_.eval(l, s, t, 1, 0);
          dphit_vol_[l * nq2 + q] = basis_.eval(l, s, t, 0, 1);
        }
    for (int side = 0; side < 4; ++side) {
      phi_edge_[side].resize(nm * nq_);
      for (int l = 0; l < nm; ++l)
        for (int e = 0; e < nq_; ++e) {
          double n = rule_.nodes[e];
          double s = side == 0 ? -0.5 : side == 1 ? 0.5 : n;
          double t = side == 2 ? -0.5 : side == 3 ? 0.5 : n;
          phi_edge_[side][l * nq_ + e] = basis_.eval(l, s, t);
        }
    }
  }
}

void DGOperator::residual(DGSolution& u, const BoundarySpec& bc, double time,
                          std::vector<double>& dudt, BoundaryLedger* ledger) const {
  dudt.assign(u.coeffs.size(), 0.0);
  if (grid_.dim == 1) residual_1d(u, bc, time, dudt, ledger);
  else residual_2d(u, bc, time, dudt, ledger);
}

void DGOperator::residual_1d(DGSolution& u, const BoundarySpec& bc, double time,
                             std::vector<double>& dudt, BoundaryLedger* ledger) const {
  fill_ghosts(u, bc, time);
  const Grid& g = grid_;
  int nm = basis_.n_modes;
  int nfaces = g.nx + 1;
  std::vector<ConservedState> fhat(nfaces);

  for (int f = 0; f < nfaces; ++f) {
    int ic = g.ng + f;  // right cell of the face
    ConservedState wl{}, wr{};
    const double* cl = u.cell(ic - 1, 0);
    const double* cr = u.cell(ic, 0);
    for (int l = 0; l < nm; ++l) {
      double pl = phi_edge_[1][l], pr = phi_edge_[0][l];
      for (int v = 0; v < 4; ++v) {
        wl[v] += cl[l * 4 + v] * pl;
        wr[v] += cr[l * 4 + v] * pr;
      }
    }
    fhat[f] = flux_ == FluxKind::LaxFriedrichs ? lf_flux(wl, wr, Axis::X, model_)
                                               : hll_flux(wl, wr, Axis::X, model_);
  }
  if (ledger)
    ledger->net_outflow = ledger->net_outflow + fhat[g.nx] - fhat[0];

  double inv_dx = 1.0 / g.dx;
  for (int i = 0; i < g.nx; ++i) {
    const double* c = u.cell(g.ng + i, 0);
    double* r = dudt.data() + static_cast<size_t>(g.index(g.ng + i, 0)) * nm * 4;
    // Pointwise states at the volume quadrature nodes.
    ConservedState fq[8];
    for (int q = 0; q < nq_; ++q) {
      ConservedState w{};
      for (int l = 0; l < nm; ++l) {
        double phi = phi_vol_[l * nq_ + q];
        for (int v = 0; v < 4; ++v) w[v] += c[l * 4 + v] * phi;
      }
      fq[q] = euler_flux(w, Axis::X, model_);
    }
    for (int l = 0; l < nm; ++l) {
      double vol[4] = {0, 0, 0, 0};
      for (int q = 0; q < nq_; ++q) {
        double wd = rule_.weights[q] * dphis_vol_[l * nq_ + q];
        for (int v = 0; v < 4; ++v) vol[v] += wd * fq[q][v];
      }
      double pl = phi_edge_[0][l], pr = phi_edge_[1][l];
      for (int v = 0; v < 4; ++v)
        r[l * 4 + v] = inv_dx * (vol[v] - fhat[i + 1][v] * pr + fhat[i][v] * pl);
    }
  }
}

void DGOperator::residual_2d(DGSolution& u, const BoundarySpec& bc, double time,
                             std::vector<double>& dudt, BoundaryLedger* ledger) const {
  fill_ghosts(u, bc, time);
  const Grid& g = grid_;
  const int nm = basis_.n_modes;
  const int nq = nq_;
  const int nq2 = nq * nq;
  const int sx = g.sx();

  // Edge traces of every cell (one ghost ring included) at the edge nodes.
  const size_t tstride = static_cast<size_t>(nq) * 4;
  static thread_local std::vector<double> traces[4];
  for (auto& t : traces) t.assign(static_cast<size_t>(g.cell_count()) * tstride, 0.0);

  parallel_for(g.ng - 1, g.ng + g.ny + 1, [&](int j) {
    for (int i = g.ng - 1; i < g.ng + g.nx + 1; ++i) {
      const double* c = u.cell(i, j);
      for (int side = 0; side < 4; ++side) {
        double* tr = traces[side].data() + g.index(i, j) * tstride;
        const double* tab = phi_edge_[side].data();
        for (int l = 0; l < nm; ++l) {
          for (int e = 0; e < nq; ++e) {
            double phi = tab[l * nq + e];
            const double* cv = c + l * 4;
            double* out = tr + e * 4;
            out[0] += cv[0] * phi;
            out[1] += cv[1] * phi;
            out[2] += cv[2] * phi;
            out[3] += cv[3] * phi;
          }
        }
      }
    }
  });

  // Interface fluxes at edge quadrature points.
  const int nfx = g.nx + 1;
  const int nfy = g.ny + 1;
  static thread_local std::vector<ConservedState> fx, fy;
  fx.assign(static_cast<size_t>(nfx) * g.ny * nq, {});
  fy.assign(static_cast<size_t>(g.nx) * nfy * nq, {});

  auto riemann = [&](const ConservedState& wl, const ConservedState& wr, Axis ax) {
    return flux_ == FluxKind::LaxFriedrichs ? lf_flux(wl, wr, ax, model_)
                                            : hll_flux(wl, wr, ax, model_);
  };

  parallel_for(0, g.ny, [&](int jj) {
    int j = g.ng + jj;
    for (int f = 0; f < nfx; ++f) {
      int ic = g.ng + f;
      const double* tl = traces[1].data() + g.index(ic - 1, j) * tstride;
      const double* tr = traces[0].data() + g.index(ic, j) * tstride;
      for (int e = 0; e < nq; ++e) {
        ConservedState wl{tl[e * 4], tl[e * 4 + 1], tl[e * 4 + 2], tl[e * 4 + 3]};
        ConservedState wr{tr[e * 4], tr[e * 4 + 1], tr[e * 4 + 2], tr[e * 4 + 3]};
        fx[(static_cast<size_t>(jj) * nfx + f) * nq + e] = riemann(wl, wr, Axis::X);
      }
    }
  });
  parallel_for(0, nfy, [&](int f) {
    int jc = g.ng + f;
    for (int ii = 0; ii < g.nx; ++ii) {
      int i = g.ng + ii;
      const double* tb = traces[3].data() + g.index(i, jc - 1) * tstride;
      const double* tt = traces[2].data() + g.index(i, jc) * tstride;
      for (int e = 0; e < nq; ++e) {
        ConservedState wl{tb[e * 4], tb[e * 4 + 1], tb[e * 4 + 2], tb[e * 4 + 3]};
        ConservedState wr{tt[e * 4], tt[e * 4 + 1], tt[e * 4 + 2], tt[e * 4 + 3]};
        fy[(static_cast<size_t>(f) * g.nx + ii) * nq + e] = riemann(wl, wr, Axis::Y);
      }
    }
  });

  if (ledger) {
    ConservedState net{};
    for (int jj = 0; jj < g.ny; ++jj)
      for (int e = 0; e < nq; ++e) {
        double w = rule_.weights[e] * g.dy;
        net = net + w * fx[(static_cast<size_t>(jj) * nfx + g.nx) * nq + e] -
              w * fx[(static_cast<size_t>(jj) * nfx) * nq + e];
      }
    for (int ii = 0; ii < g.nx; ++ii)
      for (int e = 0; e < nq; ++e) {
        double w = rule_.weights[e] * g.dx;
        net = net + w * fy[(static_cast<size_t>(g.ny) * g.nx + ii) * nq + e] -
              w * fy[static_cast<size_t>(ii) * nq + e];
      }
    ledger->net_outflow = ledger->net_outflow + net;
  }

  double inv_dx = 1.0 / g.dx, inv_dy = 1.0 / g.dy;
  parallel_for(0, g.ny, [&](int jj) {
    int j = g.ng + jj;
    std::vector<ConservedState> fq(nq2), gq(nq2);
    for (int ii = 0; ii < g.nx; ++ii) {
      int i = g.ng + ii;
      const double* c = u.cell(i, j);
      double* r = dudt.data() + static_cast<size_t>(g.index(i, j)) * nm * 4;

      for (int q = 0; q < nq2; ++q) {
        ConservedState w{};
        for (int l = 0; l < nm; ++l) {
          double phi = phi_vol_[l * nq2 + q];
          const double* cv = c + l * 4;
          w[0] += cv[0] * phi;
          w[1] += cv[1] * phi;
          w[2] += cv[2] * phi;
          w[3] += cv[3] * phi;
        }
        PrimitiveState p = cons_to_prim(w, model_);
        fq[q] = {w.mom_x, w.mom_x * p.u_x + p.pressure, w.mom_y * p.u_x,
                 p.u_x * (w.energy + p.pressure)};
        gq[q] = {w.mom_y, w.mom_x * p.u_y, w.mom_y * p.u_y + p.pressure,
                 p.u_y * (w.energy + p.pressure)};
      }

      const ConservedState* fL = &fx[(static_cast<size_t>(jj) * nfx + ii) * nq];
      const ConservedState* fR = &fx[(static_cast<size_t>(jj) * nfx + ii + 1) * nq];
      const ConservedState* gB = &fy[(static_cast<size_t>(jj) * g.nx + ii) * nq];
      const ConservedState* gT = &fy[(static_cast<size_t>(jj + 1) * g.nx + ii) * nq];

      for (int l = 0; l < nm; ++l) {
        double acc[4] = {0, 0, 0, 0};
        for (int m = 0; m < nq; ++m)
          for (int n = 0; n < nq; ++n) {
            int q = m * nq + n;
            double wfac = rule_.weights[m] * rule_.weights[n];
            double ds = wfac * dphis_vol_[l * nq2 + q] * inv_dx;
            double dt = wfac * dphit_vol_[l * nq2 + q] * inv_dy;
            for (int v = 0; v < 4; ++v) acc[v] += ds * fq[q][v] + dt * gq[q][v];
          }
        for (int e = 0; e < nq; ++e) {
          double we = rule_.weights[e];
          double pr = we * phi_edge_[1][l * nq + e] * inv_dx;
          double pl = we * phi_edge_[0][l * nq + e] * inv_dx;
          double pt = we * phi_edge_[3][l * nq + e] * inv_dy;
          double pb = we * phi_edge_[2][l * nq + e] * inv_dy;
          for (int v = 0; v < 4; ++v)
            acc[v] += -fR[e][v] * pr + fL[e][v] * pl - gT[e][v] * pt + gB[e][v] * pb;
        }
        for (int v = 0; v < 4; ++v) r[l * 4 + v] = acc[v];
      }
    }
  });
}

double DGOperator::timestep(const DGSolution& u, double cfl) const {
  const Grid& g = grid_;
  double dt = std::numeric_limits<double>::max();
  for (int j = g.dim == 2 ? g.ng : 0;
       j < (g.dim == 2 ? g.ng + g.ny : 1); ++j)
    for (int i = g.ng; i < g.ng + g.nx; ++i) {
      PrimitiveState p = cons_to_prim(u.cell_mean(i, j), model_);
      double c = sound_speed(p, model_);
      if (g.dim == 1) {
        dt = std::min(dt, g.dx / (std::abs(p.u_x) + c));
      } else {
        double rate = (std::abs(p.u_x) + c) / g.dx + (std::abs(p.u_y) + c) / g.dy;
        dt = std::min(dt, 1.0 / rate);
      }
    }
  return cfl * dt;
}

namespace {

void axpy(DGSolution& out, double a, const DGSolution& x, double b,
          const std::vector<double>& dudt, double c) {
  // out = a*out + b*x + c*dudt
  size_t n = out.coeffs.size();
  for (size_t i = 0; i < n; ++i)
    out.coeffs[i] = a * out.coeffs[i] + b * x.coeffs[i] + c * dudt[i];
}

}  // namespace

void rk3_step(DGSolution& u, double dt, const DGOperator& op,
              const BoundarySpec& bc, double time, const StageHook& hook,
              BoundaryLedger* ledger) {
  static thread_local std::vector<double> dudt;
  DGSolution u0 = u;

  BoundaryLedger stage;
  op.residual(u, bc, time, dudt, ledger ? &stage : nullptr);
  if (ledger) ledger->net_outflow = ledger->net_outflow + (dt / 6.0) * stage.net_outflow;
  axpy(u, 1.0, u0, 0.0, dudt, dt);  // u1 = u0 + dt L
  if (hook) hook(u, time + dt);

  stage = {};
  op.residual(u, bc, time + dt, dudt, ledger ? &stage : nullptr);
  if (ledger) ledger->net_outflow = ledger->net_outflow + (dt / 6.0) * stage.net_outflow;
  axpy(u, 0.25, u0, 0.75, dudt, 0.25 * dt);  // u2
  if (hook) hook(u, time + 0.5 * dt);

  stage = {};
  op.residual(u, bc, time + 0.5 * dt, dudt, ledger ? &stage : nullptr);
  if (ledger)
    ledger->net_outflow = ledger->net_outflow + (2.0 * dt / 3.0) * stage.net_outflow;
  axpy(u, 2.0 / 3.0, u0, 1.0 / 3.0, dudt, 2.0 / 3.0 * dt);
  if (hook) hook(u, time + dt);
}

void rk4_step(DGSolution& u, double dt, const DGOperator& op,
              const BoundarySpec& bc, double time, const StageHook& hook,
              BoundaryLedger* ledger) {
  DGSolution u0 = u;
  size_t n = u.coeffs.size();
  std::vector<double> k1, k2, k3, k4;

  auto stage_residual = [&](DGSolution& us, double t, std::vector<double>& k,
                            double w) {
    BoundaryLedger stage;
    op.residual(us, bc, t, k, ledger ? &stage : nullptr);
    if (ledger) ledger->net_outflow = ledger->net_outflow + w * dt * stage.net_outflow;
  };

  stage_residual(u, time, k1, 1.0 / 6.0);
  axpy(u, 0.0, u0, 1.0, k1, 0.5 * dt);
  if (hook) hook(u, time + 0.5 * dt);

  stage_residual(u, time + 0.5 * dt, k2, 1.0 / 3.0);
  axpy(u, 0.0, u0, 1.0, k2, 0.5 * dt);
  if (hook) hook(u, time + 0.5 * dt);

  stage_residual(u, time + 0.5 * dt, k3, 1.0 / 3.0);
  axpy(u, 0.0, u0, 1.0, k3, dt);
  if (hook) hook(u, time + dt);

  stage_residual(u, time + dt, k4, 1.0 / 6.0);
  for (size_t i = 0; i < n; ++i)
    u.coeffs[i] = u0.coeffs[i] +
                  dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  if (hook) hook(u, time + dt);
}

}  // namespace kinflow::dg
