#include "bench/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "kinflow/dg/limiter.hpp"
#include "kinflow/gks/solver.hpp"
#include "kinflow/quadrature.hpp"

namespace kinflow::bench {

namespace {

using Clock = std::chrono::steady_clock;

bool is_dg(SolverKind s) { return s == SolverKind::RkdgP2 || s == SolverKind::RkdgP4; }

RunResult run_dg(const CaseDef& cs, SolverKind solver, int nx, const RunOptions& opt) {
  int degree = solver == SolverKind::RkdgP2 ? 2 : 4;
  bool smooth = cs.smooth;
  bool limit = opt.use_limiter >= 0 ? opt.use_limiter != 0 : !smooth;
  double cfl = opt.cfl > 0 ? opt.cfl : (degree == 2 ? 0.18 : 0.08);
  double t_end = opt.t_end > 0 ? opt.t_end : cs.t_end;

  Grid g = make_grid(cs, nx);
  GasModel model{1.4, g.dim};
  dg::DGBasis basis = dg::DGBasis::make(g.dim, degree);
  dg::DGSolution u = init_dg(cs, g, basis);
  dg::DGOperator op(g, basis, model,
                    smooth ? dg::FluxKind::LaxFriedrichs : dg::FluxKind::HLL);

  RunResult res;
  res.grid = g;
  dg::LimiterConfig lc;
  double glo = opt.limiter_gamma_lo >= 0 ? opt.limiter_gamma_lo : cs.limiter_gamma_lo;
  if (glo >= 0) {
    lc.gamma_lo = glo;
    lc.gamma_hi = 1.0 - glo;
  }
  dg::MultiresLimiter limiter(g, basis, model, lc);
  dg::StageHook hook;
  if (limit || !smooth) {
    hook = [&](dg::DGSolution& s, double tt) {
      if (limit) {
        limiter.apply(s, cs.bc, tt);
        res.trouble_total += limiter.last_mask().count();
      }
      dg::enforce_positivity(s, model);
    };
    hook(u, 0.0);  // limit the projected initial data too
  }

  auto rk = [&](double dt, double t, dg::BoundaryLedger* led) {
    if (degree == 2 || !smooth)
      dg::rk3_step(u, dt, op, cs.bc, t, hook, led);
    else
      dg::rk4_step(u, dt, op, cs.bc, t, hook, led);
  };

  auto t0 = Clock::now();
  double t = 0.0;
  dg::BoundaryLedger ledger;
  ConservedState prev_total{};
  auto total_now = [&]() {
    ConservedState s{};
    int ny = g.dim == 2 ? g.ny : 1;
    for (int jj = 0; jj < ny; ++jj)
      for (int ii = 0; ii < g.nx; ++ii)
        s = s + u.cell_mean(g.ng + ii, g.dim == 2 ? g.ng + jj : 0);
    return g.cell_volume() * s;
  };
  if (opt.track_defect) prev_total = total_now();
  ConservedState prev_out{};
  while (t < t_end - 1e-13) {
    double dt = std::min(op.timestep(u, cfl), t_end - t);
    rk(dt, t, &ledger);
    t += dt;
    ++res.steps;
    if (opt.track_defect) {
      ConservedState now = total_now();
      double defect = std::abs((now.rho - prev_total.rho) +
                               (ledger.net_outflow.rho - prev_out.rho));
      res.max_step_defect = std::max(res.max_step_defect, defect / std::abs(now.rho));
      prev_total = now;
      prev_out = ledger.net_outflow;
    }
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.t_end = t;
  int ny = g.dim == 2 ? g.ny : 1;
  res.means.reserve(static_cast<size_t>(g.nx) * ny);
  res.min_rho = 1e300;
  res.max_rho = -1e300;
  for (int jj = 0; jj < ny; ++jj)
    for (int ii = 0; ii < g.nx; ++ii) {
      ConservedState m = u.cell_mean(g.ng + ii, g.dim == 2 ? g.ng + jj : 0);
      res.min_rho = std::min(res.min_rho, m.rho);
      res.max_rho = std::max(res.max_rho, m.rho);
      res.means.push_back(m);
    }
  QuadratureRule q = gauss_rule(6);
  res.rho_q.reserve(res.means.size() * (g.dim == 2 ? 36 : 6));
  for (int jj = 0; jj < ny; ++jj)
    for (int ii = 0; ii < g.nx; ++ii) {
      int i = g.ng + ii, j = g.dim == 2 ? g.ng + jj : 0;
      if (g.dim == 1) {
        for (int a = 0; a < q.size(); ++a)
          res.rho_q.push_back(u.eval(i, j, q.nodes[a], 0.0).rho);
      } else {
        for (int b = 0; b < q.size(); ++b)
          for (int a = 0; a < q.size(); ++a)
            res.rho_q.push_back(u.eval(i, j, q.nodes[a], q.nodes[b]).rho);
      }
    }
  return res;
}

RunResult run_gks(const CaseDef& cs, SolverKind solver, int nx, const RunOptions& opt) {
  bool smooth = cs.smooth;
  double t_end = opt.t_end > 0 ? opt.t_end : cs.t_end;
  gks::GksConfig cfg;
  // The compact scheme's central slope update is weakly unstable at CFL 0.5
  // (slow noise growth behind shocks, blow-up on fine smooth grids); it runs
  // at 0.25 by default.
  cfg.cfl = opt.cfl > 0 ? opt.cfl : (solver == SolverKind::Cgks5 ? 0.25 : 0.5);
  switch (solver) {
    case SolverKind::Gks3: cfg.recon.scheme = fv::ReconScheme::Weno3; break;
    case SolverKind::Gks5: cfg.recon.scheme = fv::ReconScheme::Weno5; break;
    default: cfg.recon.scheme = fv::ReconScheme::Hweno5; break;
  }
  bool linear = opt.force_linear >= 0 ? opt.force_linear != 0 : smooth;
  cfg.recon.nonlinear = !linear;
  cfg.recon.characteristic = !smooth;
  if (smooth) cfg.tau_eps = 0.0;  // inviscid limit for accuracy studies

  Grid g = make_grid(cs, nx);
  GasModel model{1.4, g.dim};
  FVField f = init_fv(cs, g, cfg.recon.scheme == fv::ReconScheme::Hweno5);
  gks::GksSolver sol(g, model, cfg);

  RunResult res;
  res.grid = g;
  auto total_now = [&]() {
    ConservedState s{};
    int ny = g.dim == 2 ? g.ny : 1;
    for (int jj = 0; jj < ny; ++jj)
      for (int ii = 0; ii < g.nx; ++ii) s = s + f.at(g.ng + ii, g.dim == 2 ? g.ng + jj : 0);
    return g.cell_volume() * s;
  };

  auto t0 = Clock::now();
  double t = 0.0;
  gks::FluxLedger ledger;
  ConservedState prev_total{}, prev_out{};
  if (opt.track_defect) prev_total = total_now();
  while (t < t_end - 1e-13) {
    double dt = std::min(sol.timestep(f), t_end - t);
    t += sol.step(f, cs.bc, t, dt, &ledger);
    ++res.steps;
    if (opt.track_defect) {
      ConservedState now = total_now();
      double defect = std::abs((now.rho - prev_total.rho) +
                               (ledger.net_outflow.rho - prev_out.rho));
      res.max_step_defect = std::max(res.max_step_defect, defect / std::abs(now.rho));
      prev_total = now;
      prev_out = ledger.net_outflow;
    }
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  res.t_end = t;
  res.halvings = sol.halvings();
  int ny = g.dim == 2 ? g.ny : 1;
  res.means.reserve(static_cast<size_t>(g.nx) * ny);
  res.min_rho = 1e300;
  res.max_rho = -1e300;
  for (int jj = 0; jj < ny; ++jj)
    for (int ii = 0; ii < g.nx; ++ii) {
      ConservedState m = f.at(g.ng + ii, g.dim == 2 ? g.ng + jj : 0);
      res.min_rho = std::min(res.min_rho, m.rho);
      res.max_rho = std::max(res.max_rho, m.rho);
      res.means.push_back(m);
    }
  return res;
}

}  // namespace

SolverKind solver_by_name(const std::string& name) {
  if (name == "rkdg_p2") return SolverKind::RkdgP2;
  if (name == "rkdg_p4") return SolverKind::RkdgP4;
  if (name == "gks3") return SolverKind::Gks3;
  if (name == "gks5") return SolverKind::Gks5;
  if (name == "cgks5") return SolverKind::Cgks5;
  throw std::invalid_argument("unknown solver: " + name);
}

std::string solver_name(SolverKind s) {
  switch (s) {
    case SolverKind::RkdgP2: return "rkdg_p2";
    case SolverKind::RkdgP4: return "rkdg_p4";
    case SolverKind::Gks3: return "gks3";
    case SolverKind::Gks5: return "gks5";
    case SolverKind::Cgks5: return "cgks5";
  }
  return "?";
}

RunResult run_case(const CaseDef& cs, SolverKind solver, int nx, const RunOptions& opt) {
  return is_dg(solver) ? run_dg(cs, solver, nx, opt) : run_gks(cs, solver, nx, opt);
}

}  // namespace kinflow::bench
