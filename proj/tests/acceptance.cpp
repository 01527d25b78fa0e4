// Acceptance suite: one numbered end-to-end check per run, one PASS/FAIL
// line each. Usage: kinflow_acceptance [k ...] (default: all nine).
// Checks 5, 6 and 8 are long; run them with generous timeouts. Check 6
// uses the cached 10000-cell reference profiles (KINFLOW_CACHE_DIR).

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "bench/exact_riemann.hpp"
#include "bench/norms.hpp"
#include "bench/reference.hpp"
#include "bench/report.hpp"
#include "kinflow/dg/limiter.hpp"
#include "kinflow/fv/weno.hpp"
#include "kinflow/gks/flux.hpp"
#include "kinflow/gks/solver.hpp"
#include "kinflow/quadrature.hpp"

using namespace kinflow;
using namespace kinflow::bench;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Detail {
  std::ostringstream os;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      os << "  FAILED: " << what << "\n";
    }
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<TableRow> table(const char* case_name, const char* solver,
                            std::vector<int> grids, RunOptions opt = {}) {
  return convergence_table(case_by_name(case_name), solver_by_name(solver),
                           grids, opt);
}

void check_orders(Detail& d, const std::vector<TableRow>& rows, int n_min,
                  double target, double tol, const char* tag) {
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].n < n_min) continue;
    double p = order_of(rows[i - 1].norms.l1, rows[i].norms.l1);
    d.os << "  " << tag << " N=" << rows[i].n << " L1=" << fmt(rows[i].norms.l1)
         << " order=" << fmt(p) << "\n";
    d.require(std::abs(p - target) <= tol,
              std::string(tag) + " order at N=" + std::to_string(rows[i].n) +
                  " is " + fmt(p) + ", want " + fmt(target) + " +/- " + fmt(tol));
  }
}

// --- 1: third-order DG, 1D advection accuracy table ---
Detail crit1() {
  Detail d;
  auto rows = table("advect1d", "rkdg_p2", {20, 40, 80, 160, 320, 640});
  check_orders(d, rows, 80, 3.00, 0.1, "rkdg_p2");
  double e = rows.back().norms.l1;
  d.require(e <= 3.0 * 9.77e-10, "L1 at N=640 is " + fmt(e) + " > 3x 9.77e-10");
  return d;
}

// --- 2: third-order kinetic scheme, linear weights ---
Detail crit2() {
  Detail d;
  RunOptions opt;
  opt.force_linear = 1;
  auto rows = table("advect1d", "gks3", {20, 40, 80, 160, 320, 640}, opt);
  check_orders(d, rows, 80, 3.00, 0.1, "gks3");
  double e = rows.back().norms.l1;
  d.require(e <= 3.0 * 2.86e-8, "L1 at N=640 is " + fmt(e) + " > 3x 2.86e-8");
  return d;
}

// --- 3: fifth-order DG with RK4 ---
Detail crit3() {
  Detail d;
  auto rows = table("advect1d", "rkdg_p4", {20, 40, 80, 160});
  check_orders(d, rows, 40, 4.9, 0.15, "rkdg_p4");
  double e = rows.back().norms.l1;
  d.require(e <= 1e-12, "L1 at N=160 is " + fmt(e) + " > 1e-12");
  return d;
}

// --- 4: fifth-order kinetic schemes, non-compact vs compact ---
Detail crit4() {
  Detail d;
  std::vector<int> grids = {20, 40, 80, 160};
  auto gks = table("advect1d", "gks5", grids);
  auto cgk = table("advect1d", "cgks5", grids);
  for (size_t i = 0; i < grids.size(); ++i) {
    d.os << "  N=" << grids[i] << " gks5=" << fmt(gks[i].norms.l1)
         << " cgks5=" << fmt(cgk[i].norms.l1) << "\n";
    d.require(cgk[i].norms.l1 < gks[i].norms.l1,
              "compact error not below non-compact at N=" + std::to_string(grids[i]));
  }
  d.require(gks.back().norms.l1 <= 3.0 * 8.71e-10,
            "gks5 L1 at N=160 is " + fmt(gks.back().norms.l1) + " > 3x 8.71e-10");
  d.require(cgk.back().norms.l1 <= 3.0 * 1.54e-10,
            "cgks5 L1 at N=160 is " + fmt(cgk.back().norms.l1) + " > 3x 1.54e-10");
  return d;
}

// --- 5: 2D accuracy, fifth-order DG and compact kinetic ---
Detail crit5() {
  Detail d;
  std::vector<int> grids = {10, 20, 40, 80};
  auto dgr = table("advect2d", "rkdg_p4", grids);
  auto cgk = table("advect2d", "cgks5", grids);
  check_orders(d, dgr, 40, 5.0, 0.2, "rkdg_p4");
  check_orders(d, cgk, 40, 5.0, 0.2, "cgks5");
  d.require(cgk.back().norms.l1 <= 3.0 * 3.80e-9,
            "cgks5 L1 at 80^2 is " + fmt(cgk.back().norms.l1) + " > 3x 3.80e-9");
  return d;
}

// --- 6: Shu-Osher profile vs fine-grid reference, all three families ---
Detail crit6() {
  Detail d;
  const CaseDef& cs = case_by_name("shu_osher");
  std::vector<double> ref = reference_profile(cs);
  double ref_max = 0.0;
  for (double r : ref) ref_max = std::max(ref_max, r);
  for (const char* s : {"rkdg_p2", "gks5", "cgks5"}) {
    RunResult res = run_case(cs, solver_by_name(s), 400);
    Norms n = error_vs_reference(res.grid, res.means, ref);
    d.os << "  " << s << " L1=" << fmt(n.l1) << " max_rho=" << fmt(res.max_rho)
         << " (ref max " << fmt(ref_max) << ")\n";
    d.require(res.min_rho > 0.0, std::string(s) + " lost density positivity");
    d.require(n.l1 < 0.02, std::string(s) + " L1 vs reference is " + fmt(n.l1));
    d.require(res.max_rho <= 1.08 * ref_max,
              std::string(s) + " overshoots the reference maximum");
  }
  return d;
}

// --- 7: near-vacuum double rarefaction ---
Detail crit7() {
  Detail d;
  const CaseDef& cs = case_by_name("double_rarefaction");
  for (const char* s : {"rkdg_p2", "rkdg_p4", "gks3", "gks5", "cgks5"}) {
    RunOptions opt;
    if (std::string(s) == "rkdg_p2") opt.cfl = 0.12;
    if (std::string(s) == "rkdg_p4") opt.cfl = 0.04;
    RunResult res = run_case(cs, solver_by_name(s), 400, opt);
    Norms n = error_norms(res.grid, res.means, cs, res.t_end);
    d.os << "  " << s << " min_rho=" << fmt(res.min_rho) << " L1=" << fmt(n.l1)
         << "\n";
    d.require(res.min_rho > 0.0, std::string(s) + " produced non-positive density");
    d.require(n.l1 < 0.01, std::string(s) + " L1 vs exact is " + fmt(n.l1));
  }
  return d;
}

// --- 8: double Mach reflection, stability and conservation ---
Detail crit8() {
  Detail d;
  const CaseDef& cs = case_by_name("double_mach");
  for (const char* s : {"rkdg_p4", "cgks5"}) {
    RunOptions opt;
    opt.use_limiter = 1;
    opt.track_defect = true;
    RunResult res = run_case(cs, solver_by_name(s), 480, opt);
    d.os << "  " << s << " steps=" << res.steps << " rho=[" << fmt(res.min_rho)
         << "," << fmt(res.max_rho) << "] defect=" << fmt(res.max_step_defect)
         << "\n";
    d.require(res.min_rho >= 1.0 && res.max_rho <= 25.0,
              std::string(s) + " density left [1.0, 25]");
    d.require(res.max_step_defect < 1e-10,
              std::string(s) + " per-step conservation defect is " +
                  fmt(res.max_step_defect));
  }
  return d;
}

// --- 9: property bundle (fast oracle checks) ---
namespace props {

double quartic(double s) {
  return 1.0 + 0.5 * s - 0.3 * s * s + 0.2 * s * s * s + 0.7 * s * s * s * s;
}
double iquartic(double s) {
  return s + 0.25 * s * s - 0.1 * s * s * s + 0.05 * s * s * s * s +
         0.14 * s * s * s * s * s;
}

void basis_quadrature(Detail& d) {
  // Gauss rules integrate monomials to degree 2n-1; modes are orthonormal.
  for (int n = 1; n <= 6; ++n) {
    QuadratureRule r = gauss_rule(n);
    for (int m = 0; m <= 2 * n - 1; ++m) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) q += r.weights[i] * std::pow(r.nodes[i], m);
      double exact = m % 2 ? 0.0 : std::pow(0.5, m) / (m + 1);
      d.require(std::abs(q - exact) < 1e-13, "quadrature exactness");
    }
  }
  QuadratureRule r = gauss_rule(6);
  dg::DGBasis b = dg::DGBasis::make(2, 4);
  for (int l = 0; l < b.n_modes; ++l)
    for (int m = l; m < b.n_modes; ++m) {
      double q = 0.0;
      for (int i = 0; i < r.size(); ++i)
        for (int j = 0; j < r.size(); ++j)
          q += r.weights[i] * r.weights[j] * b.eval(l, r.nodes[i], r.nodes[j]) *
               b.eval(m, r.nodes[i], r.nodes[j]);
      d.require(std::abs(q - (l == m ? 1.0 : 0.0)) < 1e-12,
                "basis orthonormality");
    }
}

void weno_exactness(Detail& d) {
  double means[5];
  for (int k = -2; k <= 2; ++k)
    means[k + 2] = iquartic(k + 0.5) - iquartic(k - 0.5);
  for (double s0 : {-0.5, 0.5}) {
    d.require(std::abs(fv::weno5_point(means, s0, false).value - quartic(s0)) <
                  1e-12,
              "weno5 linear-weight quartic exactness");
  }
  double slopes[2] = {quartic(-0.5) - quartic(-1.5), quartic(1.5) - quartic(0.5)};
  for (double s0 : {-0.5, 0.0, 0.5}) {
    d.require(
        std::abs(fv::hweno5_point(means + 1, slopes, s0, false).value -
                 quartic(s0)) < 1e-12,
        "hweno5 linear-weight quartic exactness");
  }
  double five[5] = {2.0, 2.0, 2.0, 2.0, 2.0};
  double cslopes[2] = {0.0, 0.0};
  d.require(std::abs(fv::weno5_point(five, 0.5, true).value - 2.0) < 1e-14 &&
                std::abs(fv::hweno5_point(five, cslopes, 0.5, true).value - 2.0) <
                    1e-14,
            "constant-field exactness");
}

void limiter_props(Detail& d) {
  Grid g = Grid::make_1d(0.0, 1.0, 64);
  dg::DGBasis b = dg::DGBasis::make(1, 2);
  GasModel m{1.4, 1};
  auto jump = [](double x, double) {
    bool left = x < 0.5;
    ConservedState w;
    w.rho = left ? 1.0 : 0.125;
    w.mom_x = 0.3 * w.rho;
    w.energy = (left ? 1.0 : 0.1) / 0.4 + 0.5 * w.rho * 0.09;
    return w;
  };
  dg::DGSolution u = dg::project(jump, g, b);
  dg::MultiresLimiter lim(g, b, m);
  dg::DGSolution before = u;
  lim.apply(u, BoundarySpec::periodic(), 0.0);
  d.require(lim.last_mask().count() > 0, "detector misses the jumps");
  for (int i = g.ng; i < g.ng + g.nx; ++i)
    for (int v = 0; v < 4; ++v)
      d.require(std::abs(u.cell(i)[v] - before.cell(i)[v]) < 1e-14,
                "limiter perturbs a cell mean");
  // Smooth data: nothing is flagged, so the field is untouched.
  auto smooth = [](double x, double) {
    double rho = 1.0 + 0.2 * std::sin(2.0 * kPi * x);
    ConservedState w;
    w.rho = rho;
    w.mom_x = rho;
    w.energy = 1.0 / 0.4 + 0.5 * rho;
    return w;
  };
  dg::DGSolution us = dg::project(smooth, g, b);
  dg::fill_ghosts(us, BoundarySpec::periodic(), 0.0);
  d.require(lim.detect(us).count() == 0, "detector flags smooth data");
}

void moment_props(Detail& d) {
  GasModel m{1.4, 2};
  ConservedState w{1.3, 1.3 * 0.45, 1.3 * -0.2, 0.8 / 0.4 + 0.5 * 1.3 * 0.2425};
  gks::MomentTable t = gks::build_moments(cons_to_prim(w, m), m);
  // Moment recursion against Simpson quadrature of the Maxwellian marginal.
  auto num_moment = [&](double U, int n, double lo, double hi) {
    const int steps = 20000;
    double h = (hi - lo) / steps, sum = 0.0;
    for (int i = 0; i <= steps; ++i) {
      double wq = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      double u = lo + i * h;
      sum += wq * std::pow(u, n) * std::sqrt(t.lam / kPi) *
             std::exp(-t.lam * (u - U) * (u - U));
    }
    return sum * h / 3.0;
  };
  double span = 14.0 / std::sqrt(t.lam);
  for (int n = 0; n <= 8; ++n) {
    double full = num_moment(t.U, n, t.U - span, t.U + span);
    d.require(std::abs(t.u_all[n] - full) <= 1e-10 * std::max(1.0, std::abs(full)),
              "moment recursion vs quadrature");
    d.require(std::abs(t.u_pos[n] + t.u_neg[n] - full) < 1e-12,
              "half-moment splitting");
  }
  // Microslope solve inverts the psi-moment matrix.
  gks::MomentSolver solver(t);
  ConservedState rhs{0.3, -0.7, 1.2, 0.45};
  auto a = solver.solve(rhs);
  gks::VPoly pa;
  pa.clear();
  pa.add_psi(a);
  ConservedState back = gks::contract4(pa, t, gks::URange::All);
  for (int v = 0; v < 4; ++v)
    d.require(std::abs(back[v] - rhs[v]) < 1e-12, "microslope residual");
  // Interface-state identities: the t = 0 merged state is the half-moment
  // union of the two sides, and the u-weighted unit moment is the Euler flux.
  gks::VPoly up;
  up.clear();
  up.add_psi({0, 1, 0, 0});
  ConservedState f = gks::contract4(up, t, gks::URange::All);
  ConservedState fe = euler_flux(w, Axis::X, m);
  for (int v = 0; v < 4; ++v)
    d.require(std::abs(f[v] - fe[v]) < 1e-12 * std::max(1.0, std::abs(fe[v])),
              "kinetic moment of u*g vs Euler flux");
  ConservedState merged = gks::compatibility_merge(w, w, m);
  for (int v = 0; v < 4; ++v)
    d.require(std::abs(merged[v] - w[v]) < 1e-12, "compatibility merge identity");
}

void s2o4_exactness(Detail& d) {
  // dt*F(0) + dt^2/6 F'(0) + dt^2/3 F'(dt/2) integrates any quadratic-in-time
  // flux exactly over the step.
  double a = 0.7, b = -1.3, c = 2.1, dt = 0.37;
  auto F = [&](double t) { return a + b * t + c * t * t; };
  auto dF = [&](double t) { return b + 2.0 * c * t; };
  double update = dt * F(0.0) + dt * dt / 6.0 * dF(0.0) + dt * dt / 3.0 * dF(0.5 * dt);
  double exact = a * dt + 0.5 * b * dt * dt + c * dt * dt * dt / 3.0;
  d.require(std::abs(update - exact) < 1e-14, "two-stage quadratic exactness");
}

void conservation(Detail& d) {
  // Periodic kinetic steps keep the totals to roundoff.
  Grid g = Grid::make_1d(0.0, 1.0, 40);
  FVField f(g);
  for (int i = 0; i < g.sx(); ++i) {
    double rho = 1.0 + 0.2 * std::sin(2.0 * kPi * g.x_center(i));
    f.at(i) = {rho, rho, 0.0, 1.0 / 0.4 + 0.5 * rho};
  }
  gks::GksConfig cfg;
  cfg.recon.characteristic = true;
  gks::GksSolver sol(g, GasModel{1.4, 1}, cfg);
  auto total = [&]() {
    ConservedState s{};
    for (int i = g.ng; i < g.ng + g.nx; ++i) s = s + f.at(i);
    return g.dx * s;
  };
  ConservedState b0 = total();
  double t = 0.0;
  for (int n = 0; n < 5; ++n) t += sol.step(f, BoundarySpec::periodic(), t, sol.timestep(f));
  ConservedState b1 = total();
  for (int v = 0; v < 4; ++v)
    d.require(std::abs(b1[v] - b0[v]) < 1e-12, "periodic conservation");
}

void riemann_props(Detail& d) {
  // Sod star state (pinned) plus in-fan Riemann invariants.
  RP l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
  StarState st = solve_star(l, r, 1.4);
  d.require(std::abs(st.p - 0.30313) < 5e-5, "Sod star pressure");
  d.require(std::abs(st.u - 0.92745) < 5e-5, "Sod star velocity");
  // Inside the left fan both Riemann invariant and entropy match the left
  // state, and the characteristic relation u - a = xi holds.
  double al = std::sqrt(1.4 * l.p / l.rho);
  for (double xi : {-1.0, -0.6, -0.2}) {
    RP s = sample(l, r, 1.4, xi);
    double as = std::sqrt(1.4 * s.p / s.rho);
    d.require(std::abs((s.u + 5.0 * as) - (l.u + 5.0 * al)) < 1e-10,
              "fan Riemann invariant");
    d.require(std::abs(s.p / std::pow(s.rho, 1.4) -
                       l.p / std::pow(l.rho, 1.4)) < 1e-10,
              "fan isentropy");
    d.require(std::abs((s.u - as) - xi) < 1e-10, "fan characteristic speed");
  }
}

}  // namespace props

Detail crit9() {
  Detail d;
  props::basis_quadrature(d);
  props::weno_exactness(d);
  props::limiter_props(d);
  props::moment_props(d);
  props::s2o4_exactness(d);
  props::conservation(d);
  props::riemann_props(d);
  if (d.ok) d.os << "  property bundle: all oracle checks hold\n";
  return d;
}

const char* kTitles[9] = {
    "1D advection accuracy, third-order DG (orders 3.0, N=640 error bound)",
    "1D advection accuracy, third-order kinetic scheme with linear weights",
    "1D advection accuracy, fifth-order DG with RK4",
    "1D advection accuracy, fifth-order kinetic schemes (compact beats non-compact)",
    "2D advection accuracy, fifth-order DG and compact kinetic scheme",
    "Shu-Osher profiles vs 10000-cell reference, three solver families",
    "double rarefaction: positivity and error vs exact solution",
    "double Mach reflection: stability, density bounds, conservation",
    "property bundle: basis/quadrature/WENO/limiter/moments/time-integrator/Riemann",
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  Detail (*fns[9])() = {crit1, crit2, crit3, crit4, crit5,
                        crit6, crit7, crit8, crit9};
  int failed = 0;
  for (int k : which) {
    if (k < 1 || k > 9) {
      std::fprintf(stderr, "unknown criterion %d\n", k);
      return 2;
    }
    Detail d;
    try {
      d = fns[k - 1]();
    } catch (const std::exception& e) {
      d.ok = false;
      d.os << "  FAILED: exception: " << e.what() << "\n";
    }
    std::printf("[%s] criterion %d: %s\n%s", d.ok ? "PASS" : "FAIL", k,
                kTitles[k - 1], d.os.str().c_str());
    std::fflush(stdout);
    if (!d.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
