#include "kinflow/gks/flux.hpp"

#include <cmath>

namespace kinflow::gks {

double collision_time(double p_l, double p_r, double dt) {
  return 0.01 * dt + std::abs(p_l - p_r) / (p_l + p_r) * dt;
}

ConservedState kfvs_flux(const ConservedState& wl, const ConservedState& wr,
                         const GasModel& model) {
  const MomentTable tl = build_moments(cons_to_prim(wl, model), model);
  const MomentTable tr = build_moments(cons_to_prim(wr, model), model);
  VPoly pu;
  pu.clear();
  pu.add_psi({1, 0, 0, 0}, 1.0, 1, 0);
  return contract4(pu, tl, URange::Pos) + contract4(pu, tr, URange::Neg);
}

namespace {

// Moments of P and u*P against a table range, as (plain, u-weighted).
struct MomentPair {
  ConservedState plain, with_u;
};

MomentPair moments_of(const VPoly& p, const VPoly& pu, const MomentTable& t,
                      URange range) {
  return {contract4(p, t, range), contract4(pu, t, range)};
}

}  // namespace

GksFluxResult gks_flux(const fv::InterfacePoint& pt, double tau, double dt,
                       const GasModel& model) {
  const MomentTable tl = build_moments(cons_to_prim(pt.wl, model), model);
  const MomentTable tr = build_moments(cons_to_prim(pt.wr, model), model);

  VPoly one, one_u;
  one.clear();
  one.add_psi({1, 0, 0, 0});
  one_u.clear();
  one_u.add_psi({1, 0, 0, 0}, 1.0, 1, 0);

  ConservedState w0 =
      contract4(one, tl, URange::Pos) + contract4(one, tr, URange::Neg);
  const MomentTable tc = build_moments(cons_to_prim(w0, model), model);

  const MomentSolver sl(tl), sr(tr), sc(tc);

  // Non-equilibrium side slopes (first derivatives only).
  auto axl = sl.solve(pt.dnl);
  auto ayl = sl.solve(pt.dtl);
  auto axr = sr.solve(pt.dnr);
  auto ayr = sr.solve(pt.dtr);

  // Equilibrium slopes up to second order plus the time family.
  ConservedState d2nc = pt.d2nc_base + pt.d2nc_w0 * w0;
  auto axc = sc.solve(pt.dnc);
  auto ayc = sc.solve(pt.dtc);

  auto time_slope = [&](const std::array<double, 4>& au,
                        const std::array<double, 4>& av) {
    VPoly p;
    p.clear();
    p.add_psi(au, 1.0, 1, 0);
    p.add_psi(av, 1.0, 0, 1);
    ConservedState rhs = -1.0 * contract4(p, tc, URange::All);
    return sc.solve(rhs);
  };

  auto ac = time_slope(axc, ayc);  // A
  auto axx = sc.solve(d2nc);
  auto axy = sc.solve(pt.dntc);
  auto ayy = sc.solve(pt.d2tc);
  auto axt = time_slope(axx, axy);
  auto ayt = time_slope(axy, ayy);
  auto att = time_slope(axt, ayt);

  // Flux moment blocks of the distribution's seven terms.
  auto block = [&](const std::array<double, 4>& a, const MomentTable& t,
                   URange range) {
    VPoly p, pu;
    p.clear();
    p.add_psi(a);
    pu.clear();
    pu.add_psi(a, 1.0, 1, 0);
    return moments_of(p, pu, t, range);
  };
  auto grad_block = [&](const std::array<double, 4>& au,
                        const std::array<double, 4>& av, const MomentTable& t,
                        URange range) {
    VPoly p, pu;
    p.clear();
    p.add_psi(au, 1.0, 1, 0);
    p.add_psi(av, 1.0, 0, 1);
    pu.clear();
    pu.add_psi(au, 1.0, 2, 0);
    pu.add_psi(av, 1.0, 1, 1);
    return moments_of(p, pu, t, range);
  };

  MomentPair c0 = moments_of(one, one_u, tc, URange::All);
  MomentPair cA = block(ac, tc, URange::All);
  MomentPair ctt = block(att, tc, URange::All);
  MomentPair cgrad = grad_block(axc, ayc, tc, URange::All);
  // (a_x u + a_y v + A) g and its time sibling.
  MomentPair cx{cgrad.plain + cA.plain, cgrad.with_u + cA.with_u};
  MomentPair cxt_grad = grad_block(axt, ayt, tc, URange::All);
  MomentPair cxt{cxt_grad.plain + ctt.plain, cxt_grad.with_u + ctt.with_u};

  MomentPair l0 = moments_of(one, one_u, tl, URange::Pos);
  MomentPair r0 = moments_of(one, one_u, tr, URange::Neg);
  MomentPair l1 = grad_block(axl, ayl, tl, URange::Pos);
  MomentPair r1 = grad_block(axr, ayr, tr, URange::Neg);

  // tau = 0 is the inviscid limit: instant relaxation to equilibrium for
  // t > 0 while t = 0 still sees the initial non-equilibrium split.
  auto relax = [&](double t) {
    if (tau > 0.0) return std::exp(-t / tau);
    return t == 0.0 ? 1.0 : 0.0;
  };
  // The integral deliberately keeps the distribution linear in time: the
  // two-point fit below then returns the instantaneous flux and flux
  // derivative exactly, which the two-stage update needs. The quadratic
  // terms stay in the pointwise interface values.
  auto time_integral = [&](double delta) {
    double i0 = delta;
    double i1 = 0.5 * delta * delta;
    double ex = relax(delta);
    double e0 = tau * (1.0 - ex);
    double e1 = tau * tau - (tau * delta + tau * tau) * ex;
    ConservedState f = i0 * c0.with_u + i1 * cA.with_u -
                       tau * i0 * cx.with_u -
                       e0 * c0.with_u + e1 * cgrad.with_u +
                       e0 * (l0.with_u + r0.with_u) -
                       e1 * (l1.with_u + r1.with_u);
    return f;
  };
  auto pointwise = [&](double t) {
    double ex = relax(t);
    return c0.plain + t * cA.plain + 0.5 * t * t * ctt.plain -
           tau * (cx.plain + t * cxt.plain) -
           ex * (c0.plain - t * cgrad.plain) + ex * (l0.plain - t * l1.plain) +
           ex * (r0.plain - t * r1.plain);
  };

  GksFluxResult out;
  ConservedState f_half = time_integral(0.5 * dt);
  ConservedState f_full = time_integral(dt);
  out.flux = (1.0 / dt) * (4.0 * f_half - f_full);
  out.dflux = (4.0 / (dt * dt)) * (f_full - 2.0 * f_half);
  out.w_zero = pointwise(0.0);
  out.w_mid = pointwise(0.5 * dt);
  out.w_end = pointwise(dt);
  return out;
}

}  // namespace kinflow::gks
