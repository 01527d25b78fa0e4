#include "bench/exact_riemann.hpp"

#include <algorithm>
#include <cmath>

namespace kinflow::bench {

namespace {

double sound(const RP& s, double g) { return std::sqrt(g * s.p / s.rho); }

// f_K(p) and its derivative: shock (p > p_K) or rarefaction branch.
void side_function(const RP& s, double g, double p, double& f, double& df) {
  double a = sound(s, g);
  if (p > s.p) {
    double A = 2.0 / ((g + 1.0) * s.rho);
    double B = (g - 1.0) / (g + 1.0) * s.p;
    double q = std::sqrt(A / (p + B));
    f = (p - s.p) * q;
    df = q * (1.0 - 0.5 * (p - s.p) / (p + B));
  } else {
    double pr = p / s.p;
    f = 2.0 * a / (g - 1.0) * (std::pow(pr, (g - 1.0) / (2.0 * g)) - 1.0);
    df = std::pow(pr, -(g + 1.0) / (2.0 * g)) / (s.rho * a);
  }
}

}  // namespace

StarState solve_star(const RP& l, const RP& r, double gamma) {
  if (!(l.rho > 0.0 && r.rho > 0.0 && l.p > 0.0 && r.p > 0.0))
    throw RiemannFailure("invalid Riemann states");
  double al = sound(l, gamma), ar = sound(r, gamma);
  double du = r.u - l.u;
  StarState st;
  // Pressure positivity condition; violated -> vacuum opens between the fans.
  if (2.0 * (al + ar) / (gamma - 1.0) <= du) {
    st.vacuum = true;
    return st;
  }
  // Two-rarefaction estimate as the starting guess (always positive).
  double z = (gamma - 1.0) / (2.0 * gamma);
  double p0 = std::pow((al + ar - 0.5 * (gamma - 1.0) * du) /
                           (al / std::pow(l.p, z) + ar / std::pow(r.p, z)),
                       1.0 / z);
  double p = std::max(p0, 1e-14);
  for (int it = 0; it < 100; ++it) {
    double fl, dfl, fr, dfr;
    side_function(l, gamma, p, fl, dfl);
    side_function(r, gamma, p, fr, dfr);
    double f = fl + fr + du;
    double step = f / (dfl + dfr);
    double pn = p - step;
    if (pn <= 0.0) pn = 0.5 * p;
    if (std::abs(pn - p) < 1e-14 * (0.5 * (pn + p)) || std::abs(f) < 1e-13) {
      p = pn;
      break;
    }
    p = pn;
  }
  double fl, dfl, fr, dfr;
  side_function(l, gamma, p, fl, dfl);
  side_function(r, gamma, p, fr, dfr);
  if (std::abs(fl + fr + du) > 1e-10) throw RiemannFailure("star iteration stalled");
  st.p = p;
  st.u = 0.5 * (l.u + r.u) + 0.5 * (fr - fl);
  return st;
}

RP sample(const RP& l, const RP& r, double gamma, double xi) {
  double g = gamma;
  double al = sound(l, g), ar = sound(r, g);
  StarState st = solve_star(l, r, g);

  if (st.vacuum) {
    // Two rarefactions separated by vacuum.
    double shl = l.u - al, stl = l.u + 2.0 * al / (g - 1.0);
    double shr = r.u + ar, str = r.u - 2.0 * ar / (g - 1.0);
    if (xi <= shl) return l;
    if (xi < stl) {
      double u = (2.0 * (al + 0.5 * (g - 1.0) * l.u) + 2.0 * xi) / (g + 1.0);
      double a = u - xi;
      double rho = l.rho * std::pow(a / al, 2.0 / (g - 1.0));
      return {rho, u, l.p * std::pow(a / al, 2.0 * g / (g - 1.0))};
    }
    if (xi <= str) return {0.0, 0.5 * (stl + str), 0.0};
    if (xi < shr) {
      double u = (2.0 * (-ar + 0.5 * (g - 1.0) * r.u) + 2.0 * xi) / (g + 1.0);
      double a = xi - u;
      double rho = r.rho * std::pow(a / ar, 2.0 / (g - 1.0));
      return {rho, u, r.p * std::pow(a / ar, 2.0 * g / (g - 1.0))};
    }
    return r;
  }

  if (xi <= st.u) {  // left of the contact
    if (st.p > l.p) {  // left shock
      double ms = l.u - al * std::sqrt((g + 1.0) / (2.0 * g) * st.p / l.p +
                                       (g - 1.0) / (2.0 * g));
      if (xi <= ms) return l;
      double gr = (g - 1.0) / (g + 1.0);
      double rho = l.rho * (st.p / l.p + gr) / (gr * st.p / l.p + 1.0);
      return {rho, st.u, st.p};
    }
    double asl = al * std::pow(st.p / l.p, (g - 1.0) / (2.0 * g));
    double shl = l.u - al, stl = st.u - asl;
    if (xi <= shl) return l;
    if (xi >= stl)
      return {l.rho * std::pow(st.p / l.p, 1.0 / g), st.u, st.p};
    double u = (2.0 * (al + 0.5 * (g - 1.0) * l.u) + 2.0 * xi) / (g + 1.0);
    double a = u - xi;
    return {l.rho * std::pow(a / al, 2.0 / (g - 1.0)), u,
            l.p * std::pow(a / al, 2.0 * g / (g - 1.0))};
  }

  if (st.p > r.p) {  // right shock
    double ms = r.u + ar * std::sqrt((g + 1.0) / (2.0 * g) * st.p / r.p +
                                     (g - 1.0) / (2.0 * g));
    if (xi >= ms) return r;
    double gr = (g - 1.0) / (g + 1.0);
    double rho = r.rho * (st.p / r.p + gr) / (gr * st.p / r.p + 1.0);
    return {rho, st.u, st.p};
  }
  double asr = ar * std::pow(st.p / r.p, (g - 1.0) / (2.0 * g));
  double shr = r.u + ar, str = st.u + asr;
  if (xi >= shr) return r;
  if (xi <= str)
    return {r.rho * std::pow(st.p / r.p, 1.0 / g), st.u, st.p};
  double u = (2.0 * (-ar + 0.5 * (g - 1.0) * r.u) + 2.0 * xi) / (g + 1.0);
  double a = xi - u;
  return {r.rho * std::pow(a / ar, 2.0 / (g - 1.0)), u,
          r.p * std::pow(a / ar, 2.0 * g / (g - 1.0))};
}

}  // namespace kinflow::bench
