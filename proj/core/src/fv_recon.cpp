#include "kinflow/fv/recon.hpp"

#include <cmath>

#include "kinflow/gks/moments.hpp"
#include "kinflow/parallel.hpp"

namespace kinflow::fv {

namespace {

inline ConservedState swap_mom(const ConservedState& w) {
  return {w.rho, w.mom_y, w.mom_x, w.energy};
}

// Characteristic helpers; `es` may be null for component-wise work.
inline void to_fields(const ConservedState& w, const EigenSystem* es, int f,
                      double* out) {
  if (!es) {
    out[f] = w[f];
    return;
  }
  const auto& L = es->left[f];
  out[f] = L[0] * w.rho + L[1] * w.mom_x + L[2] * w.mom_y + L[3] * w.energy;
}

inline double field_of(const ConservedState& w, const EigenSystem* es, int f) {
  if (!es) return w[f];
  const auto& L = es->left[f];
  return L[0] * w.rho + L[1] * w.mom_x + L[2] * w.mom_y + L[3] * w.energy;
}

inline ConservedState from_fields(const double* y, const EigenSystem* es) {
  if (!es) return {y[0], y[1], y[2], y[3]};
  ConservedState w{};
  for (int v = 0; v < 4; ++v)
    for (int f = 0; f < 4; ++f) w[v] += es->right[v][f] * y[f];
  return w;
}

// Everything a line (or 1D interface) reconstruction produces. States are in
// the kernel frame of the interface.
struct LineRecord {
  ConservedState wl, wr;
  ConservedState dnl, dnr, d2nl, d2nr;
  ConservedState s1, s2b;  // central normal derivative closure
  ConservedState wc;       // merged central value (tangential stage input)
  bool ok = true;
};

// Interface between m[2] and m[3]; m holds 6 consecutive means in the kernel
// frame, sl the matching physical slope means (compact only).
void interface_core(const ConservedState m[6], const ConservedState* sl,
                    const ReconOptions& opt, const GasModel& model, double dx,
                    bool want_wc, bool want_center, LineRecord& out) {
  EigenSystem es_store;
  const EigenSystem* es = nullptr;
  if (opt.characteristic) {
    es_store = eigen_system(m[2], m[3], Axis::X, model);
    es = &es_store;
  }

  double wl[4], wr[4], dnl[4], dnr[4], d2nl[4], d2nr[4];
  for (int f = 0; f < 4; ++f) {
    ReconPoint l{}, r{};
    if (opt.scheme == ReconScheme::Weno5) {
      double mm[6];
      for (int k = 0; k < 6; ++k) mm[k] = field_of(m[k], es, f);
      l = weno5_point(mm, 0.5, opt.nonlinear);
      r = weno5_point(mm + 1, -0.5, opt.nonlinear);
    } else if (opt.scheme == ReconScheme::Weno3) {
      double mm[6];
      for (int k = 1; k < 5; ++k) mm[k] = field_of(m[k], es, f);
      l = weno3_point(mm + 1, 0.5, opt.nonlinear);
      r = weno3_point(mm + 2, -0.5, opt.nonlinear);
    } else {
      double mm[6], ss[6];
      for (int k = 1; k < 5; ++k) {
        mm[k] = field_of(m[k], es, f);
        ss[k] = field_of(sl[k], es, f) * dx;  // reference-unit slope means
      }
      double sl_l[2] = {ss[1], ss[3]};
      double msl[3] = {mm[1], mm[2], mm[3]};
      l = hweno5_point(msl, sl_l, 0.5, opt.nonlinear);
      double sl_r[2] = {ss[2], ss[4]};
      double msr[3] = {mm[2], mm[3], mm[4]};
      r = hweno5_point(msr, sl_r, -0.5, opt.nonlinear);
    }
    wl[f] = l.value;
    wr[f] = r.value;
    dnl[f] = l.d1 / dx;
    dnr[f] = r.d1 / dx;
    d2nl[f] = l.d2 / (dx * dx);
    d2nr[f] = r.d2 / (dx * dx);
  }
  out.wl = from_fields(wl, es);
  out.wr = from_fields(wr, es);
  out.dnl = from_fields(dnl, es);
  out.dnr = from_fields(dnr, es);
  out.d2nl = from_fields(d2nl, es);
  out.d2nr = from_fields(d2nr, es);

  out.ok = state_valid(out.wl) && state_valid(out.wr);
  if (!out.ok) {
    out.wl = m[2];
    out.wr = m[3];
    out.dnl = out.dnr = out.d2nl = out.d2nr = {};
  }

  if (want_center) {
    if (opt.scheme == ReconScheme::Hweno5) {
      // Central derivatives from the quartic through four slope means,
      // anchored at the interface.
      for (int f = 0; f < 4; ++f) {
        double data[4];
        for (int k = 0; k < 4; ++k) data[k] = sl[k + 1][f] * dx;
        ReconPoint c = slope_quartic_point(data, 0.0);
        out.s1[f] = c.d1 / dx;
        out.s2b[f] = c.d2 / (dx * dx);
      }
    } else {
      // Four-mean expansion; the -15/2 W0 part of S2 is applied by the
      // caller once the merged interface value is known.
      for (int f = 0; f < 4; ++f) {
        out.s1[f] = (-(m[4][f] - m[1][f]) / 12.0 + 1.25 * (m[3][f] - m[2][f])) / dx;
        out.s2b[f] =
            (-0.125 * (m[4][f] + m[1][f]) + 31.0 / 8.0 * (m[3][f] + m[2][f])) /
            (dx * dx);
      }
    }
  }
  if (want_wc) out.wc = gks::compatibility_merge(out.wl, out.wr, model);
}

}  // namespace

void reconstruct_1d(const FVField& field, const ReconOptions& opt,
                    const GasModel& model, std::vector<InterfacePoint>& out) {
  const Grid& g = field.grid;
  int nf = g.nx + 1;
  out.assign(nf, {});
  double w0c = opt.scheme == ReconScheme::Hweno5 ? 0.0 : -7.5 / (g.dx * g.dx);

  std::vector<LineRecord> lines(nf + 2);  // faces -1 .. nx+1 for the parabolas
  bool compact = opt.scheme == ReconScheme::Hweno5;
  int lo = compact ? -1 : 0, hi = compact ? nf + 1 : nf;

  for (int f = lo; f < hi; ++f) {
    ConservedState m[6];
    ConservedState sl[6];
    for (int k = 0; k < 6; ++k) {
      int i = g.ng + f - 3 + k;
      bool in_range = i >= 0 && i < g.sx();
      m[k] = in_range ? field.at(i) : ConservedState{1, 0, 0, 1};
      if (field.has_slopes) sl[k] = in_range ? field.wx[g.index(i, 0)] : ConservedState{};
    }
    bool interior = f >= 0 && f < nf;
    interface_core(m, field.has_slopes ? sl : nullptr, opt, model, g.dx,
                   false, interior, lines[f + 1]);
  }

  for (int f = 0; f < nf; ++f) {
    InterfacePoint& p = out[f];
    const LineRecord& lr = lines[f + 1];
    p.wl = lr.wl;
    p.wr = lr.wr;
    p.dnc = lr.s1;
    p.d2nc_base = lr.s2b;
    p.d2nc_w0 = w0c;
    p.fallback = !lr.ok;
    if (compact) {
      // f0 derivatives from the in-cell parabola through the cell mean and
      // the two reconstructed edge values.
      ConservedState wa = field.at(g.ng + f - 1);
      ConservedState wb = field.at(g.ng + f);
      for (int v = 0; v < 4; ++v) {
        double c1 = lines[f + 1].wl[v] - lines[f].wr[v];
        double c2 = 3.0 * (lines[f + 1].wl[v] + lines[f].wr[v] - 2.0 * wa[v]);
        p.dnl[v] = (c1 + c2) / g.dx;
        p.d2nl[v] = 2.0 * c2 / (g.dx * g.dx);
        double d1 = lines[f + 2].wl[v] - lines[f + 1].wr[v];
        double d2 = 3.0 * (lines[f + 2].wl[v] + lines[f + 1].wr[v] - 2.0 * wb[v]);
        p.dnr[v] = (d1 - d2) / g.dx;
        p.d2nr[v] = 2.0 * d2 / (g.dx * g.dx);
      }
      if (!lines[f].ok || !lines[f + 2].ok) p.fallback = true;
      if (p.fallback) p.dnl = p.dnr = p.d2nl = p.d2nr = {};
    } else {
      p.dnl = lr.dnl;
      p.dnr = lr.dnr;
      p.d2nl = lr.d2nl;
      p.d2nr = lr.d2nr;
    }
  }
}

void reconstruct_2d(const FVField& field, Axis axis, const ReconOptions& opt,
                    const GasModel& model, std::vector<InterfacePoint>& out) {
  const Grid& g = field.grid;
  bool xnormal = axis == Axis::X;
  int nn = xnormal ? g.nx : g.ny;  // cells along the normal
  int nt = xnormal ? g.ny : g.nx;  // cells along the tangent
  double dn = xnormal ? g.dx : g.dy;
  double dt = xnormal ? g.dy : g.dx;
  int nf = nn + 1;
  bool compact = opt.scheme == ReconScheme::Hweno5;
  double w0c = compact ? 0.0 : -7.5 / (dn * dn);

  auto cell_idx = [&](int n, int t) {
    return xnormal ? g.index(n, t) : g.index(t, n);
  };
  auto mean_of = [&](int n, int t) {
    ConservedState w = field.w[cell_idx(n, t)];
    return xnormal ? w : swap_mom(w);
  };
  auto nslope_of = [&](int n, int t) {
    const auto& arr = xnormal ? field.wx : field.wy;
    ConservedState w = arr[cell_idx(n, t)];
    return xnormal ? w : swap_mom(w);
  };

  // Phase 1: line-averaged interface data for every tangential line within
  // two cells of the interior (the tangential stencils reach that far).
  int tlo = g.ng - 2, thi = g.ng + nt + 2;
  int nlines = thi - tlo;
  std::vector<LineRecord> lines(static_cast<size_t>(nlines) * nf);

  parallel_for(0, nlines, [&](int lt) {
    int t = tlo + lt;
    for (int f = 0; f < nf; ++f) {
      ConservedState m[6], sl[6];
      for (int k = 0; k < 6; ++k) {
        int n = g.ng + f - 3 + k;
        m[k] = mean_of(n, t);
        if (field.has_slopes) sl[k] = nslope_of(n, t);
      }
      interface_core(m, field.has_slopes ? sl : nullptr, opt, model, dn, true,
                     true, lines[static_cast<size_t>(lt) * nf + f]);
    }
  });

  // Phase 2: tangential reconstruction to the Gauss points of each face.
  out.assign(static_cast<size_t>(nt) * nf * kFaceGauss, {});
  parallel_for(0, nt, [&](int tt) {
    int lt = tt + 2;  // line index of this interior cell
    for (int f = 0; f < nf; ++f) {
      const LineRecord* lr[5];
      bool line_ok = true;
      for (int k = 0; k < 5; ++k) {
        lr[k] = &lines[static_cast<size_t>(lt - 2 + k) * nf + f];
        line_ok = line_ok && lr[k]->ok;
      }
      for (int gp = 0; gp < kFaceGauss; ++gp) {
        double s0 = kFaceNodes[gp];
        InterfacePoint& p = out[(static_cast<size_t>(tt) * nf + f) * kFaceGauss + gp];
        p.d2nc_w0 = w0c;
        for (int v = 0; v < 4; ++v) {
          double q[5];
          auto gather = [&](ConservedState LineRecord::* member) {
            for (int k = 0; k < 5; ++k) q[k] = (lr[k]->*member)[v];
          };
          gather(&LineRecord::wl);
          ReconPoint rp = weno5_gauss(q, s0, opt.nonlinear);
          p.wl[v] = rp.value;
          p.dtl[v] = rp.d1 / dt;
          gather(&LineRecord::wr);
          rp = weno5_gauss(q, s0, opt.nonlinear);
          p.wr[v] = rp.value;
          p.dtr[v] = rp.d1 / dt;
          gather(&LineRecord::dnl);
          p.dnl[v] = weno5_gauss(q, s0, opt.nonlinear).value;
          gather(&LineRecord::dnr);
          p.dnr[v] = weno5_gauss(q, s0, opt.nonlinear).value;
          gather(&LineRecord::d2nl);
          p.d2nl[v] = weno5_gauss(q, s0, opt.nonlinear).value;
          gather(&LineRecord::d2nr);
          p.d2nr[v] = weno5_gauss(q, s0, opt.nonlinear).value;
          // Central stage: linear tangential reconstruction.
          gather(&LineRecord::s1);
          rp = linear5_point(q, s0);
          p.dnc[v] = rp.value;
          p.dntc[v] = rp.d1 / dt;
          gather(&LineRecord::s2b);
          p.d2nc_base[v] = linear5_point(q, s0).value;
          gather(&LineRecord::wc);
          rp = linear5_point(q, s0);
          p.dtc[v] = rp.d1 / dt;
          p.d2tc[v] = rp.d2 / (dt * dt);
        }
        if (!line_ok || !state_valid(p.wl) || !state_valid(p.wr)) {
          int a = g.ng + f - 1, b = g.ng + f;
          p.wl = mean_of(a, g.ng + tt);
          p.wr = mean_of(b, g.ng + tt);
          p.dnl = p.dnr = p.d2nl = p.d2nr = p.dtl = p.dtr = {};
          p.dnc = p.d2nc_base = p.dtc = p.d2tc = p.dntc = {};
          p.d2nc_w0 = 0.0;
          p.fallback = true;
        }
      }
    }
  });
}

}  // namespace kinflow::fv
