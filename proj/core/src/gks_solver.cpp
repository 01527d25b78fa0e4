#include "kinflow/gks/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kinflow/parallel.hpp"

namespace kinflow::gks {

namespace {

inline ConservedState swap_mom(const ConservedState& w) {
  return {w.rho, w.mom_y, w.mom_x, w.energy};
}

}  // namespace

GksSolver::GksSolver(const Grid& grid, const GasModel& model, const GksConfig& cfg)
    : grid_(grid), model_(model), cfg_(cfg) {}

double GksSolver::timestep(const FVField& field) const {
  const Grid& g = grid_;
  double dt = std::numeric_limits<double>::max();
  for (int j = g.dim == 2 ? g.ng : 0; j < (g.dim == 2 ? g.ng + g.ny : 1); ++j)
    for (int i = g.ng; i < g.ng + g.nx; ++i) {
      PrimitiveState p = cons_to_prim(field.at(i, j), model_);
      double c = sound_speed(p, model_);
      if (g.dim == 1) {
        dt = std::min(dt, g.dx / (std::abs(p.u_x) + c));
      } else {
        double rate = (std::abs(p.u_x) + c) / g.dx + (std::abs(p.u_y) + c) / g.dy;
        dt = std::min(dt, 1.0 / rate);
      }
    }
  return cfg_.cfl * dt;
}

void GksSolver::sweep(FVField& field, const BoundarySpec& bc, double time,
                      double dt, std::vector<FaceData>& fx,
                      std::vector<FaceData>& fy) const {
  const Grid& g = grid_;
  fill_ghosts(field, bc, time);

  auto face_from_points = [&](const fv::InterfacePoint* pts, int npts,
                              bool swap) {
    FaceData fd{};
    for (int q = 0; q < npts; ++q) {
      double w = npts == 1 ? 1.0 : fv::kFaceWeights[q];
      const fv::InterfacePoint& pt = pts[q];
      PrimitiveState pl = cons_to_prim(pt.wl, model_);
      PrimitiveState pr = cons_to_prim(pt.wr, model_);
      double tau = cfg_.tau_eps * dt + std::abs(pl.pressure - pr.pressure) /
                                           (pl.pressure + pr.pressure) * dt;
      GksFluxResult r = gks_flux(pt, tau, dt, model_);
      fd.f = fd.f + w * r.flux;
      fd.df = fd.df + w * r.dflux;
      fd.wmid = fd.wmid + w * r.w_mid;
    }
    if (swap) {
      fd.f = swap_mom(fd.f);
      fd.df = swap_mom(fd.df);
      fd.wmid = swap_mom(fd.wmid);
    }
    return fd;
  };

  if (g.dim == 1) {
    std::vector<fv::InterfacePoint> pts;
    fv::reconstruct_1d(field, cfg_.recon, model_, pts);
    fx.resize(pts.size());
    parallel_for(0, static_cast<int>(pts.size()), [&](int f) {
      fx[f] = face_from_points(&pts[f], 1, false);
    });
    fy.clear();
    return;
  }

  std::vector<fv::InterfacePoint> px, py;
  fv::reconstruct_2d(field, Axis::X, cfg_.recon, model_, px);
  fv::reconstruct_2d(field, Axis::Y, cfg_.recon, model_, py);
  int nfx = g.nx + 1, nfy = g.ny + 1;
  fx.resize(static_cast<size_t>(g.ny) * nfx);
  fy.resize(static_cast<size_t>(g.nx) * nfy);
  parallel_for(0, g.ny, [&](int jj) {
    for (int f = 0; f < nfx; ++f)
      fx[static_cast<size_t>(jj) * nfx + f] = face_from_points(
          &px[(static_cast<size_t>(jj) * nfx + f) * fv::kFaceGauss],
          fv::kFaceGauss, false);
  });
  parallel_for(0, g.nx, [&](int ii) {
    for (int f = 0; f < nfy; ++f)
      fy[static_cast<size_t>(ii) * nfy + f] = face_from_points(
          &py[(static_cast<size_t>(ii) * nfy + f) * fv::kFaceGauss],
          fv::kFaceGauss, true);
  });
}

bool GksSolver::try_step(FVField& field, const BoundarySpec& bc, double time,
                         double dt, FluxLedger* ledger) const {
  const Grid& g = grid_;
  int nfx = g.nx + 1, nfy = g.ny + 1;
  bool compact = field.has_slopes;

  FVField work = field;
  std::vector<FaceData> fx1, fy1, fx2, fy2;
  sweep(work, bc, time, dt, fx1, fy1);

  // Positivity fail-safe: faces of a cell whose update went invalid are
  // demoted to the first-order split flux of the adjacent t^n means. Both
  // neighbors see the demoted flux, so conservation is untouched.
  std::vector<char> demx(fx1.size(), 0), demy(fy1.size(), 0);
  std::vector<FaceData> kx(fx1.size()), ky(fy1.size());
  auto demote = [&](int ii, int jj) {
    int j = g.dim == 2 ? g.ng + jj : 0;
    for (int f = ii; f <= ii + 1; ++f) {
      size_t id = static_cast<size_t>(jj) * nfx + f;
      if (demx[id]) continue;
      ConservedState a = work.at(g.ng + f - 1, j), b = work.at(g.ng + f, j);
      kx[id].f = kfvs_flux(a, b, model_);
      kx[id].df = {};
      kx[id].wmid = compatibility_merge(a, b, model_);
      demx[id] = 1;
    }
    if (g.dim != 2) return;
    for (int f = jj; f <= jj + 1; ++f) {
      size_t id = static_cast<size_t>(ii) * nfy + f;
      if (demy[id]) continue;
      ConservedState a = swap_mom(work.at(g.ng + ii, g.ng + f - 1));
      ConservedState b = swap_mom(work.at(g.ng + ii, g.ng + f));
      ky[id].f = swap_mom(kfvs_flux(a, b, model_));
      ky[id].df = {};
      ky[id].wmid = swap_mom(compatibility_merge(a, b, model_));
      demy[id] = 1;
    }
  };
  auto face_x = [&](const std::vector<FaceData>& fs, int f, int jj) -> const FaceData& {
    size_t id = static_cast<size_t>(jj) * nfx + f;
    return demx[id] ? kx[id] : fs[id];
  };
  auto face_y = [&](const std::vector<FaceData>& fs, int ii, int f) -> const FaceData& {
    size_t id = static_cast<size_t>(ii) * nfy + f;
    return demy[id] ? ky[id] : fs[id];
  };

  int nyi = g.dim == 2 ? g.ny : 1;
  std::vector<std::pair<int, int>> bad;

  // W* = W^n - div(dt/2 F + dt^2/8 dF); retry with demoted faces on failure.
  FVField star = work;
  for (int attempt = 0;; ++attempt) {
    bad.clear();
    for (int jj = 0; jj < nyi; ++jj) {
      int j = g.dim == 2 ? g.ng + jj : 0;
      for (int ii = 0; ii < g.nx; ++ii) {
        int i = g.ng + ii;
        ConservedState w = field.at(i, j);
        const FaceData& fl = face_x(fx1, ii, jj);
        const FaceData& fr = face_x(fx1, ii + 1, jj);
        ConservedState phi_l = 0.5 * dt * fl.f + dt * dt / 8.0 * fl.df;
        ConservedState phi_r = 0.5 * dt * fr.f + dt * dt / 8.0 * fr.df;
        w = w - (1.0 / g.dx) * (phi_r - phi_l);
        if (g.dim == 2) {
          const FaceData& fb = face_y(fy1, ii, jj);
          const FaceData& ft = face_y(fy1, ii, jj + 1);
          ConservedState phi_b = 0.5 * dt * fb.f + dt * dt / 8.0 * fb.df;
          ConservedState phi_t = 0.5 * dt * ft.f + dt * dt / 8.0 * ft.df;
          w = w - (1.0 / g.dy) * (phi_t - phi_b);
        }
        if (!state_valid(w)) bad.emplace_back(ii, jj);
        star.at(i, j) = w;
      }
    }
    if (bad.empty()) break;
    if (attempt >= 8) return false;
    for (auto [ii, jj] : bad) demote(ii, jj);
  }
  if (compact)
    for (int jj = 0; jj < nyi; ++jj) {
      int j = g.dim == 2 ? g.ng + jj : 0;
      for (int ii = 0; ii < g.nx; ++ii) {
        int i = g.ng + ii;
        star.wx[g.index(i, j)] = (1.0 / g.dx) * (face_x(fx1, ii + 1, jj).wmid -
                                                 face_x(fx1, ii, jj).wmid);
        if (g.dim == 2)
          star.wy[g.index(i, j)] = (1.0 / g.dy) * (face_y(fy1, ii, jj + 1).wmid -
                                                   face_y(fy1, ii, jj).wmid);
      }
    }

  sweep(star, bc, time + 0.5 * dt, dt, fx2, fy2);

  // Demoted faces carry df = 0 in both stages, so the combination reduces to
  // the first-order transport dt*F there.
  auto total_phi = [&](const FaceData& s1, const FaceData& s2) {
    return dt * s1.f + dt * dt / 6.0 * s1.df + dt * dt / 3.0 * s2.df;
  };

  FVField next = star;
  for (int attempt = 0;; ++attempt) {
    bad.clear();
    for (int jj = 0; jj < nyi; ++jj) {
      int j = g.dim == 2 ? g.ng + jj : 0;
      for (int ii = 0; ii < g.nx; ++ii) {
        int i = g.ng + ii;
        ConservedState w = field.at(i, j);
        ConservedState phi_l = total_phi(face_x(fx1, ii, jj), face_x(fx2, ii, jj));
        ConservedState phi_r =
            total_phi(face_x(fx1, ii + 1, jj), face_x(fx2, ii + 1, jj));
        w = w - (1.0 / g.dx) * (phi_r - phi_l);
        if (g.dim == 2) {
          ConservedState phi_b = total_phi(face_y(fy1, ii, jj), face_y(fy2, ii, jj));
          ConservedState phi_t =
              total_phi(face_y(fy1, ii, jj + 1), face_y(fy2, ii, jj + 1));
          w = w - (1.0 / g.dy) * (phi_t - phi_b);
        }
        if (!state_valid(w)) bad.emplace_back(ii, jj);
        next.at(i, j) = w;
      }
    }
    if (bad.empty()) break;
    if (attempt >= 8) return false;
    for (auto [ii, jj] : bad) demote(ii, jj);
  }
  if (compact)
    for (int jj = 0; jj < nyi; ++jj) {
      int j = g.dim == 2 ? g.ng + jj : 0;
      for (int ii = 0; ii < g.nx; ++ii) {
        int i = g.ng + ii;
        next.wx[g.index(i, j)] = (1.0 / g.dx) * (face_x(fx2, ii + 1, jj).wmid -
                                                 face_x(fx2, ii, jj).wmid);
        if (g.dim == 2)
          next.wy[g.index(i, j)] = (1.0 / g.dy) * (face_y(fy2, ii, jj + 1).wmid -
                                                   face_y(fy2, ii, jj).wmid);
      }
    }

  if (ledger) {
    ConservedState net{};
    for (int jj = 0; jj < nyi; ++jj) {
      double m = g.dim == 2 ? g.dy : 1.0;
      net = net + m * total_phi(face_x(fx1, g.nx, jj), face_x(fx2, g.nx, jj)) -
            m * total_phi(face_x(fx1, 0, jj), face_x(fx2, 0, jj));
    }
    if (g.dim == 2)
      for (int ii = 0; ii < g.nx; ++ii)
        net = net + g.dx * total_phi(face_y(fy1, ii, g.ny), face_y(fy2, ii, g.ny)) -
              g.dx * total_phi(face_y(fy1, ii, 0), face_y(fy2, ii, 0));
    ledger->net_outflow = ledger->net_outflow + net;
  }

  field = next;
  return true;
}

double GksSolver::step(FVField& field, const BoundarySpec& bc, double time,
                       double dt, FluxLedger* ledger) {
  if (try_step(field, bc, time, dt, ledger)) return dt;
  ++halvings_;
  if (try_step(field, bc, time, 0.5 * dt, ledger)) return 0.5 * dt;
  throw PositivityFailure();
}

}  // namespace kinflow::gks
