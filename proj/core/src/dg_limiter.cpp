#include "kinflow/dg/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#include "kinflow/parallel.hpp"

namespace kinflow::dg {

int TroubleMask::count() const {
  int c = 0;
  for (char f : flag) c += f != 0;
  return c;
}

MultiresLimiter::MultiresLimiter(const Grid& grid, const DGBasis& basis,
                                 const GasModel& model, const LimiterConfig& config)
    : grid_(grid), basis_(basis), model_(model), cfg_(config) {
  nq_ = basis_.degree + 1;
  rule_ = gauss_rule(nq_);
  detector_r_ = basis_.degree == 1 ? 1.0 : 1.5;
  h_cell_ = grid_.dim == 1
                ? 0.5 * grid_.dx
                : 0.5 * std::sqrt(grid_.dx * grid_.dx + grid_.dy * grid_.dy);

  // Gram matrices of reference-coordinate derivatives for the smoothness
  // indicators: beta = sum_alpha scale_alpha * c^T G_alpha c. The scale
  // carries the (dx dy)^{|alpha|-1} weighting of the physical-space integral;
  // in 1D the matching weight dx^{2|alpha|-1} makes every term dimensionless,
  // so scale == 1.
  int k = basis_.degree;
  int nm = basis_.n_modes;
  for (int ax = 0; ax <= k; ++ax)
    for (int ay = 0; ay <= (grid_.dim == 2 ? k - ax : 0); ++ay) {
      if (ax + ay < 1) continue;
      DerivTerm term;
      term.order = ax + ay;
      term.scale = grid_.dim == 1
                       ? 1.0
                       : std::pow(grid_.dx, term.order - 2.0 * ax) *
                             std::pow(grid_.dy, term.order - 2.0 * ay);
      term.gram.assign(static_cast<size_t>(nm) * nm, 0.0);
      for (int m = 0; m < nq_; ++m)
        for (int n = 0; n < (grid_.dim == 2 ? nq_ : 1); ++n) {
          double w = rule_.weights[m] * (grid_.dim == 2 ? rule_.weights[n] : 1.0);
          double s = rule_.nodes[m], t = grid_.dim == 2 ? rule_.nodes[n] : 0.0;
          for (int l = 0; l < nm; ++l) {
            double dl = basis_.eval(l, s, t, ax, ay);
            if (dl == 0.0) continue;
            for (int r = 0; r < nm; ++r)
              term.gram[static_cast<size_t>(l) * nm + r] +=
                  w * dl * basis_.eval(r, s, t, ax, ay);
          }
        }
      deriv_terms_.push_back(std::move(term));
    }

  int ne = grid_.dim == 2 ? nq_ : 1;
  for (int side = 0; side < 4; ++side) {
    trace_[side].resize(static_cast<size_t>(nm) * ne);
    for (int l = 0; l < nm; ++l)
      for (int e = 0; e < ne; ++e) {
        double n = grid_.dim == 2 ? rule_.nodes[e] : 0.0;
        double s = side == 0 ? -0.5 : side == 1 ? 0.5 : n;
        double t = side == 2 ? -0.5 : side == 3 ? 0.5 : n;
        trace_[side][static_cast<size_t>(l) * ne + e] = basis_.eval(l, s, t);
      }
  }
}

double MultiresLimiter::beta(const double* coeff, int kappa) const {
  int nm = basis_.n_modes;
  double b = 0.0;
  for (const DerivTerm& term : deriv_terms_) {
    if (term.order > kappa) continue;
    double q = 0.0;
    for (int l = 0; l < nm; ++l) {
      if (coeff[l] == 0.0) continue;
      const double* row = term.gram.data() + static_cast<size_t>(l) * nm;
      double acc = 0.0;
      for (int r = 0; r < nm; ++r) acc += row[r] * coeff[r];
      q += coeff[l] * acc;
    }
    b += term.scale * q;
  }
  return b;
}

TroubleMask MultiresLimiter::detect(const DGSolution& u) const {
  const Grid& g = grid_;
  TroubleMask mask;
  mask.nx = g.nx;
  mask.ny = g.dim == 2 ? g.ny : 1;
  mask.flag.assign(static_cast<size_t>(mask.nx) * mask.ny, 0);

  const int vars[2] = {0, 3};
  const bool use[2] = {cfg_.detect_density, cfg_.detect_energy};
  double hr = std::pow(h_cell_, detector_r_);

  parallel_for(0, mask.ny, [&](int jj) {
    int j = g.dim == 2 ? g.ng + jj : 0;
    for (int ii = 0; ii < g.nx; ++ii) {
      int i = g.ng + ii;
      ConservedState mean = u.cell_mean(i, j);
      double ux = mean.mom_x / mean.rho;
      double uy = mean.mom_y / mean.rho;

      // Side order L,R,B,T; outward normal component of the mean velocity.
      struct Side { int di, dj; double vn, measure; };
      Side sides[4] = {{-1, 0, -ux, g.dim == 2 ? g.dy : 1.0},
                       {1, 0, ux, g.dim == 2 ? g.dy : 1.0},
                       {0, -1, -uy, g.dx},
                       {0, 1, uy, g.dx}};
      int nsides = g.dim == 2 ? 4 : 2;

      for (int v = 0; v < 2; ++v) {
        if (!use[v]) continue;
        int var = vars[v];
        double jump = 0.0, inflow_len = 0.0;
        double norm = std::numeric_limits<double>::max();
        for (int sd = 0; sd < nsides; ++sd) {
          const Side& side = sides[sd];
          bool inflow = side.vn < 0.0;
          if (inflow) inflow_len += side.measure;
          int ne = g.dim == 2 ? nq_ : 1;
          static constexpr int kOpposite[4] = {1, 0, 3, 2};
          const double* tself = trace_[sd].data();
          const double* tnb = trace_[kOpposite[sd]].data();
          const double* c = u.cell(i, j);
          const double* cn = u.cell(i + side.di, j + side.dj);
          for (int e = 0; e < ne; ++e) {
            double self = 0.0, other = 0.0;
            for (int l = 0; l < basis_.n_modes; ++l) {
              self += c[l * 4 + var] * tself[static_cast<size_t>(l) * ne + e];
              other += cn[l * 4 + var] * tnb[static_cast<size_t>(l) * ne + e];
            }
            norm = std::min(norm, std::abs(self));
            if (inflow) {
              double w = g.dim == 2 ? rule_.weights[e] * side.measure : 1.0;
              jump += w * (self - other);
            }
          }
        }
        if (inflow_len == 0.0) continue;
        double aj = std::abs(jump);
        bool flagged;
        if (norm < 1e-13)
          flagged = aj >= 1e-13;
        else
          flagged = aj >= cfg_.ck * hr * inflow_len * norm;
        if (flagged) {
          mask.flag[static_cast<size_t>(jj) * mask.nx + ii] = 1;
          break;
        }
      }
    }
  });
  return mask;
}

void MultiresLimiter::limit_cell(DGSolution& u, const DGSolution& snap, int i,
                                 int j) const {
  const Grid& g = grid_;
  int nm = basis_.n_modes;
  int k = basis_.degree;
  struct Face { int di, dj; Axis axis; };
  Face faces[4] = {{-1, 0, Axis::X}, {1, 0, Axis::X}, {0, -1, Axis::Y}, {0, 1, Axis::Y}};
  int nfaces = g.dim == 2 ? 4 : 2;

  const double* c0 = snap.cell(i, j);
  ConservedState mean = snap.cell_mean(i, j);

  std::vector<double> acc(static_cast<size_t>(nm) * 4, 0.0);
  std::vector<double> cvec(nm), low(nm), hi(nm), nbvec(nm);

  for (int f = 0; f < nfaces; ++f) {
    const Face& face = faces[f];
    ConservedState nb_mean = snap.cell_mean(i + face.di, j + face.dj);
    EigenSystem es = eigen_system(mean, nb_mean, face.axis, model_);

    for (int field = 0; field < 4; ++field) {
      const auto& L = es.left[field];
      for (int l = 0; l < nm; ++l)
        cvec[l] = L[0] * c0[l * 4] + L[1] * c0[l * 4 + 1] + L[2] * c0[l * 4 + 2] +
                  L[3] * c0[l * 4 + 3];

      // beta_{0,1}: smallest degree-1 gradient indicator among the face
      // neighbors, each projected into this face's characteristic frame.
      double sigma_min = std::numeric_limits<double>::max();
      for (int nf = 0; nf < nfaces; ++nf) {
        const double* cn = snap.cell(i + faces[nf].di, j + faces[nf].dj);
        std::fill(nbvec.begin(), nbvec.end(), 0.0);
        for (int l = 0; l < nm; ++l) {
          if (basis_.total_degree(l) != 1) continue;
          nbvec[l] = L[0] * cn[l * 4] + L[1] * cn[l * 4 + 1] +
                     L[2] * cn[l * 4 + 2] + L[3] * cn[l * 4 + 3];
        }
        sigma_min = std::min(sigma_min, beta(nbvec.data(), 1));
      }

      std::fill(low.begin(), low.end(), 0.0);
      low[0] = cvec[0];
      for (int l2 = 1; l2 <= k; ++l2) {
        for (int l = 0; l < nm; ++l) {
          double q = basis_.total_degree(l) <= l2 ? cvec[l] : 0.0;
          hi[l] = (q - cfg_.gamma_lo * low[l]) / cfg_.gamma_hi;
        }
        double bhi = beta(hi.data(), l2);
        double blo = l2 == 1 ? sigma_min : beta(low.data(), l2 - 1);
        double tau = (bhi - blo) * (bhi - blo);
        double wlo = cfg_.gamma_lo * (1.0 + tau / (cfg_.epsilon + blo));
        double whi = cfg_.gamma_hi * (1.0 + tau / (cfg_.epsilon + bhi));
        double ws = wlo + whi;
        wlo /= ws;
        whi /= ws;
        for (int l = 0; l < nm; ++l) low[l] = wlo * low[l] + whi * hi[l];
      }

      const auto& es_right = es.right;
      for (int l = 0; l < nm; ++l)
        for (int v = 0; v < 4; ++v)
          acc[static_cast<size_t>(l) * 4 + v] += es_right[v][field] * low[l];
    }
  }

  double* out = u.cell(i, j);
  double inv = 1.0 / nfaces;
  for (int l = 0; l < nm; ++l)
    for (int v = 0; v < 4; ++v) out[l * 4 + v] = inv * acc[static_cast<size_t>(l) * 4 + v];
  // The characteristic round trip is exact only to rounding; pin the mean.
  for (int v = 0; v < 4; ++v) out[v] = mean[v];
}

void MultiresLimiter::limit(DGSolution& u, const TroubleMask& mask) const {
  if (mask.count() == 0) return;
  const Grid& g = grid_;
  DGSolution snap = u;
  parallel_for(0, mask.ny, [&](int jj) {
    int j = g.dim == 2 ? g.ng + jj : 0;
    for (int ii = 0; ii < g.nx; ++ii)
      if (mask.at(ii, jj)) limit_cell(u, snap, g.ng + ii, j);
  });
}

void MultiresLimiter::apply(DGSolution& u, const BoundarySpec& bc, double time) const {
  fill_ghosts(u, bc, time);
  last_mask_ = detect(u);
  limit(u, last_mask_);
}

void enforce_positivity(DGSolution& u, const GasModel& model, double eps) {
  const Grid& g = u.grid;
  const DGBasis& b = u.basis;

  // Node set: 6-point Gauss tensor padded with the cell edges, so both the
  // volume and the face quadratures of the residual are covered.
  QuadratureRule q = gauss_rule(6);
  std::vector<double> nodes;
  nodes.push_back(-0.5);
  for (int a = 0; a < q.size(); ++a) nodes.push_back(q.nodes[a]);
  nodes.push_back(0.5);
  int nn = static_cast<int>(nodes.size());

  auto pressure_of = [&](const ConservedState& w) {
    return (model.gamma - 1.0) *
           (w.energy - 0.5 * (w.mom_x * w.mom_x + w.mom_y * w.mom_y) / w.rho);
  };

  int nyi = g.dim == 2 ? g.ny : 1;
  for (int jj = 0; jj < nyi; ++jj) {
    int j = g.dim == 2 ? g.ng + jj : 0;
    for (int ii = 0; ii < g.nx; ++ii) {
      int i = g.ng + ii;
      double* c = u.cell(i, j);
      ConservedState m = u.cell_mean(i, j);
      if (!(m.rho > eps) || !(pressure_of(m) > eps)) continue;

      auto for_nodes = [&](auto&& fn) {
        int nt = g.dim == 2 ? nn : 1;
        for (int bb = 0; bb < nt; ++bb)
          for (int aa = 0; aa < nn; ++aa)
            fn(u.eval(i, j, nodes[aa], g.dim == 2 ? nodes[bb] : 0.0));
      };

      // Density first: scale so the minimum clears eps.
      double rho_min = m.rho;
      for_nodes([&](const ConservedState& w) { rho_min = std::min(rho_min, w.rho); });
      if (rho_min < eps) {
        double th = (m.rho - eps) / (m.rho - rho_min);
        for (int l = 1; l < b.n_modes; ++l) c[l * 4 + 0] *= th;
      }

      // Pressure: shrink all higher modes together; p is concave along the
      // segment toward the mean, so bisection on the scaling is safe.
      double theta = 1.0;
      for_nodes([&](const ConservedState& w) {
        if (pressure_of(w) > eps) return;
        double lo = 0.0, hi = theta;
        for (int it = 0; it < 60; ++it) {
          double mid = 0.5 * (lo + hi);
          ConservedState ws = m + mid * (w - m);
          (pressure_of(ws) > eps ? lo : hi) = mid;
        }
        theta = std::min(theta, lo);
      });
      if (theta < 1.0)
        for (int l = 1; l < b.n_modes; ++l)
          for (int v = 0; v < 4; ++v) c[l * 4 + v] *= theta;
    }
  }
}

StageHook make_limiter_hook(const MultiresLimiter& limiter, const BoundarySpec& bc) {
  return [&limiter, bc](DGSolution& u, double time) { limiter.apply(u, bc, time); };
}

}  // namespace kinflow::dg
