#include <benchmark/benchmark.h>

#include "bench/cases.hpp"
#include "bench/runner.hpp"
#include "kinflow/dg/limiter.hpp"
#include "kinflow/dg/solver.hpp"
#include "kinflow/fv/recon.hpp"
#include "kinflow/gks/flux.hpp"
#include "kinflow/gks/solver.hpp"

namespace {

using namespace kinflow;
using bench::case_by_name;
using bench::init_dg;
using bench::init_fv;
using bench::make_grid;

// Single-point kinetic flux on smooth reconstructed data.
void BM_GksFluxPoint(benchmark::State& state) {
  const bench::CaseDef& cs = case_by_name("advect1d");
  Grid g = make_grid(cs, 64);
  GasModel model{1.4, 1};
  FVField f = init_fv(cs, g, false);
  fill_ghosts(f, cs.bc, 0.0);
  fv::ReconOptions opt;
  std::vector<fv::InterfacePoint> pts;
  fv::reconstruct_1d(f, opt, model, pts);
  double dt = 1e-3;
  for (auto _ : state) {
    gks::GksFluxResult r = gks::gks_flux(pts[32], 0.01 * dt, dt, model);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_GksFluxPoint);

void BM_KfvsFluxPoint(benchmark::State& state) {
  GasModel model{1.4, 1};
  ConservedState wl{1.0, 0.3, 0.0, 2.5}, wr{0.8, -0.1, 0.0, 2.1};
  for (auto _ : state) {
    ConservedState r = gks::kfvs_flux(wl, wr, model);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_KfvsFluxPoint);

// Full 1D reconstruction sweep, characteristic nonlinear weights.
void BM_Reconstruct1D(benchmark::State& state, fv::ReconScheme scheme) {
  const bench::CaseDef& cs = case_by_name("shu_osher");
  int n = static_cast<int>(state.range(0));
  Grid g = make_grid(cs, n);
  GasModel model{1.4, 1};
  FVField f = init_fv(cs, g, scheme == fv::ReconScheme::Hweno5);
  fill_ghosts(f, cs.bc, 0.0);
  fv::ReconOptions opt;
  opt.scheme = scheme;
  opt.characteristic = true;
  std::vector<fv::InterfacePoint> pts;
  for (auto _ : state) {
    fv::reconstruct_1d(f, opt, model, pts);
    benchmark::DoNotOptimize(pts.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK_CAPTURE(BM_Reconstruct1D, weno3, fv::ReconScheme::Weno3)->Arg(400);
BENCHMARK_CAPTURE(BM_Reconstruct1D, weno5, fv::ReconScheme::Weno5)->Arg(400);
BENCHMARK_CAPTURE(BM_Reconstruct1D, hweno5, fv::ReconScheme::Hweno5)->Arg(400);

// 2D x-face sweep with the tangential Gauss points.
void BM_Reconstruct2D(benchmark::State& state) {
  const bench::CaseDef& cs = case_by_name("advect2d");
  int n = static_cast<int>(state.range(0));
  Grid g = make_grid(cs, n);
  GasModel model{1.4, 2};
  FVField f = init_fv(cs, g, false);
  fill_ghosts(f, cs.bc, 0.0);
  fv::ReconOptions opt;
  std::vector<fv::InterfacePoint> pts;
  for (auto _ : state) {
    fv::reconstruct_2d(f, Axis::X, opt, model, pts);
    benchmark::DoNotOptimize(pts.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Reconstruct2D)->Arg(40);

// Semi-discrete DG residual evaluation.
void BM_DGResidual(benchmark::State& state, int degree, const char* case_name) {
  const bench::CaseDef& cs = case_by_name(case_name);
  int n = static_cast<int>(state.range(0));
  Grid g = make_grid(cs, n);
  GasModel model{1.4, g.dim};
  dg::DGBasis basis = dg::DGBasis::make(g.dim, degree);
  dg::DGSolution u = init_dg(cs, g, basis);
  dg::DGOperator op(g, basis, model, dg::FluxKind::LaxFriedrichs);
  std::vector<double> dudt;
  for (auto _ : state) {
    op.residual(u, cs.bc, 0.0, dudt);
    benchmark::DoNotOptimize(dudt.data());
  }
  state.SetItemsProcessed(state.iterations() * n * (g.dim == 2 ? n : 1));
}
BENCHMARK_CAPTURE(BM_DGResidual, p2_1d, 2, "advect1d")->Arg(400);
BENCHMARK_CAPTURE(BM_DGResidual, p4_1d, 4, "advect1d")->Arg(400);
BENCHMARK_CAPTURE(BM_DGResidual, p4_2d, 4, "advect2d")->Arg(40);

// Detector plus hierarchical limiting on discontinuous data.
void BM_LimiterApply(benchmark::State& state) {
  const bench::CaseDef& cs = case_by_name("sod");
  int n = static_cast<int>(state.range(0));
  Grid g = make_grid(cs, n);
  GasModel model{1.4, 1};
  dg::DGBasis basis = dg::DGBasis::make(1, 2);
  dg::DGSolution u0 = init_dg(cs, g, basis);
  dg::MultiresLimiter limiter(g, basis, model);
  for (auto _ : state) {
    dg::DGSolution u = u0;
    limiter.apply(u, cs.bc, 0.0);
    benchmark::DoNotOptimize(u.coeffs.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_LimiterApply)->Arg(400);

// One full two-stage kinetic step (reconstruction + fluxes + update).
void BM_GksStep(benchmark::State& state, fv::ReconScheme scheme) {
  const bench::CaseDef& cs = case_by_name("advect1d");
  int n = static_cast<int>(state.range(0));
  Grid g = make_grid(cs, n);
  GasModel model{1.4, 1};
  gks::GksConfig cfg;
  cfg.recon.scheme = scheme;
  FVField f0 = init_fv(cs, g, scheme == fv::ReconScheme::Hweno5);
  gks::GksSolver sol(g, model, cfg);
  double dt = sol.timestep(f0);
  for (auto _ : state) {
    FVField f = f0;
    sol.step(f, cs.bc, 0.0, dt);
    benchmark::DoNotOptimize(f.w.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK_CAPTURE(BM_GksStep, weno5, fv::ReconScheme::Weno5)->Arg(400);
BENCHMARK_CAPTURE(BM_GksStep, hweno5, fv::ReconScheme::Hweno5)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
