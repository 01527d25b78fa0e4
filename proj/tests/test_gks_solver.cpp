#include <doctest.h>

#include <cmath>

#include "kinflow/gks/solver.hpp"

using namespace kinflow;
using namespace kinflow::gks;

namespace {

constexpr double kPi = 3.14159265358979323846;

ConservedState total(const FVField& f) {
  const Grid& g = f.grid;
  ConservedState s{};
  for (int j = (g.dim == 2 ? g.ng : 0); j < (g.dim == 2 ? g.ng + g.ny : 1); ++j)
    for (int i = g.ng; i < g.ng + g.nx; ++i) s = s + f.at(i, j);
  return g.cell_volume() * s;
}

void init_sine(FVField& f) {
  const Grid& g = f.grid;
  for (int i = g.ng; i < g.ng + g.nx; ++i) {
    double rho = 1.0 + 0.2 * std::sin(2.0 * kPi * g.x_center(i));
    ConservedState w;
    w.rho = rho;
    w.mom_x = rho;
    w.energy = 1.0 / 0.4 + 0.5 * rho;
    f.at(i) = w;
    if (f.has_slopes) {
      double dr = 0.4 * kPi * std::cos(2.0 * kPi * g.x_center(i));
      f.wx[g.index(i, 0)] = {dr, dr, 0.0, 0.5 * dr};
    }
  }
}

}  // namespace

TEST_CASE("uniform field is a fixed point of the S2O4 update") {
  for (auto scheme : {fv::ReconScheme::Weno5, fv::ReconScheme::Hweno5}) {
    Grid g = Grid::make_1d(0.0, 1.0, 16);
    FVField f(g, scheme == fv::ReconScheme::Hweno5);
    ConservedState w{1.0, 0.3, 0.0, 2.5};
    for (auto& c : f.w) c = w;
    GksConfig cfg;
    cfg.recon.scheme = scheme;
    GksSolver solver(g, GasModel{1.4, 1}, cfg);
    double dt = solver.timestep(f);
    solver.step(f, BoundarySpec::periodic(), 0.0, dt);
    for (int i = g.ng; i < g.ng + g.nx; ++i)
      for (int v = 0; v < 4; ++v)
        CHECK(f.at(i)[v] == doctest::Approx(w[v]).epsilon(1e-11));
  }
}

TEST_CASE("periodic steps conserve mass, momentum and energy to roundoff") {
  for (auto scheme :
       {fv::ReconScheme::Weno3, fv::ReconScheme::Weno5, fv::ReconScheme::Hweno5}) {
    Grid g = Grid::make_1d(0.0, 1.0, 40);
    FVField f(g, scheme == fv::ReconScheme::Hweno5);
    init_sine(f);
    GksConfig cfg;
    cfg.recon.scheme = scheme;
    cfg.recon.characteristic = true;
    GksSolver solver(g, GasModel{1.4, 1}, cfg);
    ConservedState before = total(f);
    FluxLedger ledger;
    double t = 0.0;
    for (int n = 0; n < 5; ++n) t += solver.step(f, BoundarySpec::periodic(), t, solver.timestep(f), &ledger);
    ConservedState after = total(f);
    for (int v = 0; v < 4; ++v) {
      CHECK(std::abs(after[v] - before[v]) < 1e-13);
      CHECK(std::abs(ledger.net_outflow[v]) < 1e-13);
    }
    CHECK(solver.halvings() == 0);
  }
}

TEST_CASE("open boundaries balance the interior change against the ledger") {
  Grid g = Grid::make_1d(0.0, 1.0, 50);
  FVField f(g);
  // Sod tube: the boundary fluxes account exactly for what leaves.
  for (int i = 0; i < g.sx(); ++i) {
    bool left = g.x_center(i) < 0.5;
    ConservedState w;
    w.rho = left ? 1.0 : 0.125;
    w.energy = (left ? 1.0 : 0.1) / 0.4;
    f.at(i) = w;
  }
  BoundarySpec bc;
  bc.side[0].kind = BoundaryKind::NonReflecting;
  bc.side[1].kind = BoundaryKind::NonReflecting;
  GksConfig cfg;
  cfg.recon.scheme = fv::ReconScheme::Weno5;
  cfg.recon.characteristic = true;
  GksSolver solver(g, GasModel{1.4, 1}, cfg);
  ConservedState before = total(f);
  FluxLedger ledger;
  double t = 0.0;
  for (int n = 0; n < 10; ++n)
    t += solver.step(f, bc, t, solver.timestep(f), &ledger);
  ConservedState after = total(f);
  for (int v = 0; v < 4; ++v)
    CHECK(std::abs((after[v] - before[v]) + ledger.net_outflow[v]) < 1e-12);
}

TEST_CASE("2D periodic conservation") {
  for (auto scheme : {fv::ReconScheme::Weno5, fv::ReconScheme::Hweno5}) {
    Grid g = Grid::make_2d(0.0, 1.0, 0.0, 1.0, 12, 10);
    FVField f(g, scheme == fv::ReconScheme::Hweno5);
    for (int j = 0; j < g.sy(); ++j)
      for (int i = 0; i < g.sx(); ++i) {
        double rho = 1.0 + 0.2 * std::sin(2.0 * kPi * (g.x_center(i) + g.y_center(j)));
        ConservedState w;
        w.rho = rho;
        w.mom_x = rho;
        w.mom_y = 0.5 * rho;
        w.energy = 1.0 / 0.4 + 0.5 * rho * 1.25;
        f.at(i, j) = w;
        if (f.has_slopes) {
          double dr = 0.4 * kPi * std::cos(2.0 * kPi * (g.x_center(i) + g.y_center(j)));
          f.wx[g.index(i, j)] = {dr, dr, 0.5 * dr, 0.625 * dr};
          f.wy[g.index(i, j)] = {dr, dr, 0.5 * dr, 0.625 * dr};
        }
      }
    GksConfig cfg;
    cfg.recon.scheme = scheme;
    GksSolver solver(g, GasModel{1.4, 2}, cfg);
    ConservedState before = total(f);
    FluxLedger ledger;
    double t = 0.0;
    for (int n = 0; n < 3; ++n)
      t += solver.step(f, BoundarySpec::periodic(), t, solver.timestep(f), &ledger);
    ConservedState after = total(f);
    for (int v = 0; v < 4; ++v) {
      CHECK(std::abs(after[v] - before[v]) < 1e-12);
      CHECK(std::abs(ledger.net_outflow[v]) < 1e-12);
    }
  }
}
