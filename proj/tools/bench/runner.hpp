#ifndef KINFLOW_BENCH_RUNNER_HPP
#define KINFLOW_BENCH_RUNNER_HPP

#include <string>
#include <vector>

#include "bench/cases.hpp"

namespace kinflow::bench {

enum class SolverKind { RkdgP2, RkdgP4, Gks3, Gks5, Cgks5 };

SolverKind solver_by_name(const std::string& name);
std::string solver_name(SolverKind s);

struct RunOptions {
  double cfl = -1.0;         // < 0: family default (DG 0.18/0.08, GKS 0.5)
  int force_linear = -1;     // -1: smooth cases only; 0/1 explicit
  int use_limiter = -1;      // -1: non-smooth cases only; 0/1 explicit
  double t_end = -1.0;       // < 0: case default
  double limiter_gamma_lo = -1.0;  // < 0: case default, then library default
  bool track_defect = false; // per-step conservation audit (costs a sweep)
};

struct RunResult {
  Grid grid;
  std::vector<ConservedState> means;  // interior cells, row-major
  double t_end = 0.0;
  int steps = 0;
  double seconds = 0.0;
  int halvings = 0;              // GKS positivity dt halvings
  long trouble_total = 0;        // DG limiter flags accumulated over stages
  double max_step_defect = 0.0;  // max relative conservation defect per step
  double min_rho = 0.0, max_rho = 0.0;
  // DG runs only: density sampled at 6 Gauss points per direction per cell
  // (row-major cells, x-fastest points), so error norms can integrate the
  // polynomial error rather than just the cell-mean error.
  std::vector<double> rho_q;
};

RunResult run_case(const CaseDef& cs, SolverKind solver, int nx,
                   const RunOptions& opt = {});

}  // namespace kinflow::bench

#endif
