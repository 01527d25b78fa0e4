#ifndef KINFLOW_BENCH_REPORT_HPP
#define KINFLOW_BENCH_REPORT_HPP

#include <ostream>
#include <vector>

#include "bench/norms.hpp"
#include "bench/runner.hpp"

namespace kinflow::bench {

struct TableRow {
  int n = 0;
  Norms norms;
  double seconds = 0.0;
  int steps = 0;
};

// Runs a mesh-refinement study against the case's exact solution and
// returns one row per grid.
std::vector<TableRow> convergence_table(const CaseDef& cs, SolverKind solver,
                                        const std::vector<int>& grids,
                                        const RunOptions& opt);

// CSV with columns N,L1,order1,L2,order2,seconds.
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

// 1D profile: x, rho[, reference rho].
void write_profile(std::ostream& os, const RunResult& res,
                   const std::vector<double>* reference = nullptr);

// 2D density grid in gnuplot nonuniform-matrix layout plus the contour
// levels used by the reflection figures (30 levels, 1.5 to 21.5).
void write_contour(std::ostream& os, const RunResult& res);

}  // namespace kinflow::bench

#endif
