#include "bench/report.hpp"

#include <cstdio>

namespace kinflow::bench {

std::vector<TableRow> convergence_table(const CaseDef& cs, SolverKind solver,
                                        const std::vector<int>& grids,
                                        const RunOptions& opt) {
  std::vector<TableRow> rows;
  for (int n : grids) {
    RunResult res = run_case(cs, solver, n, opt);
    TableRow row;
    row.n = n;
    row.norms = res.rho_q.empty()
                    ? error_norms(res.grid, res.means, cs, res.t_end)
                    : error_norms_q(res.grid, res.rho_q, cs, res.t_end);
    row.seconds = res.seconds;
    row.steps = res.steps;
    rows.push_back(row);
  }
  return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "N,L1,order1,L2,order2,seconds\n";
  char buf[160];
  for (size_t i = 0; i < rows.size(); ++i) {
    double o1 = 0.0, o2 = 0.0;
    if (i > 0) {
      o1 = order_of(rows[i - 1].norms.l1, rows[i].norms.l1);
      o2 = order_of(rows[i - 1].norms.l2, rows[i].norms.l2);
    }
    std::snprintf(buf, sizeof(buf), "%d,%.6e,%.2f,%.6e,%.2f,%.3f\n", rows[i].n,
                  rows[i].norms.l1, o1, rows[i].norms.l2, o2, rows[i].seconds);
    os << buf;
  }
}

void write_profile(std::ostream& os, const RunResult& res,
                   const std::vector<double>* reference) {
  const Grid& g = res.grid;
  int ratio = reference ? static_cast<int>(reference->size()) / g.nx : 0;
  os << "# x rho" << (reference ? " rho_ref\n" : "\n");
  char buf[120];
  for (int i = 0; i < g.nx; ++i) {
    double x = g.x_center(g.ng + i);
    if (reference) {
      double ref = 0.0;
      for (int k = 0; k < ratio; ++k) ref += (*reference)[static_cast<size_t>(i) * ratio + k];
      ref /= ratio;
      std::snprintf(buf, sizeof(buf), "%.8f %.10e %.10e\n", x, res.means[i].rho, ref);
    } else {
      std::snprintf(buf, sizeof(buf), "%.8f %.10e\n", x, res.means[i].rho);
    }
    os << buf;
  }
}

void write_contour(std::ostream& os, const RunResult& res) {
  const Grid& g = res.grid;
  os << "# gnuplot: set view map; set contour; set cntrparam levels incr 1.5,0.69,21.5\n";
  os << "# splot 'file' nonuniform matrix with lines\n";
  os << g.nx;
  for (int i = 0; i < g.nx; ++i) os << ' ' << g.x_center(g.ng + i);
  os << '\n';
  char buf[32];
  for (int j = 0; j < g.ny; ++j) {
    os << g.y_center(g.ng + j);
    for (int i = 0; i < g.nx; ++i) {
      std::snprintf(buf, sizeof(buf), " %.6e",
                    res.means[static_cast<size_t>(j) * g.nx + i].rho);
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace kinflow::bench
