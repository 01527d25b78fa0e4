#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bench/config.hpp"
#include "bench/reference.hpp"
#include "bench/report.hpp"
#include "kinflow/parallel.hpp"

using namespace kinflow;
using namespace kinflow::bench;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct OutputTarget {
  std::ofstream file;
  std::ostream& open(const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::ios_base::failure("cannot open output: " + path);
    return file;
  }
};

RunOptions options_of(const RunConfig& cfg) {
  RunOptions opt;
  opt.cfl = cfg.cfl;
  opt.t_end = cfg.t_end;
  opt.force_linear = cfg.force_linear;
  opt.use_limiter = cfg.use_limiter;
  return opt;
}

int do_run(const RunConfig& cfg) {
  const CaseDef& cs = case_by_name(cfg.case_name);
  RunOptions opt = options_of(cfg);
  RunResult res = run_case(cs, solver_by_name(cfg.solver), cfg.n, opt);
  OutputTarget out;
  std::ostream& os = out.open(cfg.output);
  if (cs.dim == 1) {
    if (cs.id == CaseId::ShuOsher || cs.id == CaseId::TitarevToro) {
      std::vector<double> ref = reference_profile(cs);
      write_profile(os, res, &ref);
    } else {
      write_profile(os, res);
    }
  } else {
    write_contour(os, res);
  }
  std::cerr << cfg.case_name << " " << cfg.solver << " n=" << cfg.n
            << " steps=" << res.steps << " t=" << res.t_end
            << " rho=[" << res.min_rho << "," << res.max_rho << "]"
            << " wall=" << res.seconds << "s";
  if (res.halvings) std::cerr << " dt_halvings=" << res.halvings;
  if (res.trouble_total) std::cerr << " trouble_flags=" << res.trouble_total;
  std::cerr << "\n";
  return 0;
}

int do_table(const RunConfig& cfg) {
  const CaseDef& cs = case_by_name(cfg.case_name);
  if (!cs.exact) throw ValidationError(cfg.case_name, "case has no exact solution");
  std::vector<TableRow> rows =
      convergence_table(cs, solver_by_name(cfg.solver), cfg.grids, options_of(cfg));
  OutputTarget out;
  write_table_csv(out.open(cfg.output), rows);
  return 0;
}

int do_bench(const RunConfig& cfg, const std::string& solvers_csv) {
  const CaseDef& cs = case_by_name(cfg.case_name);
  OutputTarget out;
  std::ostream& os = out.open(cfg.output);
  os << "solver,N,steps,seconds,dof_per_var\n";
  std::stringstream ss(solvers_csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    SolverKind sk = solver_by_name(name);
    RunOptions opt = options_of(cfg);
    RunResult res = run_case(cs, sk, cfg.n, opt);
    long cells = static_cast<long>(res.grid.nx) * (res.grid.dim == 2 ? res.grid.ny : 1);
    long dof = cells;
    if (sk == SolverKind::RkdgP2) dof *= res.grid.dim == 2 ? 6 : 3;
    if (sk == SolverKind::RkdgP4) dof *= res.grid.dim == 2 ? 15 : 5;
    if (sk == SolverKind::Cgks5) dof *= res.grid.dim == 2 ? 3 : 2;
    os << name << "," << cfg.n << "," << res.steps << "," << res.seconds << ","
       << dof << "\n";
  }
  return 0;
}

int do_reference(const RunConfig& cfg) {
  const CaseDef& cs = case_by_name(cfg.case_name);
  bool cached = false;
  std::vector<double> ref = reference_profile(cs, cfg.n > 0 ? cfg.n : 10000, &cached);
  std::cerr << "reference " << cfg.case_name << " n=" << ref.size()
            << (cached ? " (cache hit)" : " (generated)") << " at "
            << cache_path(cs, static_cast<int>(ref.size())) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structured-mesh Euler solver suite: high-order DG and kinetic-flux finite-volume schemes"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string solvers_csv = "rkdg_p2,cgks5";
  int threads = 0;

  app.add_option("--threads", threads, "worker thread count (0 = hardware)");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value config file");
    sub->add_option("overrides", overrides, "key=value overrides");
  };
  CLI::App* run = app.add_subcommand("run", "run one case and write its profile");
  add_common(run);
  CLI::App* table = app.add_subcommand("table", "mesh-refinement error/order table");
  add_common(table);
  CLI::App* bench = app.add_subcommand("bench", "wall-clock comparison across solvers");
  add_common(bench);
  bench->add_option("--solvers", solvers_csv, "comma-separated solver list");
  CLI::App* reference = app.add_subcommand("reference", "generate/refresh a cached reference profile");
  add_common(reference);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = parse_config(config_path, overrides);
    if (threads > 0) set_thread_count(threads);
    else if (cfg.threads > 0) set_thread_count(cfg.threads);
    if (run->parsed()) return do_run(cfg);
    if (table->parsed()) return do_table(cfg);
    if (bench->parsed()) return do_bench(cfg, solvers_csv);
    if (reference->parsed()) return do_reference(cfg);
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnknownCase& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  }
  return 0;
}
