#ifndef KINFLOW_BENCH_CASES_HPP
#define KINFLOW_BENCH_CASES_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "kinflow/dg/solution.hpp"
#include "kinflow/field.hpp"

namespace kinflow::bench {

struct UnknownCase : std::runtime_error {
  explicit UnknownCase(const std::string& id)
      : std::runtime_error("unknown case: " + id) {}
};

enum class CaseId {
  Advect1D,
  Advect2D,
  Sod,
  ShuOsher,
  TitarevToro,
  DoubleRarefaction,
  DoubleMach,
};

struct CaseDef {
  CaseId id{};
  std::string name;
  int dim = 1;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  double t_end = 0.0;
  int aspect = 1;  // ny = nx / aspect in 2D
  BoundarySpec bc;
  // Pointwise initial condition (t = 0) and, when available, exact solution.
  std::function<ConservedState(double x, double y)> init;
  std::function<ConservedState(double x, double y, double t)> exact;  // may be null
  bool smooth = false;  // accuracy-study case (limiter off, linear weights)
  // DG limiter lower-degree weight for this case (< 0: library default).
  // The multi-resolution limiter trades robustness against smearing of
  // smooth extrema; strong-shock cases want a heavy weight, shock-acoustic
  // cases a light one.
  double limiter_gamma_lo = -1.0;
};

const CaseDef& case_by_name(const std::string& name);

// Exact cell means of the initial condition (6-point Gauss per direction).
FVField init_fv(const CaseDef& cs, const Grid& grid, bool slopes);

// L2 projection of the initial condition.
dg::DGSolution init_dg(const CaseDef& cs, const Grid& grid, const dg::DGBasis& basis);

Grid make_grid(const CaseDef& cs, int nx);

}  // namespace kinflow::bench

#endif
