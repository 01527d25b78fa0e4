#ifndef KINFLOW_BENCH_EXACT_RIEMANN_HPP
#define KINFLOW_BENCH_EXACT_RIEMANN_HPP

#include <stdexcept>

#include "kinflow/euler.hpp"

namespace kinflow::bench {

struct RiemannFailure : std::runtime_error {
  explicit RiemannFailure(const char* what) : std::runtime_error(what) {}
};

// 1D primitive triple for the Riemann problem.
struct RP {
  double rho = 0.0, u = 0.0, p = 0.0;
};

struct StarState {
  double p = 0.0, u = 0.0;
  bool vacuum = false;
};

// Star-region pressure/velocity via Newton iteration on the pressure
// function; detects vacuum formation (pressure positivity condition).
StarState solve_star(const RP& l, const RP& r, double gamma);

// Self-similar solution sampled at xi = x/t, including the vacuum fan
// branch for strong double rarefactions.
RP sample(const RP& l, const RP& r, double gamma, double xi);

}  // namespace kinflow::bench

#endif
