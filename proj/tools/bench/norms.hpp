#ifndef KINFLOW_BENCH_NORMS_HPP
#define KINFLOW_BENCH_NORMS_HPP

#include <vector>

#include "bench/cases.hpp"

namespace kinflow::bench {

struct Norms {
  double l1 = 0.0, l2 = 0.0, linf = 0.0;
};

// Cell-mean error norms of the density against the exact solution at time t:
// L1 = (1/N) sum |e_i|, L2 = sqrt((1/N) sum e_i^2). Exact cell means via
// 6-point Gauss. Summation order is fixed (row-major) for reproducibility.
Norms error_norms(const Grid& grid, const std::vector<ConservedState>& means,
                  const CaseDef& cs, double t);

// Error norms of a sampled polynomial solution (6 Gauss points per direction
// per cell, as produced by DG runs): the within-cell error is integrated, so
// L1 = (1/|domain|) integral |rho_h - rho|.
Norms error_norms_q(const Grid& grid, const std::vector<double>& rho_q,
                    const CaseDef& cs, double t);

// Norms of the difference from a reference curve given as fine-grid density
// means; the fine grid must be an integer refinement of `grid`.
Norms error_vs_reference(const Grid& grid, const std::vector<ConservedState>& means,
                         const std::vector<double>& fine_rho);

// log2(e_coarse / e_fine) per mesh doubling.
double order_of(double coarse, double fine);

}  // namespace kinflow::bench

#endif
