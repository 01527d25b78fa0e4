#ifndef KINFLOW_BENCH_REFERENCE_HPP
#define KINFLOW_BENCH_REFERENCE_HPP

#include <string>
#include <vector>

#include "bench/cases.hpp"

namespace kinflow::bench {

// Fine-grid density means for the shock-profile cases, produced by the
// fifth-order kinetic solver and cached on disk (KINFLOW_CACHE_DIR, default
// ./ref_cache). The cache key hashes case name, resolution and final time.
std::vector<double> reference_profile(const CaseDef& cs, int n_cells = 10000,
                                      bool* from_cache = nullptr);

std::string cache_dir();
std::string cache_path(const CaseDef& cs, int n_cells);

}  // namespace kinflow::bench

#endif
