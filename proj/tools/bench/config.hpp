#ifndef KINFLOW_BENCH_CONFIG_HPP
#define KINFLOW_BENCH_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace kinflow::bench {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct ValidationError : std::runtime_error {
  std::string key;
  explicit ValidationError(const std::string& key_, const std::string& why = "unknown key")
      : std::runtime_error(why + ": " + key_), key(key_) {}
};

// Fully-resolved run configuration assembled from a flat key=value file plus
// command-line overrides (same syntax). Unknown keys are rejected by name.
struct RunConfig {
  std::string case_name = "advect1d";
  std::string solver = "rkdg_p2";
  int n = 100;
  std::vector<int> grids;      // table mode; empty -> {n}
  double cfl = -1.0;
  double t_end = -1.0;
  int force_linear = -1;       // -1 auto, 0 off, 1 on
  int use_limiter = -1;
  std::string output = "";     // output path ("" -> stdout)
  int threads = 0;             // 0 -> hardware default
};

// Parses `path` (may be empty) then applies key=value overrides in order.
RunConfig parse_config(const std::string& path,
                       const std::vector<std::string>& overrides);

}  // namespace kinflow::bench

#endif
