#include "bench/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace kinflow::bench {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw ValidationError(key, "not a boolean (" + v + ")");
}

std::vector<int> parse_grids(const std::string& key, const std::string& v) {
  // "20..640" doubles from 20 to 640; "20,40,80" lists explicitly.
  std::vector<int> out;
  size_t dots = v.find("..");
  if (dots != std::string::npos) {
    int lo = std::stoi(v.substr(0, dots));
    int hi = std::stoi(v.substr(dots + 2));
    if (lo <= 0 || hi < lo) throw ValidationError(key, "bad grid range");
    for (int n = lo; n <= hi; n *= 2) out.push_back(n);
    return out;
  }
  std::stringstream ss(v);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(trim(tok)));
  if (out.empty()) throw ValidationError(key, "empty grid list");
  return out;
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
  try {
    if (key == "case") cfg.case_name = value;
    else if (key == "solver") cfg.solver = value;
    else if (key == "n") cfg.n = std::stoi(value);
    else if (key == "grids") cfg.grids = parse_grids(key, value);
    else if (key == "cfl" || key == "time.cfl") cfg.cfl = std::stod(value);
    else if (key == "t_end") cfg.t_end = std::stod(value);
    else if (key == "recon.force_linear") cfg.force_linear = parse_bool(key, value);
    else if (key == "limiter") cfg.use_limiter = parse_bool(key, value);
    else if (key == "output") cfg.output = value;
    else if (key == "threads") cfg.threads = std::stoi(value);
    else throw ValidationError(key);
  } catch (const std::invalid_argument&) {
    throw ValidationError(key, "bad value (" + value + ")");
  } catch (const std::out_of_range&) {
    throw ValidationError(key, "value out of range (" + value + ")");
  }
}

}  // namespace

RunConfig parse_config(const std::string& path,
                       const std::vector<std::string>& overrides) {
  RunConfig cfg;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
      ++ln;
      std::string s = trim(line);
      if (s.empty() || s[0] == '#') continue;
      size_t eq = s.find('=');
      if (eq == std::string::npos) throw ParseError(ln, "expected key=value: " + s);
      apply(cfg, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
  }
  for (const std::string& ov : overrides) {
    size_t eq = ov.find('=');
    if (eq == std::string::npos)
      throw ValidationError(ov, "override is not key=value");
    apply(cfg, trim(ov.substr(0, eq)), trim(ov.substr(eq + 1)));
  }
  if (cfg.grids.empty()) cfg.grids = {cfg.n};
  return cfg;
}

}  // namespace kinflow::bench
