#include "spp/config.hpp"

#include <sstream>

#include "spp/graph.hpp"

namespace spp {

SolverConfig SolverConfig::bare() {
  SolverConfig cfg;
  cfg.set_heuristics("");
  return cfg;
}

void SolverConfig::set_heuristics(std::string_view codes) {
  b_cpl = b_sp = b_fi = d_ms = c_dist = c_pl = false;
  std::size_t start = 0;
  while (start <= codes.size()) {
    std::size_t end = codes.find(',', start);
    if (end == std::string_view::npos) end = codes.size();
    const std::string_view code = codes.substr(start, end - start);
    if (code == "b-cpl") {
      b_cpl = true;
    } else if (code == "b-sp") {
      b_sp = true;
    } else if (code == "b-fi") {
      b_fi = true;
    } else if (code == "d-ms") {
      d_ms = true;
    } else if (code == "c-dist") {
      c_dist = true;
    } else if (code == "c-pl") {
      c_pl = true;
    } else if (!code.empty()) {
      throw UsageError("unknown heuristic code '" + std::string(code) + "'");
    }
    start = end + 1;
  }
}

std::string SolverConfig::heuristic_fingerprint() const {
  std::string out;
  auto add = [&](bool on, const char* code) {
    if (!on) return;
    if (!out.empty()) out += '+';
    out += code;
  };
  add(b_cpl, "b-cpl");
  add(b_sp, "b-sp");
  add(b_fi, "b-fi");
  add(d_ms, "d-ms");
  add(c_dist, "c-dist");
  add(c_pl, "c-pl");
  return out.empty() ? "bare" : out;
}

SolverConfig SolverConfig::named(std::string_view name) {
  SolverConfig cfg;
  if (name == "bare") {
    cfg.set_heuristics("");
  } else if (name == "b-sp") {
    cfg.set_heuristics("b-sp");
  } else if (name == "b-cpl") {
    cfg.set_heuristics("b-cpl");
  } else if (name == "b-sp+b-fi") {
    cfg.set_heuristics("b-sp,b-fi");
  } else if (name == "b-sp+c" || name == "b-sp+c-dist+c-pl") {
    cfg.set_heuristics("b-sp,c-dist,c-pl");
  } else if (name == "b-sp+d-ms") {
    cfg.set_heuristics("b-sp,d-ms");
  } else if (name == "b-sp+b-fi+c") {
    cfg.set_heuristics("b-sp,b-fi,c-dist,c-pl");
  } else if (name == "b-sp+b-fi+d-ms") {
    cfg.set_heuristics("b-sp,b-fi,d-ms");
  } else if (name == "b-sp+c+d-ms") {
    cfg.set_heuristics("b-sp,c-dist,c-pl,d-ms");
  } else if (name == "all") {
    cfg.set_heuristics("b-sp,b-fi,d-ms,c-dist,c-pl");
  } else {
    throw UsageError("unknown configuration '" + std::string(name) + "'");
  }
  return cfg;
}

std::vector<std::string> SolverConfig::named_configs() {
  return {"bare",           "b-sp",           "b-cpl",       "b-sp+b-fi", "b-sp+c", "b-sp+d-ms",
          "b-sp+b-fi+c",    "b-sp+b-fi+d-ms", "b-sp+c+d-ms", "all"};
}

}  // namespace spp
