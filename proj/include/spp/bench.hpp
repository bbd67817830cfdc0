#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spp/config.hpp"
#include "spp/search.hpp"

namespace spp {

struct BenchOptions {
  std::vector<std::string> graphs;
  std::size_t pairs = 10;
  int k_min = 2;
  int k_max = 3;
  int ell_min = 5;
  int ell_max = 7;
  std::vector<std::string> configs = SolverConfig::named_configs();
  bool preprocess = true;
  bool trivial_detection = true;
  std::optional<bool> dms_bare_lists_only;
  std::optional<std::int64_t> timeout_ms;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

/// One CSV row: a single solve of (graph, s, t, k, ell) under one config.
/// Vertex ids are 1-based. `error` marks a warning row for a graph that
/// could not be read.
struct RunRecord {
  std::string graph;
  Vertex s = 0;
  Vertex t = 0;
  int k = 0;
  int ell = 0;
  std::string config;
  Decision decision = Decision::kNo;
  SolveStats stats;
  std::optional<std::string> error;
};

std::string csv_header();
std::string to_csv(const RunRecord& r);

/// Samples `pairs` vertex pairs at distance 1..10 per graph, then solves
/// every (k, ell) in range under every config, config order shuffled per
/// instance. Rows come back grouped by instance in a fixed order
/// regardless of `jobs`.
std::vector<RunRecord> run_bench(const BenchOptions& opts, std::ostream& warnings);

}  // namespace spp
