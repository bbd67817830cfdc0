#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spp {

/// Toggles for preprocessing and the search-tree heuristics.
///
///   b_cpl  prune lists whose consecutive entries are too rarely adjacent
///   b_sp   prune lists whose consecutive shortest distances sum past ell
///   b_fi   forbidden intervals from failed siblings
///   d_ms   extra greedy failure when the remaining graph has too few
///          disjoint s-t paths (third branching rule)
///   c_dist order candidates by distance to their insertion neighbors
///   c_pl   order second-rule positions by greedy subpath length
struct SolverConfig {
  bool preprocess = true;
  bool trivial_detection = true;
  bool b_cpl = false;
  bool b_sp = true;
  bool b_fi = true;
  bool d_ms = true;
  bool dms_bare_lists_only = true;
  bool c_dist = true;
  bool c_pl = true;
  /// Ignore vertices v with dist(s, v) + dist(v, t) > ell throughout the
  /// search. No solution path can use them, and skipping them makes the
  /// search identical with and without graph reduction.
  bool short_walk_vertices_only = true;
  std::optional<std::int64_t> timeout_ms;
  std::uint64_t rng_seed = 0;

  /// No search heuristics; preprocessing flags untouched.
  static SolverConfig bare();

  /// Comma-separated heuristic codes from {b-cpl, b-sp, b-fi, d-ms, c-dist,
  /// c-pl}; replaces the heuristic toggles. Throws UsageError on unknown codes.
  void set_heuristics(std::string_view codes);

  /// Enabled heuristic codes joined with '+', or "bare".
  std::string heuristic_fingerprint() const;

  /// Named benchmark configurations: bare, b-sp, b-cpl, b-sp+b-fi,
  /// b-sp+c (alias b-sp+c-dist+c-pl), b-sp+d-ms, b-sp+b-fi+c, b-sp+b-fi+d-ms,
  /// b-sp+c+d-ms, all. Throws UsageError on unknown names.
  static SolverConfig named(std::string_view name);
  static std::vector<std::string> named_configs();
};

/// Counters collected over one solve call.
struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t br1 = 0;
  std::uint64_t br2 = 0;
  std::uint64_t br3 = 0;
  std::uint64_t prunes_len = 0;
  std::uint64_t prunes_bcpl = 0;
  std::uint64_t prunes_bsp = 0;
  std::uint64_t bfi_recorded = 0;
  std::uint64_t bfi_masked = 0;
  std::uint64_t bfi_skipped = 0;
  std::uint64_t dms_fired = 0;
  std::uint64_t max_depth = 0;
  std::string solved_by;  // trivial-yes | trivial-no | greedy | search | timeout
  std::string trivial_rule = "none";
  double wall_ms = 0.0;
  std::size_t n_before = 0;
  std::size_t n_after = 0;
  std::size_t m_before = 0;
  std::size_t m_after = 0;
};

}  // namespace spp
