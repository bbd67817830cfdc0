#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spp/config.hpp"
#include "spp/flows.hpp"
#include "spp/model.hpp"

namespace spp {

enum class FailureCondition {
  kNoSubpath,   // a subpath between consecutive entries does not exist
  kTooLong,     // accumulated path length exceeds ell
  kSeparator,   // remaining graph has too few disjoint s-t paths (d-ms)
};

/// Result of one greedy run over the checkpoint lists. Indices are 0-based:
/// `failed_path` is the list index at which the run stopped, and
/// `failed_subpath` the index of the subpath within that list (absent for
/// kSeparator, which fires between paths).
struct GreedyOutcome {
  std::optional<FailureCondition> failure;
  std::size_t failed_path = 0;
  std::optional<std::size_t> failed_subpath;
  /// Completed paths, each as its subpath decomposition.
  std::vector<std::vector<Path>> complete_paths;
  /// Subpaths of the failed path computed before the failure.
  std::vector<Path> partial_subpaths;
  /// The subpath whose length broke the bound (kTooLong only).
  std::optional<Path> overlong_subpath;

  bool succeeded() const { return !failure.has_value(); }

  /// Joined complete paths. Only meaningful on success.
  Solution solution() const;
};

/// Joins consecutive subpaths sharing endpoints into one path.
Path join_subpaths(std::span<const Path> subpaths);

/// Scoped stack of forbidden intervals. Entries pushed by a search node are
/// visible to its later children and popped when the node returns.
class ForbiddenIntervalStore {
 public:
  void push(const ForbiddenInterval& fi) { entries_.push_back(fi); }
  std::size_t size() const { return entries_.size(); }
  void truncate(std::size_t size) { entries_.resize(size); }
  std::span<const ForbiddenInterval> entries() const { return entries_; }

  /// Vertices excluded from subpath `subpath` of list `list`: every x with an
  /// interval (a, b, x) on that list where a sits at or before the subpath's
  /// start and b at or after its end.
  void active_vertices(const CheckpointList& lst, std::size_t list, std::size_t subpath,
                       std::vector<Vertex>& out) const;

  /// True if inserting v at `index` of `lst` would place v between the two
  /// ends of one of the list's intervals for v.
  bool forbids(const CheckpointList& lst, std::size_t list, std::size_t index, Vertex v) const;

 private:
  std::vector<ForbiddenInterval> entries_;
};

/// Per-solve state for the checkpoint-aware greedy. Reuses masks, BFS and
/// flow buffers across search nodes; not thread-safe.
class GreedyRunner {
 public:
  GreedyRunner(const Graph& g, Vertex s, Vertex t);

  /// Vertices hidden from every subpath search and flow computation.
  void set_excluded(std::vector<Vertex> excluded) { excluded_ = std::move(excluded); }

  struct Options {
    /// Test the separator once before the first path (root node only,
    /// when trivial detection is off).
    bool check_initial_separator = false;
    const ForbiddenIntervalStore* intervals = nullptr;
    SolveStats* stats = nullptr;
  };

  GreedyOutcome run(std::span<const CheckpointList> lists, int ell, const SolverConfig& cfg,
                    const Options& opts);

  /// Number of internally disjoint s-t paths once `removed` is deleted,
  /// stopping at `limit`.
  int remaining_disjoint_paths(const VertexMask& removed, int limit);

 private:
  const Graph* graph_;
  Vertex s_;
  Vertex t_;
  BfsWorkspace bfs_;
  SplitDigraph split_;
  VertexMask work_;
  VertexMask used_;
  std::vector<Vertex> scratch_;
  std::vector<Vertex> excluded_;
};

/// Single greedy run on `inst` with the heuristics in `cfg`, no intervals.
GreedyOutcome run_greedy(const SppcInstance& inst, const SolverConfig& cfg);

}  // namespace spp
