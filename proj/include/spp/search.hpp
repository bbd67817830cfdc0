#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "spp/config.hpp"
#include "spp/greedy.hpp"
#include "spp/model.hpp"

namespace spp {

enum class Decision { kYes, kNo, kTimeout };

std::string_view to_string(Decision d);

/// A child of a search node: insert `v` into list `list` so that it lands at
/// `index`, between the current entries `before` (at index - 1) and `after`
/// (at index).
struct Candidate {
  std::size_t list = 0;
  std::size_t index = 1;
  Vertex v = 0;
  Vertex before = 0;
  Vertex after = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

enum class PruneReason { kListLength, kCheckpointAdjacency, kShortestPaths };

/// Lazily computed single-source BFS rows, optionally avoiding a fixed set
/// of vertices. Sources must not be excluded.
class DistanceCache {
 public:
  explicit DistanceCache(const Graph& g, VertexMask excluded = {})
      : graph_(&g), excluded_(std::move(excluded)), rows_(g.vertex_count()) {}
  int distance(Vertex u, Vertex v);

 private:
  const Graph* graph_;
  VertexMask excluded_;
  std::vector<std::vector<int>> rows_;
};

/// Vertices other than s and t that lie on no s-t walk of length <= ell,
/// ascending.
std::vector<Vertex> long_walk_vertices(const Graph& g, Vertex s, Vertex t, int ell);

/// Node-level infeasibility tests, in order: list longer than ell + 1, then
/// b-cpl and b-sp when enabled.
std::optional<PruneReason> node_infeasible(const Graph& g, std::span<const CheckpointList> lists,
                                           int ell, const SolverConfig& cfg, DistanceCache& dist);
std::optional<PruneReason> node_infeasible(const SppcInstance& inst, const SolverConfig& cfg);

/// Children for a failed subpath: every greedy-used non-checkpoint vertex,
/// inserted at the failing position.
std::vector<Candidate> branch_fc1(const GreedyOutcome& outcome,
                                  std::span<const CheckpointList> lists, const SolverConfig& cfg,
                                  DistanceCache& dist);

/// Children for an overlong path: for every position up to the failing one,
/// the greedy-used vertices outside that position's own subpath.
std::vector<Candidate> branch_fc2(const GreedyOutcome& outcome,
                                  std::span<const CheckpointList> lists, const SolverConfig& cfg,
                                  DistanceCache& dist);

/// Children for a separator failure: interior vertices of the completed
/// paths, inserted at every position of every remaining list.
std::vector<Candidate> branch_fc3(const GreedyOutcome& outcome,
                                  std::span<const CheckpointList> lists, const SolverConfig& cfg,
                                  DistanceCache& dist);

/// Pushes the interval (before, after, v) for a failed child.
void record_forbidden_interval(ForbiddenIntervalStore& store, const Candidate& cand);

/// Hook for inspecting every search node. Vertex ids are those of the
/// working graph (the reduced graph when preprocessing is on).
struct NodeEvent {
  std::size_t depth = 0;
  std::span<const CheckpointList> lists;
  std::optional<PruneReason> pruned;
  const GreedyOutcome* outcome = nullptr;
  std::span<const Candidate> candidates;
};

struct SearchObserver {
  std::function<void(const NodeEvent&)> on_node;
};

struct SolveResult {
  Decision decision = Decision::kNo;
  std::optional<Solution> witness;
  SolveStats stats;
};

/// Decides the instance: trivial-instance detection on the input graph,
/// graph reduction, then the search tree over checkpoint lists.
SolveResult solve(const SppInstance& inst, const SolverConfig& cfg,
                  const SearchObserver* observer = nullptr);

}  // namespace spp
