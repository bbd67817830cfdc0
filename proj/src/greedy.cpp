#include "spp/greedy.hpp"

#include <algorithm>

namespace spp {

Path join_subpaths(std::span<const Path> subpaths) {
  Path out;
  for (const Path& q : subpaths) {
    auto first = q.vertices.begin();
    if (!out.vertices.empty()) ++first;  // shared endpoint
    out.vertices.insert(out.vertices.end(), first, q.vertices.end());
  }
  return out;
}

Solution GreedyOutcome::solution() const {
  Solution sol;
  for (const auto& subpaths : complete_paths) sol.paths.push_back(join_subpaths(subpaths));
  return sol;
}

void ForbiddenIntervalStore::active_vertices(const CheckpointList& lst, std::size_t list,
                                             std::size_t subpath, std::vector<Vertex>& out) const {
  for (const ForbiddenInterval& fi : entries_) {
    if (fi.list != list) continue;
    const auto pa = lst.position(fi.a);
    const auto pb = lst.position(fi.b);
    if (pa && pb && *pa <= subpath && *pb >= subpath + 1) out.push_back(fi.x);
  }
}

bool ForbiddenIntervalStore::forbids(const CheckpointList& lst, std::size_t list,
                                     std::size_t index, Vertex v) const {
  for (const ForbiddenInterval& fi : entries_) {
    if (fi.list != list || fi.x != v) continue;
    const auto pa = lst.position(fi.a);
    const auto pb = lst.position(fi.b);
    if (pa && pb && *pa < index && *pb >= index) return true;
  }
  return false;
}

GreedyRunner::GreedyRunner(const Graph& g, Vertex s, Vertex t)
    : graph_(&g),
      s_(s),
      t_(t),
      bfs_(g),
      split_(g),
      work_(g.vertex_count()),
      used_(g.vertex_count()) {}

int GreedyRunner::remaining_disjoint_paths(const VertexMask& removed, int limit) {
  return max_disjoint_paths(split_, removed, s_, t_, limit);
}

GreedyOutcome GreedyRunner::run(std::span<const CheckpointList> lists, int ell,
                                const SolverConfig& cfg, const Options& opts) {
  const int k = static_cast<int>(lists.size());
  GreedyOutcome out;
  work_.clear();
  used_.clear();
  for (Vertex v : excluded_) {
    work_.hide(v);
    used_.hide(v);
  }
  for (const CheckpointList& list : lists) {
    for (Vertex v : list.entries()) work_.hide(v);
  }

  auto separator_failure = [&](std::size_t next_path) {
    out.failure = FailureCondition::kSeparator;
    out.failed_path = next_path;
    if (opts.stats) ++opts.stats->dms_fired;
    return out;
  };

  if (cfg.d_ms && opts.check_initial_separator && remaining_disjoint_paths(used_, k) < k) {
    return separator_failure(0);
  }

  // The edge {s, t} can serve only one path.
  bool direct_used = false;
  for (std::size_t i = 0; i < lists.size(); ++i) {
    const CheckpointList& list = lists[i];
    std::size_t length = 0;
    std::vector<Path> subpaths;
    for (std::size_t j = 0; j + 1 < list.size(); ++j) {
      scratch_.clear();
      if (cfg.b_fi && opts.intervals) {
        opts.intervals->active_vertices(list, i, j, scratch_);
        for (Vertex x : scratch_) work_.hide(x);
        if (opts.stats) opts.stats->bfi_masked += scratch_.size();
      }
      auto q = bfs_.shortest_path(work_, list[j], list[j + 1], /*override_endpoints=*/true,
                                  direct_used && list.bare());
      for (Vertex x : scratch_) work_.reveal(x);

      if (!q || length + q->length() > static_cast<std::size_t>(ell)) {
        out.failure = q ? FailureCondition::kTooLong : FailureCondition::kNoSubpath;
        out.failed_path = i;
        out.failed_subpath = j;
        out.partial_subpaths = std::move(subpaths);
        if (q) out.overlong_subpath = std::move(q);
        return out;
      }
      length += q->length();
      for (Vertex v : q->vertices) work_.hide(v);
      subpaths.push_back(std::move(*q));
    }

    for (const Path& q : subpaths) {
      for (Vertex v : q.vertices) work_.reveal(v);
    }
    const Path full = join_subpaths(subpaths);
    if (full.length() == 1) direct_used = true;
    for (Vertex v : full.interior()) {
      work_.hide(v);
      used_.hide(v);
    }
    out.complete_paths.push_back(std::move(subpaths));

    const int need = k - static_cast<int>(i) - 1;
    if (cfg.d_ms && need > 0) {
      const bool remaining_bare =
          std::all_of(lists.begin() + static_cast<std::ptrdiff_t>(i) + 1, lists.end(),
                      [](const CheckpointList& l) { return l.bare(); });
      if ((!cfg.dms_bare_lists_only || remaining_bare) &&
          remaining_disjoint_paths(used_, need) < need) {
        return separator_failure(i + 1);
      }
    }
  }
  return out;
}

GreedyOutcome run_greedy(const SppcInstance& inst, const SolverConfig& cfg) {
  GreedyRunner runner(inst.g(), inst.base.s, inst.base.t);
  for (const auto& list : inst.lists) {
    if (is_list_trivially_too_long(list, inst.base.ell)) {
      throw UsageError("run_greedy: checkpoint list exceeds ell + 1 entries");
    }
  }
  return runner.run(inst.lists, inst.base.ell, cfg, {});
}

}  // namespace spp
