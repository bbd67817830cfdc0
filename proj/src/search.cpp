#include "spp/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "spp/preprocess.hpp"

namespace spp {

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::kYes:
      return "yes";
    case Decision::kNo:
      return "no";
    case Decision::kTimeout:
      return "timeout";
  }
  return "?";
}

int DistanceCache::distance(Vertex u, Vertex v) {
  auto& row = rows_[u];
  if (row.empty()) row = distances_from(*graph_, excluded_, u);
  return row[v];
}

std::vector<Vertex> long_walk_vertices(const Graph& g, Vertex s, Vertex t, int ell) {
  const auto from_s = distances_from(g, VertexMask(), s);
  const auto from_t = distances_from(g, VertexMask(), t);
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto v = static_cast<Vertex>(i);
    if (v == s || v == t) continue;
    if (from_s[i] == kUnreachable || from_t[i] == kUnreachable ||
        static_cast<long>(from_s[i]) + from_t[i] > ell) {
      out.push_back(v);
    }
  }
  return out;
}

std::optional<PruneReason> node_infeasible(const Graph& g, std::span<const CheckpointList> lists,
                                           int ell, const SolverConfig& cfg,
                                           DistanceCache& dist) {
  for (const CheckpointList& l : lists) {
    if (is_list_trivially_too_long(l, ell)) return PruneReason::kListLength;
  }
  if (cfg.b_cpl) {
    // A path of length <= ell through r + 1 entries leaves at most ell - r
    // spare edges, so at least 2r - ell of the r gaps are single edges.
    const auto threshold = static_cast<std::size_t>(ell / 2 + 1);
    for (const CheckpointList& l : lists) {
      if (l.size() <= threshold) continue;
      const long gaps = static_cast<long>(l.size()) - 1;
      long adjacent = 0;
      for (std::size_t j = 0; j + 1 < l.size(); ++j) adjacent += g.adjacent(l[j], l[j + 1]);
      if (adjacent < 2 * gaps - ell) return PruneReason::kCheckpointAdjacency;
    }
  }
  if (cfg.b_sp) {
    for (const CheckpointList& l : lists) {
      long total = 0;
      for (std::size_t j = 0; j + 1 < l.size() && total <= ell; ++j) {
        const int d = dist.distance(l[j], l[j + 1]);
        total += d == kUnreachable ? static_cast<long>(ell) + 1 : d;
      }
      if (total > ell) return PruneReason::kShortestPaths;
    }
  }
  return std::nullopt;
}

std::optional<PruneReason> node_infeasible(const SppcInstance& inst, const SolverConfig& cfg) {
  DistanceCache dist(inst.g());
  return node_infeasible(inst.g(), inst.lists, inst.base.ell, cfg, dist);
}

namespace {

std::vector<Vertex> sorted_checkpoints(std::span<const CheckpointList> lists) {
  std::vector<Vertex> out;
  for (const CheckpointList& l : lists) out.insert(out.end(), l.entries().begin(), l.entries().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Sorted, deduplicated pool minus every list entry.
std::vector<Vertex> finish_pool(std::vector<Vertex> pool, const std::vector<Vertex>& excluded) {
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  std::vector<Vertex> out;
  std::set_difference(pool.begin(), pool.end(), excluded.begin(), excluded.end(),
                      std::back_inserter(out));
  return out;
}

void completed_interiors(const GreedyOutcome& outcome, std::vector<Vertex>& pool) {
  for (const auto& subpaths : outcome.complete_paths) {
    const Path p = join_subpaths(subpaths);
    pool.insert(pool.end(), p.interior().begin(), p.interior().end());
  }
}

// Appends one position's candidates, in c-dist or id order.
void emit_position(std::size_t list, std::size_t index, const CheckpointList& l,
                   const std::vector<Vertex>& pool, const SolverConfig& cfg, DistanceCache& dist,
                   std::vector<Candidate>& out) {
  const Vertex before = l[index - 1];
  const Vertex after = l[index];
  const std::size_t first = out.size();
  for (Vertex v : pool) out.push_back({list, index, v, before, after});
  if (!cfg.c_dist) return;
  auto key = [&](const Candidate& c) {
    const int a = dist.distance(before, c.v);
    const int b = dist.distance(after, c.v);
    if (a == kUnreachable || b == kUnreachable) return std::numeric_limits<long>::max();
    return static_cast<long>(a) + b;
  };
  std::stable_sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                   [&](const Candidate& x, const Candidate& y) { return key(x) < key(y); });
}

}  // namespace

std::vector<Candidate> branch_fc1(const GreedyOutcome& outcome,
                                  std::span<const CheckpointList> lists, const SolverConfig& cfg,
                                  DistanceCache& dist) {
  std::vector<Vertex> pool;
  completed_interiors(outcome, pool);
  for (const Path& q : outcome.partial_subpaths) {
    pool.insert(pool.end(), q.vertices.begin(), q.vertices.end());
  }
  pool = finish_pool(std::move(pool), sorted_checkpoints(lists));
  std::vector<Candidate> out;
  const std::size_t i = outcome.failed_path;
  emit_position(i, *outcome.failed_subpath + 1, lists[i], pool, cfg, dist, out);
  return out;
}

std::vector<Candidate> branch_fc2(const GreedyOutcome& outcome,
                                  std::span<const CheckpointList> lists, const SolverConfig& cfg,
                                  DistanceCache& dist) {
  const std::vector<Vertex> excluded = sorted_checkpoints(lists);
  const std::size_t i = outcome.failed_path;
  const std::size_t jb = *outcome.failed_subpath;

  std::vector<std::size_t> positions(jb + 1);
  for (std::size_t j = 0; j <= jb; ++j) positions[j] = j;
  if (cfg.c_pl) {
    auto len = [&](std::size_t j) {
      return j < jb ? outcome.partial_subpaths[j].length() : outcome.overlong_subpath->length();
    };
    std::stable_sort(positions.begin(), positions.end(),
                     [&](std::size_t a, std::size_t b) { return len(a) > len(b); });
  }

  std::vector<Vertex> base;
  completed_interiors(outcome, base);
  std::vector<Candidate> out;
  for (std::size_t jp : positions) {
    std::vector<Vertex> pool = base;
    for (std::size_t j = 0; j < jb; ++j) {
      if (j == jp) continue;
      const auto& q = outcome.partial_subpaths[j].vertices;
      pool.insert(pool.end(), q.begin(), q.end());
    }
    emit_position(i, jp + 1, lists[i], finish_pool(std::move(pool), excluded), cfg, dist, out);
  }
  return out;
}

std::vector<Candidate> branch_fc3(const GreedyOutcome& outcome,
                                  std::span<const CheckpointList> lists, const SolverConfig& cfg,
                                  DistanceCache& dist) {
  std::vector<Vertex> pool;
  completed_interiors(outcome, pool);
  pool = finish_pool(std::move(pool), sorted_checkpoints(lists));
  std::vector<Candidate> out;
  for (std::size_t i = outcome.failed_path; i < lists.size(); ++i) {
    for (std::size_t j = 0; j + 1 < lists[i].size(); ++j) {
      emit_position(i, j + 1, lists[i], pool, cfg, dist, out);
    }
  }
  return out;
}

void record_forbidden_interval(ForbiddenIntervalStore& store, const Candidate& cand) {
  store.push({cand.list, cand.before, cand.after, cand.v});
}

namespace {

using Clock = std::chrono::steady_clock;

class Search {
 public:
  Search(const SppcInstance& inst, const SolverConfig& cfg, SolveStats& stats,
         const SearchObserver* observer, std::optional<Clock::time_point> deadline)
      : inst_(inst),
        cfg_(cfg),
        stats_(stats),
        observer_(observer),
        deadline_(deadline),
        greedy_(inst.g(), inst.base.s, inst.base.t),
        dist_(inst.g(), excluded_mask()) {}

  Decision run() { return visit(inst_.lists, 0); }
  const std::optional<Solution>& witness() const { return witness_; }

 private:
  VertexMask excluded_mask() {
    VertexMask mask(inst_.g().vertex_count());
    if (!cfg_.short_walk_vertices_only) return mask;
    auto excluded = long_walk_vertices(inst_.g(), inst_.base.s, inst_.base.t, inst_.base.ell);
    for (Vertex v : excluded) mask.hide(v);
    greedy_.set_excluded(std::move(excluded));
    return mask;
  }

  bool expired() const { return deadline_ && Clock::now() >= *deadline_; }

  void notify(std::size_t depth, std::span<const CheckpointList> lists,
              std::optional<PruneReason> pruned, const GreedyOutcome* outcome,
              std::span<const Candidate> candidates) {
    if (observer_ && observer_->on_node) {
      observer_->on_node({depth, lists, pruned, outcome, candidates});
    }
  }

  std::vector<Candidate> branch(const GreedyOutcome& outcome,
                                std::span<const CheckpointList> lists) {
    const std::uint64_t k = inst_.base.k;
    const std::uint64_t ell = inst_.base.ell;
    std::vector<Candidate> out;
    std::uint64_t bound = 0;
    switch (*outcome.failure) {
      case FailureCondition::kNoSubpath:
        ++stats_.br1;
        out = branch_fc1(outcome, lists, cfg_, dist_);
        bound = k * ell;
        break;
      case FailureCondition::kTooLong:
        ++stats_.br2;
        out = branch_fc2(outcome, lists, cfg_, dist_);
        bound = k * ell * ell;
        break;
      case FailureCondition::kSeparator:
        ++stats_.br3;
        out = branch_fc3(outcome, lists, cfg_, dist_);
        bound = k * k * ell * ell;
        break;
    }
    if (out.size() > bound) throw std::logic_error("branching set exceeds its size bound");
    return out;
  }

  Decision visit(std::span<const CheckpointList> lists, std::size_t depth) {
    if (expired()) return Decision::kTimeout;
    ++stats_.nodes;
    stats_.max_depth = std::max<std::uint64_t>(stats_.max_depth, depth);

    if (auto pruned = node_infeasible(inst_.g(), lists, inst_.base.ell, cfg_, dist_)) {
      switch (*pruned) {
        case PruneReason::kListLength:
          ++stats_.prunes_len;
          break;
        case PruneReason::kCheckpointAdjacency:
          ++stats_.prunes_bcpl;
          break;
        case PruneReason::kShortestPaths:
          ++stats_.prunes_bsp;
          break;
      }
      notify(depth, lists, pruned, nullptr, {});
      return Decision::kNo;
    }

    GreedyRunner::Options opts;
    opts.check_initial_separator = depth == 0 && !cfg_.trivial_detection;
    opts.intervals = cfg_.b_fi ? &intervals_ : nullptr;
    opts.stats = &stats_;
    const GreedyOutcome outcome = greedy_.run(lists, inst_.base.ell, cfg_, opts);
    if (outcome.succeeded()) {
      notify(depth, lists, std::nullopt, &outcome, {});
      witness_ = outcome.solution();
      return Decision::kYes;
    }

    const std::vector<Candidate> candidates = branch(outcome, lists);
    notify(depth, lists, std::nullopt, &outcome, candidates);

    const std::size_t mark = intervals_.size();
    Decision result = Decision::kNo;
    for (const Candidate& cand : candidates) {
      if (expired()) {
        result = Decision::kTimeout;
        break;
      }
      if (cfg_.b_fi && intervals_.forbids(lists[cand.list], cand.list, cand.index, cand.v)) {
        ++stats_.bfi_skipped;
        continue;
      }
      std::vector<CheckpointList> child(lists.begin(), lists.end());
      child[cand.list].insert(cand.index, cand.v);
      const Decision r = visit(child, depth + 1);
      if (r != Decision::kNo) {
        result = r;
        break;
      }
      if (cfg_.b_fi) {
        record_forbidden_interval(intervals_, cand);
        ++stats_.bfi_recorded;
      }
    }
    intervals_.truncate(mark);
    return result;
  }

  const SppcInstance& inst_;
  const SolverConfig& cfg_;
  SolveStats& stats_;
  const SearchObserver* observer_;
  std::optional<Clock::time_point> deadline_;
  GreedyRunner greedy_;
  DistanceCache dist_;
  ForbiddenIntervalStore intervals_;
  std::optional<Solution> witness_;
};

}  // namespace

SolveResult solve(const SppInstance& inst, const SolverConfig& cfg,
                  const SearchObserver* observer) {
  const auto start = Clock::now();
  inst.check();
  SolveResult result;
  SolveStats& stats = result.stats;
  auto finish = [&]() -> SolveResult {
    stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return std::move(result);
  };

  const SppcInstance root = from_spp(inst);
  std::optional<std::pair<SppcInstance, ReductionReport>> reduced;
  ReductionReport report;
  if (cfg.preprocess) {
    reduced = reduce(root);
    report = reduced->second;
  } else {
    report = identity_reduction(inst.g());
  }
  stats.n_before = report.n_before;
  stats.n_after = report.n_after;
  stats.m_before = report.m_before;
  stats.m_after = report.m_after;

  if (cfg.trivial_detection) {
    TrivialOutcome trivial = detect_trivial(root);
    stats.trivial_rule = std::string(to_string(trivial.rule));
    if (trivial.verdict == TrivialVerdict::kYes) {
      result.decision = Decision::kYes;
      result.witness = std::move(trivial.witness);
      stats.solved_by = "trivial-yes";
      return finish();
    }
    if (trivial.verdict == TrivialVerdict::kNo) {
      result.decision = Decision::kNo;
      stats.solved_by = "trivial-no";
      return finish();
    }
  }

  std::optional<Clock::time_point> deadline;
  if (cfg.timeout_ms) deadline = start + std::chrono::milliseconds(*cfg.timeout_ms);

  const SppcInstance& working = reduced ? reduced->first : root;
  Search search(working, cfg, stats, observer, deadline);
  result.decision = search.run();
  switch (result.decision) {
    case Decision::kYes:
      result.witness = report.to_original(*search.witness());
      stats.solved_by = stats.nodes == 1 ? "greedy" : "search";
      break;
    case Decision::kNo:
      stats.solved_by = "search";
      break;
    case Decision::kTimeout:
      stats.solved_by = "timeout";
      break;
  }
  return finish();
}

}  // namespace spp
