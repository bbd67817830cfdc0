#include <doctest.h>

#include <array>
#include <random>
#include <tuple>

#include "spp/oracle.hpp"
#include "spp/search.hpp"
#include "support.hpp"

using namespace spp;
using spp::test::v;

namespace {

std::vector<Vertex> ids(std::initializer_list<int> one_based) {
  std::vector<Vertex> out;
  for (int i : one_based) out.push_back(v(i));
  return out;
}

std::vector<Vertex> cand_vertices(std::span<const Candidate> cands) {
  std::vector<Vertex> out;
  for (const Candidate& c : cands) out.push_back(c.v);
  return out;
}

SolverConfig plain(std::string_view heur) {
  SolverConfig cfg;
  cfg.set_heuristics(heur);
  cfg.preprocess = false;
  cfg.trivial_detection = false;
  return cfg;
}

struct Event {
  std::size_t depth;
  std::vector<CheckpointList> lists;
  std::optional<PruneReason> pruned;
  std::optional<GreedyOutcome> outcome;
  std::vector<Candidate> candidates;
};

std::pair<SolveResult, std::vector<Event>> traced(const SppInstance& inst,
                                                  const SolverConfig& cfg) {
  std::vector<Event> events;
  SearchObserver obs;
  obs.on_node = [&](const NodeEvent& e) {
    Event copy{e.depth, {e.lists.begin(), e.lists.end()}, e.pruned, std::nullopt,
               {e.candidates.begin(), e.candidates.end()}};
    if (e.outcome) copy.outcome = *e.outcome;
    events.push_back(std::move(copy));
  };
  auto result = solve(inst, cfg, &obs);
  return {std::move(result), std::move(events)};
}

bool same_stats(const SolveStats& a, const SolveStats& b) {
  return a.nodes == b.nodes && a.br1 == b.br1 && a.br2 == b.br2 && a.br3 == b.br3 &&
         a.prunes_len == b.prunes_len && a.prunes_bcpl == b.prunes_bcpl &&
         a.prunes_bsp == b.prunes_bsp && a.bfi_recorded == b.bfi_recorded &&
         a.bfi_masked == b.bfi_masked && a.bfi_skipped == b.bfi_skipped &&
         a.dms_fired == b.dms_fired && a.max_depth == b.max_depth &&
         a.solved_by == b.solved_by && a.trivial_rule == b.trivial_rule &&
         a.n_after == b.n_after && a.m_after == b.m_after;
}

// Small random instances shared by the property checks.
struct Small {
  SppInstance inst;
  bool yes;
};

const std::vector<Small>& small_suite() {
  static const std::vector<Small> suite = [] {
    std::vector<Small> out;
    std::mt19937_64 rng(2718);
    while (out.size() < 160) {
      const std::size_t n = 8 + bounded(rng, 6);
      const double p = std::array{0.15, 0.25, 0.35}[bounded(rng, 3)];
      const auto g = test::random_graph(n, p, rng());
      const auto [s, t] = test::random_pair(n, rng);
      const int k = 2 + static_cast<int>(bounded(rng, 2));
      const int ell = 5 + static_cast<int>(bounded(rng, 3));
      SppInstance inst = test::instance(g, s, t, k, ell);
      if (distances_from(*g, VertexMask(), s)[t] > ell) continue;
      const bool yes = oracle::decide(inst).yes;
      out.push_back({std::move(inst), yes});
    }
    return out;
  }();
  return suite;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("G_ex example run without d-ms") {
  const SppInstance inst = test::instance(test::gex(), v(1), v(5), 2, 5);
  const auto [result, events] = traced(inst, plain(""));
  CHECK(result.decision == Decision::kYes);
  REQUIRE(events.size() == 2);

  const Event& root = events[0];
  REQUIRE(root.outcome);
  CHECK(root.outcome->failure == FailureCondition::kNoSubpath);
  CHECK(root.outcome->failed_path == 1);
  REQUIRE(root.outcome->complete_paths.size() == 1);
  CHECK(join_subpaths(root.outcome->complete_paths[0]).vertices == ids({1, 2, 3, 4, 5}));
  CHECK(cand_vertices(root.candidates) == ids({2, 3, 4}));
  for (const Candidate& c : root.candidates) {
    CHECK(c.list == 1);
    CHECK(c.index == 1);
  }

  const Event& child = events[1];
  CHECK(child.depth == 1);
  CHECK(child.lists[1] == CheckpointList(ids({1, 2, 5})));
  REQUIRE(child.outcome);
  REQUIRE(child.outcome->succeeded());
  const Solution sol = child.outcome->solution();
  CHECK(sol.paths[0].vertices == ids({1, 6, 7, 8, 4, 5}));
  CHECK(sol.paths[1].vertices == ids({1, 2, 9, 10, 11, 5}));

  REQUIRE(result.witness);
  CHECK(test::path_set(*result.witness) ==
        std::set<std::vector<Vertex>>{ids({1, 6, 7, 8, 4, 5}), ids({1, 2, 9, 10, 11, 5})});
  CHECK(result.stats.br1 == 1);
  CHECK(result.stats.nodes == 2);
  CHECK(result.stats.solved_by == "search");
}

TEST_CASE("G_ex with default heuristics") {
  const SppInstance inst = test::instance(test::gex(), v(1), v(5), 2, 5);
  SolverConfig cfg;
  cfg.trivial_detection = false;
  auto [result, events] = traced(inst, cfg);
  CHECK(result.decision == Decision::kYes);
  CHECK(validate_solution(inst, *result.witness));
  REQUIRE_FALSE(events.empty());
  CHECK(cand_vertices(events[0].candidates) == ids({2, 3, 4}));
  // The separator check sees the empty remainder before the subpath search.
  CHECK(result.stats.br3 == 1);

  cfg.d_ms = false;
  result = solve(inst, cfg);
  CHECK(result.decision == Decision::kYes);
  CHECK(result.stats.br1 >= 1);

  cfg.trivial_detection = true;
  result = solve(inst, cfg);
  CHECK(result.decision == Decision::kYes);
  CHECK(result.stats.solved_by == "trivial-yes");
  CHECK(result.stats.trivial_rule == "min-total-length");
  CHECK(result.stats.nodes == 0);
  CHECK(validate_solution(inst, *result.witness));
}

TEST_CASE("one cut vertex refutes two paths") {
  const SppInstance inst = test::instance(test::path_sat(), v(1), v(3), 2, 5);
  auto result = solve(inst, SolverConfig{});
  CHECK(result.decision == Decision::kNo);
  CHECK(result.stats.solved_by == "trivial-no");

  const auto [bare, events] = traced(inst, plain(""));
  CHECK(bare.decision == Decision::kNo);
  CHECK(bare.stats.solved_by == "search");
  REQUIRE(events.size() == 2);
  CHECK(cand_vertices(events[0].candidates) == ids({2}));
  REQUIRE(events[1].outcome);
  CHECK(events[1].outcome->failure == FailureCondition::kNoSubpath);
  CHECK(events[1].candidates.empty());
}

TEST_CASE("G(14, 0.3, 7) agrees with the oracle") {
  const auto g = test::random_graph(14, 0.3, 7);
  int yes = 0, no = 0;
  for (Vertex s = 0; s < 14; ++s) {
    for (Vertex t = s + 1; t < 14; t += 3) {
      for (int k : {2, 3}) {
        for (int ell : {5, 6}) {
          const SppInstance inst = test::instance(g, s, t, k, ell);
          const bool expect = oracle::decide(inst).yes;
          for (const char* name : {"bare", "all"}) {
            SolverConfig cfg = SolverConfig::named(name);
            cfg.trivial_detection = false;
            const auto r = solve(inst, cfg);
            CHECK(r.decision == (expect ? Decision::kYes : Decision::kNo));
            if (r.witness) CHECK(validate_solution(inst, *r.witness));
          }
          (expect ? yes : no)++;
        }
      }
    }
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("node infeasibility examples") {
  const auto g = test::gex();
  SppcInstance inst = from_spp(test::instance(g, v(1), v(5), 1, 5));
  inst.lists[0] = CheckpointList(ids({1, 2, 3, 4, 8, 7, 5}));
  CHECK(node_infeasible(inst, SolverConfig::bare()) == PruneReason::kListLength);

  inst.lists[0] = CheckpointList(ids({1, 7, 10, 5}));
  CHECK_FALSE(node_infeasible(inst, SolverConfig::bare()));
  SolverConfig cpl = SolverConfig::bare();
  cpl.b_cpl = true;
  CHECK(node_infeasible(inst, cpl) == PruneReason::kCheckpointAdjacency);

  // Distances 3, 4 and 2 sum past 5.
  const std::vector<bool> none(11, false);
  CHECK(test::dfs_min_length(*g, none, v(1), v(10)) == 3);
  CHECK(test::dfs_min_length(*g, none, v(10), v(8)) == 4);
  CHECK(test::dfs_min_length(*g, none, v(8), v(5)) == 2);
  inst.lists[0] = CheckpointList(ids({1, 10, 8, 5}));
  SolverConfig sp = SolverConfig::bare();
  sp.b_sp = true;
  CHECK(node_infeasible(inst, sp) == PruneReason::kShortestPaths);
  CHECK_FALSE(node_infeasible(inst, SolverConfig::bare()));
}

TEST_CASE("first rule candidates") {
  const auto inst = from_spp(test::instance(test::gex(), v(1), v(5), 2, 5));
  const auto out = run_greedy(inst, SolverConfig::bare());
  DistanceCache dist(inst.g());
  for (bool c_dist : {false, true}) {
    SolverConfig cfg = SolverConfig::bare();
    cfg.c_dist = c_dist;
    const auto cands = branch_fc1(out, inst.lists, cfg, dist);
    REQUIRE(cands.size() == 3);
    CHECK(cand_vertices(cands) == ids({2, 3, 4}));
    CHECK(cands[0] == Candidate{1, 1, v(2), v(1), v(5)});
  }
  for (int i : {2, 3, 4}) CHECK(dist.distance(v(1), v(i)) + dist.distance(v(5), v(i)) == 4);

  // No earlier paths and no earlier subpaths: nothing to branch on.
  const auto split = test::make_graph(4, {{1, 2}, {3, 4}});
  const auto lone = from_spp(test::instance(split, v(1), v(4), 1, 3));
  const auto fail = run_greedy(lone, SolverConfig::bare());
  REQUIRE(fail.failure == FailureCondition::kNoSubpath);
  DistanceCache d2(lone.g());
  CHECK(branch_fc1(fail, lone.lists, SolverConfig::bare(), d2).empty());
}

TEST_CASE("c-dist puts nearer vertices first") {
  // Hand-built missing-subpath state on the list (1, 3, 5) after the first
  // subpath 1-6-7-3.
  const auto g = test::make_graph(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {6, 7}, {7, 3},
                                      {2, 8}, {8, 9}, {9, 5}});
  GreedyOutcome out;
  out.failure = FailureCondition::kNoSubpath;
  out.failed_path = 0;
  out.failed_subpath = 1;
  out.partial_subpaths = {Path{ids({1, 6, 7, 3})}};
  std::vector<CheckpointList> lists{CheckpointList(ids({1, 3, 5}))};
  DistanceCache dist(*g);
  SolverConfig cfg = SolverConfig::bare();
  CHECK(cand_vertices(branch_fc1(out, lists, cfg, dist)) == ids({6, 7}));
  cfg.c_dist = true;
  // d(3,6) + d(5,6) = 2 + 4 against d(3,7) + d(5,7) = 1 + 3.
  CHECK(cand_vertices(branch_fc1(out, lists, cfg, dist)) == ids({7, 6}));
}

TEST_CASE("second rule pools and position order") {
  // s=1, m=2, v1=3, x=4, y=5, v2=6, t=7.
  SppcInstance inst = from_spp(test::instance(test::fc2_fixture(), v(1), v(7), 1, 5));
  inst.lists[0] = CheckpointList(ids({1, 3, 6, 7}));
  const auto out = run_greedy(inst, SolverConfig::bare());
  REQUIRE(out.failure == FailureCondition::kTooLong);
  DistanceCache dist(inst.g());

  auto by_index = [](const std::vector<Candidate>& cands) {
    std::vector<std::pair<std::size_t, std::vector<Vertex>>> groups;
    for (const Candidate& c : cands) {
      if (groups.empty() || groups.back().first != c.index) groups.push_back({c.index, {}});
      groups.back().second.push_back(c.v);
    }
    return groups;
  };
  using Groups = std::vector<std::pair<std::size_t, std::vector<Vertex>>>;

  SolverConfig cfg = SolverConfig::bare();
  CHECK(by_index(branch_fc2(out, inst.lists, cfg, dist)) ==
        Groups{{1, ids({4, 5})}, {2, ids({2})}, {3, ids({2, 4, 5})}});
  cfg.c_pl = true;
  CHECK(by_index(branch_fc2(out, inst.lists, cfg, dist)) ==
        Groups{{2, ids({2})}, {1, ids({4, 5})}, {3, ids({2, 4, 5})}});

  for (const Candidate& c : branch_fc2(out, inst.lists, cfg, dist)) {
    CHECK(c.before == inst.lists[0][c.index - 1]);
    CHECK(c.after == inst.lists[0][c.index]);
  }

  // Overlong first subpath with nothing before it.
  const auto line = test::make_graph(4, {{1, 2}, {2, 3}, {3, 4}});
  const auto single = from_spp(test::instance(line, v(1), v(4), 1, 2));
  const auto fail = run_greedy(single, SolverConfig::bare());
  REQUIRE(fail.failure == FailureCondition::kTooLong);
  DistanceCache d2(single.g());
  CHECK(branch_fc2(fail, single.lists, SolverConfig::bare(), d2).empty());
}

TEST_CASE("third rule candidates") {
  const auto inst = from_spp(test::instance(test::gex(), v(1), v(5), 3, 9));
  SolverConfig cfg = SolverConfig::bare();
  cfg.d_ms = true;
  const auto out = run_greedy(inst, cfg);
  REQUIRE(out.failure == FailureCondition::kSeparator);
  DistanceCache dist(inst.g());
  const auto cands = branch_fc3(out, inst.lists, cfg, dist);
  REQUIRE(cands.size() == 6);
  std::set<std::tuple<std::size_t, std::size_t, Vertex>> got;
  for (const Candidate& c : cands) got.insert({c.list, c.index, c.v});
  std::set<std::tuple<std::size_t, std::size_t, Vertex>> expect;
  for (std::size_t list : {1, 2}) {
    for (int i : {2, 3, 4}) expect.insert({list, 1, v(i)});
  }
  CHECK(got == expect);

  // Fired before any path: empty pool.
  GreedyOutcome early;
  early.failure = FailureCondition::kSeparator;
  early.failed_path = 0;
  CHECK(branch_fc3(early, inst.lists, cfg, dist).empty());
}

TEST_CASE("forbidden interval bookkeeping") {
  ForbiddenIntervalStore store;
  const CheckpointList bare(v(1), v(5));
  record_forbidden_interval(store, Candidate{0, 1, v(3), v(1), v(5)});
  REQUIRE(store.size() == 1);
  CHECK(store.entries()[0] == ForbiddenInterval{0, v(1), v(5), v(3)});
  CHECK(store.forbids(bare, 0, 1, v(3)));
  CHECK_FALSE(store.forbids(bare, 0, 1, v(4)));
  CHECK_FALSE(store.forbids(bare, 1, 1, v(3)));

  // Still forbidden once another checkpoint sits between the ends.
  const CheckpointList longer(ids({1, 2, 5}));
  CHECK(store.forbids(longer, 0, 1, v(3)));
  CHECK(store.forbids(longer, 0, 2, v(3)));
  std::vector<Vertex> active;
  store.active_vertices(longer, 0, 1, active);
  CHECK(active == ids({3}));

  // Scope ends when the recording node returns.
  const std::size_t mark = 0;
  record_forbidden_interval(store, Candidate{0, 1, v(4), v(1), v(5)});
  store.truncate(mark);
  CHECK(store.size() == 0);
  CHECK_FALSE(store.forbids(bare, 0, 1, v(3)));
}

TEST_CASE("intervals stay inside their subtree") {
  // Replays each search from its event stream. A child that returns
  // records one interval at its parent; everything recorded inside the
  // child's own subtree is dropped first. Every node's greedy must then
  // match a fresh run against exactly that store.
  int nodes_checked = 0;
  for (const char* heur : {"b-sp,b-fi", "b-sp,b-fi,d-ms,c-dist,c-pl"}) {
    const SolverConfig cfg = plain(heur);
    for (const Small& sm : small_suite()) {
      const auto [result, events] = traced(sm.inst, cfg);
      struct Frame {
        std::size_t event;
        std::size_t mark;
        Candidate via;
      };
      std::vector<Frame> stack;
      std::vector<ForbiddenInterval> store;
      GreedyRunner runner(sm.inst.g(), sm.inst.s, sm.inst.t);
      runner.set_excluded(long_walk_vertices(sm.inst.g(), sm.inst.s, sm.inst.t, sm.inst.ell));
      for (std::size_t e = 0; e < events.size(); ++e) {
        const Event& ev = events[e];
        while (stack.size() > ev.depth) {
          const Frame done = stack.back();
          stack.pop_back();
          store.resize(done.mark);
          store.push_back({done.via.list, done.via.before, done.via.after, done.via.v});
        }
        Candidate via;
        if (!stack.empty()) {
          const auto& parent = events[stack.back().event].lists;
          for (std::size_t i = 0; i < parent.size(); ++i) {
            if (parent[i].size() == ev.lists[i].size()) continue;
            std::size_t j = 1;
            while (parent[i][j] == ev.lists[i][j]) ++j;
            via = Candidate{i, j, ev.lists[i][j], parent[i][j - 1], parent[i][j]};
          }
        }
        ForbiddenIntervalStore live;
        for (const auto& fi : store) live.push(fi);
        if (!stack.empty()) {
          const auto& parent = events[stack.back().event].lists;
          CHECK_FALSE(live.forbids(parent[via.list], via.list, via.index, via.v));
        }
        if (ev.outcome) {
          GreedyRunner::Options opts;
          opts.check_initial_separator = ev.depth == 0;
          opts.intervals = &live;
          const auto again = runner.run(ev.lists, sm.inst.ell, cfg, opts);
          CHECK(again.failure == ev.outcome->failure);
          CHECK(again.complete_paths == ev.outcome->complete_paths);
          CHECK(again.partial_subpaths == ev.outcome->partial_subpaths);
          ++nodes_checked;
        }
        stack.push_back({e, store.size(), via});
      }
    }
  }
  CHECK(nodes_checked > 500);
}

TEST_CASE("decisions match the oracle under every configuration") {
  for (const Small& sm : small_suite()) {
    for (const std::string& name : SolverConfig::named_configs()) {
      for (bool pre : {false, true}) {
        for (bool trivial : {false, true}) {
          SolverConfig cfg = SolverConfig::named(name);
          cfg.preprocess = pre;
          cfg.trivial_detection = trivial;
          const auto r = solve(sm.inst, cfg);
          CHECK(r.decision == (sm.yes ? Decision::kYes : Decision::kNo));
          if (r.decision == Decision::kYes) {
            REQUIRE(r.witness);
            CHECK(validate_solution(sm.inst, *r.witness));
          }
        }
      }
    }
  }
}

TEST_CASE("depth and branching sets stay within their bounds") {
  for (const Small& sm : small_suite()) {
    const auto k = static_cast<std::size_t>(sm.inst.k);
    const auto ell = static_cast<std::size_t>(sm.inst.ell);
    for (const char* name : {"bare", "all", "b-sp+d-ms"}) {
      SolverConfig cfg = SolverConfig::named(name);
      cfg.trivial_detection = false;
      const auto [result, events] = traced(sm.inst, cfg);
      CHECK(result.stats.max_depth <= k * ell);
      for (const Event& e : events) {
        CHECK(e.depth <= k * ell);
        if (!e.outcome || e.outcome->succeeded()) continue;
        std::size_t bound = 0;
        switch (*e.outcome->failure) {
          case FailureCondition::kNoSubpath: bound = k * ell; break;
          case FailureCondition::kTooLong: bound = k * ell * ell; break;
          case FailureCondition::kSeparator: bound = k * k * ell * ell; break;
        }
        CHECK(e.candidates.size() <= bound);
        // Candidates are legal children.
        for (const Candidate& c : e.candidates) {
          for (const auto& l : e.lists) CHECK_FALSE(l.position(c.v));
          REQUIRE(c.list < e.lists.size());
          CHECK(c.index >= 1);
          CHECK(c.index < e.lists[c.list].size());
          CHECK(c.before == e.lists[c.list][c.index - 1]);
          CHECK(c.after == e.lists[c.list][c.index]);
          CheckpointList child = e.lists[c.list];
          CHECK_NOTHROW(child.insert(c.index, c.v));
        }
      }
    }
  }
}

TEST_CASE("ordering does not change the tree size on no-instances") {
  int compared = 0;
  for (const Small& sm : small_suite()) {
    if (sm.yes) continue;
    for (const char* base : {"b-sp", "b-sp,d-ms", "", "b-cpl,b-sp"}) {
      const std::string b(base);
      const std::string sep = b.empty() ? "" : ",";
      const auto plain_order = solve(sm.inst, plain(b));
      for (const char* extra : {"c-dist", "c-pl", "c-dist,c-pl"}) {
        const auto ordered = solve(sm.inst, plain(b + sep + extra));
        CHECK(ordered.decision == Decision::kNo);
        CHECK(ordered.stats.nodes == plain_order.stats.nodes);
        ++compared;
      }
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("pruning never grows the tree") {
  for (const Small& sm : small_suite()) {
    const auto bare = solve(sm.inst, plain(""));
    const auto cpl = solve(sm.inst, plain("b-cpl"));
    const auto sp = solve(sm.inst, plain("b-sp"));
    const auto both = solve(sm.inst, plain("b-cpl,b-sp"));
    CHECK(cpl.stats.nodes <= bare.stats.nodes);
    CHECK(sp.stats.nodes <= bare.stats.nodes);
    CHECK(both.stats.nodes <= sp.stats.nodes);
    CHECK(both.stats.nodes <= cpl.stats.nodes);
    for (const auto* r : {&cpl, &sp, &both}) CHECK(r->decision == bare.decision);
  }
}

TEST_CASE("solve is deterministic") {
  for (const Small& sm : small_suite()) {
    for (const char* name : {"bare", "all"}) {
      SolverConfig cfg = SolverConfig::named(name);
      cfg.trivial_detection = false;
      const auto a = solve(sm.inst, cfg);
      const auto b = solve(sm.inst, cfg);
      CHECK(a.decision == b.decision);
      CHECK(a.witness == b.witness);
      CHECK(same_stats(a.stats, b.stats));
    }
  }
}

TEST_CASE("timeouts and usage errors") {
  const SppInstance inst = test::instance(test::gex(), v(1), v(5), 2, 5);
  SolverConfig cfg;
  cfg.trivial_detection = false;
  cfg.timeout_ms = 0;
  const auto r = solve(inst, cfg);
  CHECK(r.decision == Decision::kTimeout);
  CHECK(r.stats.solved_by == "timeout");
  CHECK_FALSE(r.witness);

  CHECK_THROWS_AS(solve(test::instance(test::gex(), v(1), v(1), 2, 5), SolverConfig{}),
                  UsageError);
  CHECK_THROWS_AS(solve(test::instance(test::gex(), v(1), v(5), 0, 5), SolverConfig{}),
                  UsageError);
  CHECK_THROWS_AS(SolverConfig::named("nope"), UsageError);
  SolverConfig bad;
  CHECK_THROWS_AS(bad.set_heuristics("b-sp,zz"), UsageError);
}

TEST_CASE("configuration names") {
  CHECK(SolverConfig::named("all").heuristic_fingerprint() == "b-sp+b-fi+d-ms+c-dist+c-pl");
  CHECK(SolverConfig::named("bare").heuristic_fingerprint() == "bare");
  CHECK(SolverConfig::named("b-sp+c").heuristic_fingerprint() == "b-sp+c-dist+c-pl");
  CHECK(SolverConfig::named("b-sp+c-dist+c-pl").heuristic_fingerprint() == "b-sp+c-dist+c-pl");
  for (const auto& name : SolverConfig::named_configs()) CHECK_NOTHROW(SolverConfig::named(name));
}

}  // TEST_SUITE
