#include "spp/preprocess.hpp"

#include <algorithm>
#include <stdexcept>

#include "spp/flows.hpp"

namespace spp {

Path ReductionReport::to_original(const Path& p) const {
  Path out;
  out.vertices.reserve(p.vertices.size());
  for (Vertex v : p.vertices) out.vertices.push_back(kept[v]);
  return out;
}

Solution ReductionReport::to_original(const Solution& sol) const {
  Solution out;
  for (const Path& p : sol.paths) out.paths.push_back(to_original(p));
  return out;
}

ReductionReport identity_reduction(const Graph& g) {
  ReductionReport r;
  r.n_before = r.n_after = g.vertex_count();
  r.m_before = r.m_after = g.edge_count();
  r.kept.resize(g.vertex_count());
  r.to_reduced.resize(g.vertex_count());
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.vertex_count(); ++v) {
    r.kept[v] = v;
    r.to_reduced[v] = v;
  }
  return r;
}

std::pair<SppcInstance, ReductionReport> reduce(const SppcInstance& inst) {
  const Graph& g = inst.g();
  const Vertex s = inst.base.s;
  const Vertex t = inst.base.t;
  const int ell = inst.base.ell;
  const std::size_t n = g.vertex_count();

  const auto from_s = distances_from(g, VertexMask{}, s, ell);
  const auto from_t = distances_from(g, VertexMask{}, t, ell);
  const int half = ell / 2;
  std::vector<char> alive(n, 0);
  std::size_t by_distance = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const bool both = from_s[v] <= ell && from_t[v] <= ell;
    const bool near = from_s[v] <= half || from_t[v] <= half;
    alive[v] = both && near;
    if (!alive[v]) ++by_distance;
  }
  // Terminals stay even when dist(s, t) > ell; the instance is then a no,
  // which the search still has to discover.
  for (Vertex v : {s, t}) {
    if (!alive[v]) --by_distance;
    alive[v] = 1;
  }

  // Iterated removal of degree <= 1 vertices within the surviving subgraph.
  std::vector<int> degree(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) degree[v] += alive[w];
  }
  std::vector<Vertex> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v] && degree[v] <= 1 && static_cast<Vertex>(v) != s && static_cast<Vertex>(v) != t) {
      stack.push_back(static_cast<Vertex>(v));
    }
  }
  std::size_t by_degree = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    ++by_degree;
    for (Vertex w : g.neighbors(v)) {
      if (!alive[w]) continue;
      if (--degree[w] <= 1 && w != s && w != t) stack.push_back(w);
    }
  }

  ReductionReport report;
  report.n_before = n;
  report.m_before = g.edge_count();
  report.to_reduced.assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) {
      report.to_reduced[v] = static_cast<Vertex>(report.kept.size());
      report.kept.push_back(static_cast<Vertex>(v));
    }
  }
  report.dropped_by_distance = by_distance;
  report.dropped_by_degree = by_degree;

  auto reduced_graph = std::make_shared<const Graph>(g.induced(report.kept));
  report.n_after = reduced_graph->vertex_count();
  report.m_after = reduced_graph->edge_count();

  SppcInstance out;
  out.base = inst.base;
  out.base.graph = std::move(reduced_graph);
  out.base.s = report.to_reduced[s];
  out.base.t = report.to_reduced[t];
  for (const CheckpointList& list : inst.lists) {
    std::vector<Vertex> mapped;
    for (Vertex v : list.entries()) {
      if (report.to_reduced[v] < 0) {
        throw std::logic_error("reduce: checkpoint " + std::to_string(v) + " was removed");
      }
      mapped.push_back(report.to_reduced[v]);
    }
    out.lists.emplace_back(std::move(mapped));
  }
  return {std::move(out), std::move(report)};
}

std::string_view to_string(TrivialRule rule) {
  switch (rule) {
    case TrivialRule::kNone: return "none";
    case TrivialRule::kEllOne: return "ell-1";
    case TrivialRule::kEllTwo: return "ell-2";
    case TrivialRule::kSinglePath: return "k-1";
    case TrivialRule::kSeparator: return "separator";
    case TrivialRule::kMinTotalLength: return "min-total-length";
  }
  return "unknown";
}

TrivialOutcome detect_trivial(const SppcInstance& inst) {
  for (const auto& list : inst.lists) {
    if (!list.bare()) throw UsageError("detect_trivial runs only on bare checkpoint lists");
  }
  const SppInstance& base = inst.base;
  base.check();
  const Graph& g = base.g();
  const Vertex s = base.s;
  const Vertex t = base.t;
  const int k = base.k;
  const int ell = base.ell;
  TrivialOutcome out;

  auto decide = [&](bool yes, TrivialRule rule, std::optional<Solution> witness) {
    out.verdict = yes ? TrivialVerdict::kYes : TrivialVerdict::kNo;
    out.rule = rule;
    if (yes) out.witness = std::move(witness);
    return out;
  };

  if (ell == 1) {
    const bool yes = k == 1 && g.adjacent(s, t);
    return decide(yes, TrivialRule::kEllOne, Solution{{Path{{s, t}}}});
  }
  if (ell == 2) {
    Solution sol;
    if (g.adjacent(s, t)) sol.paths.push_back(Path{{s, t}});
    for (Vertex c : g.neighbors(s)) {
      if (c != t && g.adjacent(c, t)) sol.paths.push_back(Path{{s, c, t}});
    }
    const bool yes = sol.paths.size() >= static_cast<std::size_t>(k);
    sol.paths.resize(std::min(sol.paths.size(), static_cast<std::size_t>(k)));
    return decide(yes, TrivialRule::kEllTwo, std::move(sol));
  }
  if (k == 1) {
    auto p = shortest_path(g, VertexMask{}, s, t);
    const bool yes = p && p->length() <= static_cast<std::size_t>(ell);
    return decide(yes, TrivialRule::kSinglePath, yes ? std::optional(Solution{{*p}}) : std::nullopt);
  }

  const SeparatorResult sep = min_vertex_separator_size(g, s, t);
  out.separator_flow = sep.flow_value;
  if (sep.flow_value < k) return decide(false, TrivialRule::kSeparator, std::nullopt);

  const auto shortest = min_total_length_disjoint_paths(g, s, t, k);
  if (!shortest) return decide(false, TrivialRule::kMinTotalLength, std::nullopt);
  std::size_t longest = 0;
  for (const Path& p : shortest->paths) longest = std::max(longest, p.length());
  if (longest <= static_cast<std::size_t>(ell)) {
    return decide(true, TrivialRule::kMinTotalLength, Solution{shortest->paths});
  }
  if (shortest->total_length > k * ell) {
    return decide(false, TrivialRule::kMinTotalLength, std::nullopt);
  }
  return out;
}

TrivialOutcome detect_trivial(const SppInstance& inst) { return detect_trivial(from_spp(inst)); }

}  // namespace spp
