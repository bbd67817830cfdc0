#include "spp/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace spp {

void SppInstance::check() const {
  if (!graph) throw UsageError("instance has no graph");
  if (!graph->contains(s) || !graph->contains(t)) throw UsageError("terminal out of range");
  if (s == t) throw UsageError("terminals s and t must differ");
  if (k < 1) throw UsageError("k must be at least 1");
  if (ell < 1) throw UsageError("ell must be at least 1");
}

CheckpointList::CheckpointList(std::vector<Vertex> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw UsageError("checkpoint list needs s and t");
  std::unordered_set<Vertex> seen;
  for (Vertex v : entries_) {
    if (!seen.insert(v).second) throw UsageError("checkpoint list repeats a vertex");
  }
}

std::optional<std::size_t> CheckpointList::position(Vertex v) const {
  auto it = std::find(entries_.begin(), entries_.end(), v);
  if (it == entries_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

void CheckpointList::insert(std::size_t index, Vertex v) {
  if (index < 1 || index >= entries_.size()) throw UsageError("checkpoint index out of range");
  if (position(v)) throw UsageError("vertex is already in the checkpoint list");
  entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(index), v);
}

bool SppcInstance::is_checkpoint(Vertex v) const {
  return std::any_of(lists.begin(), lists.end(),
                     [v](const CheckpointList& l) { return l.position(v).has_value(); });
}

SppcInstance from_spp(const SppInstance& spp) {
  SppcInstance inst{spp, {}};
  inst.lists.assign(static_cast<std::size_t>(spp.k), CheckpointList(spp.s, spp.t));
  return inst;
}

namespace {

ValidationReport fail(std::size_t i, std::string reason) {
  return {false, i, std::move(reason)};
}

}  // namespace

ValidationReport validate_solution(const SppcInstance& inst, const Solution& sol) {
  const SppInstance& base = inst.base;
  const Graph& g = base.g();
  if (sol.paths.size() != static_cast<std::size_t>(base.k)) {
    return {false, std::nullopt,
            "expected " + std::to_string(base.k) + " paths, got " + std::to_string(sol.paths.size())};
  }
  if (inst.lists.size() != sol.paths.size()) {
    return {false, std::nullopt, "instance has the wrong number of checkpoint lists"};
  }

  std::vector<int> owner(g.vertex_count(), -1);
  std::optional<std::size_t> direct;
  for (std::size_t i = 0; i < sol.paths.size(); ++i) {
    const Path& p = sol.paths[i];
    if (!is_path(g, p)) return fail(i, "not a simple path of the graph");
    if (p.front() != base.s || p.back() != base.t) return fail(i, "does not run from s to t");
    if (p.length() > static_cast<std::size_t>(base.ell)) {
      return fail(i, "length " + std::to_string(p.length()) + " exceeds " +
                         std::to_string(base.ell));
    }

    // Entries of the list must occur on the path in order.
    const auto entries = inst.lists[i].entries();
    std::size_t next = 0;
    for (Vertex v : p.vertices) {
      if (next < entries.size() && v == entries[next]) ++next;
    }
    if (next != entries.size()) return fail(i, "does not visit its checkpoint list in order");

    if (p.length() == 1) {
      if (direct) return fail(i, "reuses the edge {s, t} of path " + std::to_string(*direct));
      direct = i;
    }
    for (Vertex v : p.interior()) {
      if (owner[v] != -1) {
        return fail(i, "shares vertex " + std::to_string(v) + " with path " +
                           std::to_string(owner[v]));
      }
      owner[v] = static_cast<int>(i);
    }
  }
  return {};
}

ValidationReport validate_solution(const SppInstance& inst, const Solution& sol) {
  return validate_solution(from_spp(inst), sol);
}

}  // namespace spp
