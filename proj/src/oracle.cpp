#include "spp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace spp::oracle {

namespace {

struct Item {
  const Path* path = nullptr;
  std::vector<std::uint64_t> interior;  // bitset over vertices
  bool direct = false;                  // the single edge {s, t}
};

std::vector<Item> make_items(const std::vector<Path>& paths, std::size_t n) {
  const std::size_t words = (n + 63) / 64;
  std::vector<Item> items;
  items.reserve(paths.size());
  for (const Path& p : paths) {
    Item it{&p, std::vector<std::uint64_t>(words, 0), p.length() == 1};
    for (Vertex v : p.interior()) it.interior[v / 64] |= std::uint64_t{1} << (v % 64);
    items.push_back(std::move(it));
  }
  return items;
}

bool compatible(const Item& a, const Item& b) {
  if (a.direct && b.direct) return false;
  for (std::size_t w = 0; w < a.interior.size(); ++w) {
    if (a.interior[w] & b.interior[w]) return false;
  }
  return true;
}

bool visits_in_order(const Path& p, const CheckpointList& list) {
  std::size_t next = 0;
  for (Vertex v : p.vertices) {
    if (next < list.size() && v == list[next]) ++next;
  }
  return next == list.size();
}

// Chooses `need` pairwise compatible items from `pool` (indices into items),
// in increasing index order.
bool pack(const std::vector<Item>& items, const std::vector<std::size_t>& pool, int need,
          std::vector<std::size_t>& chosen) {
  if (need == 0) return true;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    if (pool.size() - a < static_cast<std::size_t>(need)) break;
    std::vector<std::size_t> rest;
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      if (compatible(items[pool[a]], items[pool[b]])) rest.push_back(pool[b]);
    }
    if (rest.size() + 1 < static_cast<std::size_t>(need)) continue;
    chosen.push_back(pool[a]);
    if (pack(items, rest, need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

// One item per distinct interior set. Paths with equal interiors are
// interchangeable for packing; the direct edge is unique anyway.
std::vector<std::size_t> distinct_pool(const std::vector<Item>& items) {
  std::vector<std::size_t> pool;
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return items[a].interior < items[b].interior; });
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && items[order[k]].interior == items[order[k - 1]].interior) continue;
    pool.push_back(order[k]);
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Hop distances to `t` by repeated relaxation; deliberately not the BFS the
// solver uses.
std::vector<int> hops_to(const Graph& g, Vertex t) {
  std::vector<int> d(g.vertex_count(), kUnreachable);
  d[t] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex u = 0; static_cast<std::size_t>(u) < g.vertex_count(); ++u) {
      for (Vertex w : g.neighbors(u)) {
        if (d[w] != kUnreachable && d[w] + 1 < d[u]) {
          d[u] = d[w] + 1;
          changed = true;
        }
      }
    }
  }
  return d;
}

}  // namespace

std::vector<Path> enumerate_bounded_paths(const Graph& g, Vertex s, Vertex t, int ell) {
  std::vector<Path> out;
  if (s == t || ell < 1) return out;
  const std::vector<int> to_t = hops_to(g, t);
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<Vertex> stack{s};
  on_path[s] = 1;
  std::function<void()> dfs = [&]() {
    const Vertex u = stack.back();
    const int used = static_cast<int>(stack.size()) - 1;
    for (Vertex w : g.neighbors(u)) {
      if (on_path[w]) continue;
      if (to_t[w] == kUnreachable || used + 1 + to_t[w] > ell) continue;
      stack.push_back(w);
      if (w == t) {
        out.push_back(Path{stack});
      } else {
        on_path[w] = 1;
        dfs();
        on_path[w] = 0;
      }
      stack.pop_back();
    }
  };
  dfs();
  return out;
}

Answer decide(const SppInstance& inst) {
  inst.check();
  const auto paths = enumerate_bounded_paths(inst.g(), inst.s, inst.t, inst.ell);
  const auto items = make_items(paths, inst.g().vertex_count());
  std::vector<std::size_t> chosen;
  Answer ans;
  if (pack(items, distinct_pool(items), inst.k, chosen)) {
    ans.yes = true;
    Solution sol;
    for (std::size_t i : chosen) sol.paths.push_back(*items[i].path);
    ans.witness = std::move(sol);
  }
  return ans;
}

namespace {

// Visits every assignment of one path per list, pairwise compatible.
// The callback returns false to stop.
void assign(const SppcInstance& inst, const std::function<bool(const Solution&)>& emit) {
  const auto paths = enumerate_bounded_paths(inst.g(), inst.base.s, inst.base.t, inst.base.ell);
  const auto items = make_items(paths, inst.g().vertex_count());
  std::vector<std::vector<std::size_t>> per_list(inst.lists.size());
  for (std::size_t i = 0; i < inst.lists.size(); ++i) {
    for (std::size_t p = 0; p < items.size(); ++p) {
      if (visits_in_order(*items[p].path, inst.lists[i])) per_list[i].push_back(p);
    }
  }
  std::vector<std::size_t> chosen;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == per_list.size()) {
      Solution sol;
      for (std::size_t c : chosen) sol.paths.push_back(*items[c].path);
      if (!emit(sol)) stop = true;
      return;
    }
    for (std::size_t p : per_list[i]) {
      bool ok = true;
      for (std::size_t c : chosen) ok = ok && c != p && compatible(items[c], items[p]);
      if (!ok) continue;
      chosen.push_back(p);
      rec(i + 1);
      chosen.pop_back();
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

Answer decide(const SppcInstance& inst) {
  inst.base.check();
  Answer ans;
  assign(inst, [&](const Solution& sol) {
    ans.yes = true;
    ans.witness = sol;
    return false;
  });
  return ans;
}

std::vector<Solution> all_solutions(const SppcInstance& inst, std::size_t limit) {
  inst.base.check();
  std::vector<Solution> out;
  if (limit == 0) return out;
  assign(inst, [&](const Solution& sol) {
    out.push_back(sol);
    return out.size() < limit;
  });
  return out;
}

int max_packing(const Graph& g, Vertex s, Vertex t, int ell) {
  const auto paths = enumerate_bounded_paths(g, s, t, ell);
  const auto items = make_items(paths, g.vertex_count());
  const auto pool = distinct_pool(items);
  int best = 0;
  std::vector<std::size_t> chosen;
  while (pack(items, pool, best + 1, chosen)) {
    ++best;
    chosen.clear();
  }
  return best;
}

std::optional<std::uint64_t> min_total_length(const Graph& g, Vertex s, Vertex t, int k) {
  const int n = static_cast<int>(g.vertex_count());
  auto paths = enumerate_bounded_paths(g, s, t, std::max(1, n - 1));
  std::stable_sort(paths.begin(), paths.end(),
                   [](const Path& a, const Path& b) { return a.length() < b.length(); });
  const auto items = make_items(paths, g.vertex_count());
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t sum) {
    const int need = k - static_cast<int>(chosen.size());
    if (need == 0) {
      best = std::min(best, sum);
      return;
    }
    for (std::size_t p = from; p < items.size(); ++p) {
      // Lengths are non-decreasing from here on.
      if (sum + static_cast<std::uint64_t>(need) * items[p].path->length() >= best) break;
      bool ok = true;
      for (std::size_t c : chosen) ok = ok && compatible(items[c], items[p]);
      if (!ok) continue;
      chosen.push_back(p);
      rec(p + 1, sum + items[p].path->length());
      chosen.pop_back();
    }
  };
  rec(0, 0);
  if (best == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return best;
}

}  // namespace spp::oracle
