#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "spp/generate.hpp"
#include "spp/graph.hpp"
#include "spp/model.hpp"

namespace spp::test {

// Fixture vertices are written v1..vN like the drawings; internally 0-based.
constexpr Vertex v(int i) { return static_cast<Vertex>(i - 1); }

inline std::shared_ptr<const Graph> make_graph(std::size_t n,
                                               std::initializer_list<std::pair<int, int>> one_based) {
  std::vector<Edge> edges;
  for (auto [a, b] : one_based) edges.emplace_back(v(a), v(b));
  return std::make_shared<const Graph>(Graph::from_edges(n, edges));
}

inline std::shared_ptr<const Graph> gex() {
  return make_graph(11, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}, {6, 7}, {7, 8}, {8, 4}, {2, 9},
                         {9, 10}, {10, 11}, {11, 5}});
}

// s=1, a=2, t=3.
inline std::shared_ptr<const Graph> path_sat() { return make_graph(3, {{1, 2}, {2, 3}}); }

// s=1, a=2, t=3, b=4.
inline std::shared_ptr<const Graph> four_cycle() {
  return make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
}

// s=1, m=2, v1=3, x=4, y=5, v2=6, t=7.
inline std::shared_ptr<const Graph> fc2_fixture() {
  return make_graph(7, {{1, 2}, {2, 3}, {2, 6}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
}

inline SppInstance instance(std::shared_ptr<const Graph> g, Vertex s, Vertex t, int k, int ell) {
  return SppInstance{std::move(g), s, t, k, ell};
}

inline std::shared_ptr<const Graph> random_graph(std::size_t n, double p, std::uint64_t seed) {
  return std::make_shared<const Graph>(gnp(n, p, seed));
}

// A random pair of distinct vertices, connected or not.
inline std::pair<Vertex, Vertex> random_pair(std::size_t n, std::mt19937_64& rng) {
  const auto s = static_cast<Vertex>(bounded(rng, n));
  auto t = static_cast<Vertex>(bounded(rng, n - 1));
  if (t >= s) ++t;
  return {s, t};
}

// Plain recursive DFS over simple paths avoiding `hidden`; shares nothing
// with the BFS or the oracle.
inline int dfs_min_length(const Graph& g, const std::vector<bool>& hidden, Vertex a, Vertex b) {
  int best = -1;
  std::vector<bool> on(g.vertex_count(), false);
  auto rec = [&](auto&& self, Vertex u, int len) -> void {
    if (u == b) {
      if (best < 0 || len < best) best = len;
      return;
    }
    if (best >= 0 && len >= best) return;
    on[u] = true;
    for (Vertex w : g.neighbors(u)) {
      if (!on[w] && !hidden[w]) self(self, w, len + 1);
    }
    on[u] = false;
  };
  rec(rec, a, 0);
  return best;
}

inline std::set<Vertex> as_set(std::span<const Vertex> vs) { return {vs.begin(), vs.end()}; }

inline std::set<std::vector<Vertex>> path_set(const Solution& sol) {
  std::set<std::vector<Vertex>> out;
  for (const Path& p : sol.paths) out.insert(p.vertices);
  return out;
}

}  // namespace spp::test
