#include "spp/graph.hpp"

#include <algorithm>
#include <string>

namespace spp {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw UsageError("edge endpoint out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
    }
    if (u == v) throw UsageError("self loop on vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw UsageError("duplicate edge " + std::to_string(v) + " " + std::to_string(*dup));
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; static_cast<std::size_t>(u) < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> kept) const {
  std::vector<Vertex> index(vertex_count(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = static_cast<Vertex>(i);
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (Vertex w : neighbors(kept[i])) {
      const Vertex j = index[w];
      if (j > static_cast<Vertex>(i)) sub.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return from_edges(kept.size(), sub);
}

bool is_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<Vertex> sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : p.vertices) {
    if (!g.contains(v)) return false;
  }
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    if (!g.adjacent(p.vertices[i - 1], p.vertices[i])) return false;
  }
  return true;
}

BfsWorkspace::BfsWorkspace(const Graph& g)
    : graph_(&g), seen_(g.vertex_count(), 0), parent_(g.vertex_count(), -1) {
  queue_.reserve(g.vertex_count());
}

void BfsWorkspace::next_epoch() {
  if (++epoch_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    epoch_ = 1;
  }
}

bool BfsWorkspace::visible(const VertexMask& mask, Vertex v) const { return !mask.hidden(v); }

std::optional<Path> BfsWorkspace::shortest_path(const VertexMask& mask, Vertex a, Vertex b,
                                                bool override_endpoints, bool skip_direct_edge) {
  const Graph& g = *graph_;
  if (!g.contains(a) || !g.contains(b)) throw UsageError("shortest_path: vertex out of range");
  if (!override_endpoints && (mask.hidden(a) || mask.hidden(b))) {
    throw UsageError("shortest_path: endpoint is masked");
  }
  if (a == b) return Path{{a}};

  next_epoch();
  queue_.clear();
  queue_.push_back(a);
  seen_[a] = epoch_;
  parent_[a] = -1;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex u = queue_[head];
    for (Vertex w : g.neighbors(u)) {
      if (seen_[w] == epoch_) continue;
      if (w != b && !visible(mask, w)) continue;
      if (w == b && u == a && skip_direct_edge) continue;
      seen_[w] = epoch_;
      parent_[w] = u;
      if (w == b) {
        Path p;
        for (Vertex x = b; x != -1; x = parent_[x]) p.vertices.push_back(x);
        std::reverse(p.vertices.begin(), p.vertices.end());
        return p;
      }
      queue_.push_back(w);
    }
  }
  return std::nullopt;
}

std::vector<int> BfsWorkspace::distances(const VertexMask& mask, Vertex src,
                                         std::optional<int> radius) {
  const Graph& g = *graph_;
  if (!g.contains(src)) throw UsageError("distances: vertex out of range");
  if (mask.hidden(src)) throw UsageError("distances: source is masked");
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  dist[src] = 0;
  queue_.clear();
  queue_.push_back(src);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex u = queue_[head];
    if (radius && dist[u] >= *radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreachable || mask.hidden(w)) continue;
      dist[w] = dist[u] + 1;
      queue_.push_back(w);
    }
  }
  return dist;
}

std::optional<Path> shortest_path(const Graph& g, const VertexMask& mask, Vertex a, Vertex b) {
  BfsWorkspace bfs(g);
  return bfs.shortest_path(mask, a, b);
}

std::vector<int> distances_from(const Graph& g, const VertexMask& mask, Vertex src,
                                std::optional<int> radius) {
  BfsWorkspace bfs(g);
  return bfs.distances(mask, src, radius);
}

std::vector<Vertex> neighborhood(const Graph& g, Vertex src, int r) {
  if (r < 0) throw UsageError("neighborhood: negative radius");
  const auto dist = distances_from(g, VertexMask{}, src, r);
  std::vector<Vertex> out;
  for (Vertex v = 0; static_cast<std::size_t>(v) < dist.size(); ++v) {
    if (dist[v] != kUnreachable) out.push_back(v);
  }
  return out;
}

}  // namespace spp
