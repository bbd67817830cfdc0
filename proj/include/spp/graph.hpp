#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spp {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Distance value for vertices that are unreachable or outside a radius.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Raised when a caller violates an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph in compressed adjacency form.
/// Neighbor lists are sorted ascending, which fixes BFS exploration order.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on vertices 0..n-1. Throws UsageError on self loops,
  /// out-of-range endpoints, or duplicate edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < vertex_count();
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool adjacent(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `kept` (sorted ascending, distinct). Vertex kept[i]
  /// becomes vertex i, so relative id order is preserved.
  Graph induced(std::span<const Vertex> kept) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Set of vertices treated as absent together with their incident edges.
/// Hiding is counted, so independent layers can hide and reveal the same
/// vertex without interfering.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t n) : layers_(n, 0) {}

  void hide(Vertex v) { ++layers_[v]; }
  void reveal(Vertex v) { --layers_[v]; }
  bool hidden(Vertex v) const {
    return static_cast<std::size_t>(v) < layers_.size() && layers_[v] != 0;
  }
  void clear() { std::fill(layers_.begin(), layers_.end(), 0); }
  std::size_t size() const { return layers_.size(); }

 private:
  std::vector<std::uint16_t> layers_;
};

/// Non-empty sequence of distinct, consecutively adjacent vertices.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::span<const Vertex> interior() const {
    if (vertices.size() < 2) return {};
    return std::span<const Vertex>(vertices).subspan(1, vertices.size() - 2);
  }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// True iff `p` is a path of `g`: non-empty, distinct vertices, consecutive
/// pairs adjacent.
bool is_path(const Graph& g, const Path& p);

/// Reusable BFS buffers. Not thread-safe; one per solver run.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(const Graph& g);

  const Graph& graph() const { return *graph_; }

  /// Shortest a-b path avoiding hidden vertices. When `override_endpoints`
  /// is set, a and b are usable even if the mask hides them. With
  /// `skip_direct_edge` the edge {a, b} itself is not used.
  std::optional<Path> shortest_path(const VertexMask& mask, Vertex a, Vertex b,
                                    bool override_endpoints = false,
                                    bool skip_direct_edge = false);

  /// Distances from src within `radius` (kUnreachable elsewhere).
  std::vector<int> distances(const VertexMask& mask, Vertex src,
                             std::optional<int> radius = std::nullopt);

 private:
  bool visible(const VertexMask& mask, Vertex v) const;
  void next_epoch();

  const Graph* graph_;
  std::vector<std::uint32_t> seen_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> queue_;
  std::uint32_t epoch_ = 0;
};

/// Minimum-length a-b path in the masked view, ties broken by exploring
/// neighbors in ascending id order. a == b yields the single-vertex path.
std::optional<Path> shortest_path(const Graph& g, const VertexMask& mask, Vertex a, Vertex b);

/// Exact BFS distances from src; entries beyond `radius` or unreachable are
/// kUnreachable.
std::vector<int> distances_from(const Graph& g, const VertexMask& mask, Vertex src,
                                std::optional<int> radius = std::nullopt);

/// Sorted vertex set {u : dist(src, u) <= r}.
std::vector<Vertex> neighborhood(const Graph& g, Vertex src, int r);

}  // namespace spp
