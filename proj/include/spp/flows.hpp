#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spp/graph.hpp"

namespace spp {

/// Directed graph with every vertex v split into v_in -> v_out, and every
/// undirected edge {u, v} replaced by u_out -> v_in and v_out -> u_in.
/// Vertex-disjoint paths in the original graph become arc-disjoint paths
/// here, and an original path of length L maps to a split path of length
/// 2L - 1. Every arc has unit capacity and unit cost.
///
/// Arcs are stored together with their residual twins in per-node CSR
/// order; `arc_count()` reports forward arcs only (n + 2m).
class SplitDigraph {
 public:
  enum class ArcKind : std::uint8_t { kInternal, kCross, kResidual };

  struct Arc {
    std::int32_t head;
    std::int32_t twin;
    ArcKind kind;
  };

  explicit SplitDigraph(const Graph& g);

  static std::int32_t in_node(Vertex v) { return 2 * v; }
  static std::int32_t out_node(Vertex v) { return 2 * v + 1; }
  static Vertex original(std::int32_t node) { return node / 2; }

  std::size_t node_count() const { return offsets_.size() - 1; }
  std::size_t arc_count() const { return forward_arcs_; }
  std::size_t slot_count() const { return arcs_.size(); }

  std::int32_t first_slot(std::int32_t node) const { return offsets_[node]; }
  std::int32_t end_slot(std::int32_t node) const { return offsets_[node + 1]; }
  const Arc& arc(std::int32_t slot) const { return arcs_[slot]; }
  std::int32_t tail(std::int32_t slot) const { return tails_[slot]; }

  /// Initial residual capacity of every slot: 1 for forward arcs, 0 for twins.
  std::vector<std::uint8_t> initial_capacity() const;

 private:
  std::vector<std::int32_t> offsets_;
  std::vector<Arc> arcs_;
  std::vector<std::int32_t> tails_;
  std::size_t forward_arcs_ = 0;
};

/// Builds the split digraph of `g`.
SplitDigraph split_transform(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths in the masked
/// view, computed as unit-capacity max flow from s_out to t_in with BFS
/// augmentations. Stops early once `limit` paths are found. Hidden vertices
/// other than s and t carry no flow.
int max_disjoint_paths(const SplitDigraph& d, const VertexMask& mask, Vertex s, Vertex t,
                       int limit = std::numeric_limits<int>::max());

struct SeparatorResult {
  /// Menger count: maximum number of internally vertex-disjoint s-t paths,
  /// the direct edge counting as one path when s and t are adjacent.
  int flow_value = 0;
  bool terminals_adjacent = false;

  /// Size of a minimum s-t vertex separator, absent when s and t are
  /// adjacent (no vertex set separates them).
  std::optional<int> separator_size() const {
    if (terminals_adjacent) return std::nullopt;
    return flow_value;
  }
};

SeparatorResult min_vertex_separator_size(const Graph& g, Vertex s, Vertex t);

struct DisjointPathsResult {
  std::vector<Path> paths;
  int total_length = 0;
  /// Total length of the corresponding s_out -> t_in paths in the split
  /// digraph; total_length == (split_length + k) / 2.
  int split_length = 0;
};

/// k internally vertex-disjoint s-t paths of minimum total length, or absent
/// when fewer than k disjoint paths exist. Successive shortest augmenting
/// paths with vertex potentials on the split digraph.
std::optional<DisjointPathsResult> min_total_length_disjoint_paths(const Graph& g, Vertex s,
                                                                   Vertex t, int k);

}  // namespace spp
