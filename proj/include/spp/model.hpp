#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spp/graph.hpp"

namespace spp {

/// Short Path Packing instance: are there k internally vertex-disjoint s-t
/// paths of length at most ell?
struct SppInstance {
  std::shared_ptr<const Graph> graph;
  Vertex s = 0;
  Vertex t = 0;
  int k = 1;
  int ell = 1;

  const Graph& g() const { return *graph; }

  /// Throws UsageError on out-of-range terminals, s == t, k < 1 or ell < 1.
  void check() const;
};

/// Ordered terminal list (s, c_1, ..., c_r, t). Interior entries are
/// checkpoints; they are distinct and never equal to s or t.
class CheckpointList {
 public:
  CheckpointList(Vertex s, Vertex t) : entries_{s, t} {}
  explicit CheckpointList(std::vector<Vertex> entries);

  std::size_t size() const { return entries_.size(); }
  Vertex operator[](std::size_t i) const { return entries_[i]; }
  Vertex front() const { return entries_.front(); }
  Vertex back() const { return entries_.back(); }
  std::span<const Vertex> entries() const { return entries_; }
  std::span<const Vertex> checkpoints() const {
    return std::span<const Vertex>(entries_).subspan(1, entries_.size() - 2);
  }
  bool bare() const { return entries_.size() == 2; }

  /// Index of v in the list, if present.
  std::optional<std::size_t> position(Vertex v) const;

  /// Inserts v so that it ends up at `index`; 1 <= index <= size() - 1.
  void insert(std::size_t index, Vertex v);

  friend bool operator==(const CheckpointList&, const CheckpointList&) = default;

 private:
  std::vector<Vertex> entries_;
};

/// An SPP instance extended with one checkpoint list per path.
struct SppcInstance {
  SppInstance base;
  std::vector<CheckpointList> lists;

  const Graph& g() const { return base.g(); }
  bool is_checkpoint(Vertex v) const;
};

/// Symmetry-breaking record: inserting x between the consecutive entries a
/// and b of list `list` led to no solution, so within the recording scope no
/// solution path for that list visits a, x, b in this order.
struct ForbiddenInterval {
  std::size_t list = 0;
  Vertex a = 0;
  Vertex b = 0;
  Vertex x = 0;

  friend bool operator==(const ForbiddenInterval&, const ForbiddenInterval&) = default;
};

struct Solution {
  std::vector<Path> paths;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::optional<std::size_t> path_index;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Reduction from SPP: k lists, each exactly (s, t).
SppcInstance from_spp(const SppInstance& spp);

/// Checks every solution invariant against the original graph: k paths, each
/// an s-t path of length <= ell that visits its list in order, pairwise
/// internally vertex-disjoint. Reports the first violation.
ValidationReport validate_solution(const SppcInstance& inst, const Solution& sol);
ValidationReport validate_solution(const SppInstance& inst, const Solution& sol);

/// A list with more than ell + 1 entries cannot be satisfied by a path of
/// length at most ell.
inline bool is_list_trivially_too_long(const CheckpointList& list, int ell) {
  return list.size() > static_cast<std::size_t>(ell) + 1;
}

}  // namespace spp
