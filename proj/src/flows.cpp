#include "spp/flows.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace spp {

namespace {

struct RawArc {
  std::int32_t tail;
  std::int32_t head;
  SplitDigraph::ArcKind kind;
  std::int32_t pair;  // index of the forward arc this entry belongs to
  bool twin;
};

void check_terminals(const Graph& g, Vertex s, Vertex t) {
  if (!g.contains(s) || !g.contains(t)) throw UsageError("terminal out of range");
  if (s == t) throw UsageError("terminals must differ");
}

}  // namespace

SplitDigraph::SplitDigraph(const Graph& g) {
  const auto n = static_cast<std::int32_t>(g.vertex_count());
  std::vector<RawArc> raw;
  raw.reserve(2 * (g.vertex_count() + 2 * g.edge_count()));
  std::int32_t pair = 0;
  auto add = [&](std::int32_t a, std::int32_t b, ArcKind kind) {
    raw.push_back({a, b, kind, pair, false});
    raw.push_back({b, a, ArcKind::kResidual, pair, true});
    ++pair;
  };
  for (Vertex v = 0; v < n; ++v) add(in_node(v), out_node(v), ArcKind::kInternal);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) add(out_node(u), in_node(v), ArcKind::kCross);
  }
  forward_arcs_ = static_cast<std::size_t>(pair);

  std::stable_sort(raw.begin(), raw.end(), [](const RawArc& x, const RawArc& y) {
    return std::tie(x.tail, x.head, x.twin) < std::tie(y.tail, y.head, y.twin);
  });

  offsets_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
  for (const auto& r : raw) ++offsets_[r.tail + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];

  arcs_.resize(raw.size());
  tails_.resize(raw.size());
  std::vector<std::int32_t> slot_of_forward(forward_arcs_), slot_of_twin(forward_arcs_);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& r = raw[i];
    arcs_[i] = {r.head, -1, r.kind};
    tails_[i] = r.tail;
    (r.twin ? slot_of_twin : slot_of_forward)[r.pair] = static_cast<std::int32_t>(i);
  }
  for (std::size_t p = 0; p < forward_arcs_; ++p) {
    arcs_[slot_of_forward[p]].twin = slot_of_twin[p];
    arcs_[slot_of_twin[p]].twin = slot_of_forward[p];
  }
}

std::vector<std::uint8_t> SplitDigraph::initial_capacity() const {
  std::vector<std::uint8_t> cap(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    cap[i] = arcs_[i].kind == ArcKind::kResidual ? 0 : 1;
  }
  return cap;
}

SplitDigraph split_transform(const Graph& g) { return SplitDigraph(g); }

int max_disjoint_paths(const SplitDigraph& d, const VertexMask& mask, Vertex s, Vertex t,
                       int limit) {
  const std::int32_t source = SplitDigraph::out_node(s);
  const std::int32_t sink = SplitDigraph::in_node(t);
  auto usable = [&](std::int32_t node) {
    const Vertex v = SplitDigraph::original(node);
    return v == s || v == t || !mask.hidden(v);
  };

  std::vector<std::uint8_t> cap = d.initial_capacity();
  std::vector<std::int32_t> via(d.node_count(), -1);
  std::vector<std::int32_t> queue;
  queue.reserve(d.node_count());
  int flow = 0;
  while (flow < limit) {
    std::fill(via.begin(), via.end(), -1);
    via[source] = -2;
    queue.clear();
    queue.push_back(source);
    bool reached = false;
    for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
      const std::int32_t x = queue[head];
      for (std::int32_t slot = d.first_slot(x); slot < d.end_slot(x); ++slot) {
        const std::int32_t y = d.arc(slot).head;
        if (cap[slot] == 0 || via[y] != -1 || !usable(y)) continue;
        via[y] = slot;
        if (y == sink) {
          reached = true;
          break;
        }
        queue.push_back(y);
      }
    }
    if (!reached) break;
    for (std::int32_t y = sink; y != source;) {
      const std::int32_t slot = via[y];
      --cap[slot];
      ++cap[d.arc(slot).twin];
      y = d.tail(slot);
    }
    ++flow;
  }
  return flow;
}

SeparatorResult min_vertex_separator_size(const Graph& g, Vertex s, Vertex t) {
  check_terminals(g, s, t);
  const SplitDigraph d(g);
  return {max_disjoint_paths(d, VertexMask{}, s, t), g.adjacent(s, t)};
}

std::optional<DisjointPathsResult> min_total_length_disjoint_paths(const Graph& g, Vertex s,
                                                                   Vertex t, int k) {
  check_terminals(g, s, t);
  if (k < 1) throw UsageError("k must be at least 1");

  const SplitDigraph d(g);
  const std::int32_t source = SplitDigraph::out_node(s);
  const std::int32_t sink = SplitDigraph::in_node(t);
  const std::size_t nodes = d.node_count();
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  auto cost = [&](std::int32_t slot) {
    return d.arc(slot).kind == SplitDigraph::ArcKind::kResidual ? -1 : 1;
  };

  std::vector<std::uint8_t> cap = d.initial_capacity();

  // All forward costs are 1, so BFS distances are valid initial potentials.
  std::vector<long long> potential(nodes, kInf);
  {
    std::vector<std::int32_t> queue{source};
    potential[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t x = queue[head];
      for (std::int32_t slot = d.first_slot(x); slot < d.end_slot(x); ++slot) {
        const std::int32_t y = d.arc(slot).head;
        if (cap[slot] == 0 || potential[y] != kInf) continue;
        potential[y] = potential[x] + 1;
        queue.push_back(y);
      }
    }
  }

  long long split_total = 0;
  std::vector<long long> dist(nodes);
  std::vector<std::int32_t> via(nodes);
  using Item = std::pair<long long, std::int32_t>;
  for (int round = 0; round < k; ++round) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(via.begin(), via.end(), -1);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0;
    heap.emplace(0, source);
    while (!heap.empty()) {
      const auto [dx, x] = heap.top();
      heap.pop();
      if (dx != dist[x]) continue;
      for (std::int32_t slot = d.first_slot(x); slot < d.end_slot(x); ++slot) {
        if (cap[slot] == 0) continue;
        const std::int32_t y = d.arc(slot).head;
        if (potential[y] == kInf) continue;
        const long long reduced = cost(slot) + potential[x] - potential[y];
        if (dx + reduced < dist[y]) {
          dist[y] = dx + reduced;
          via[y] = slot;
          heap.emplace(dist[y], y);
        }
      }
    }
    if (dist[sink] == kInf) return std::nullopt;

    long long farthest = 0;
    for (std::size_t x = 0; x < nodes; ++x) {
      if (dist[x] != kInf) farthest = std::max(farthest, dist[x]);
    }
    for (std::size_t x = 0; x < nodes; ++x) {
      if (potential[x] == kInf) continue;
      potential[x] += dist[x] != kInf ? dist[x] : farthest;
    }
    split_total += potential[sink] - potential[source];

    for (std::int32_t y = sink; y != source;) {
      const std::int32_t slot = via[y];
      --cap[slot];
      ++cap[d.arc(slot).twin];
      y = d.tail(slot);
    }
  }

  // Forward arcs with zero residual capacity carry flow. Opposite cross arcs
  // that both carry flow cancel out.
  std::vector<std::uint8_t> carries(d.slot_count(), 0);
  for (std::size_t slot = 0; slot < d.slot_count(); ++slot) {
    carries[slot] = d.arc(slot).kind != SplitDigraph::ArcKind::kResidual && cap[slot] == 0;
  }
  auto find_cross = [&](std::int32_t from, std::int32_t to) -> std::int32_t {
    for (std::int32_t slot = d.first_slot(from); slot < d.end_slot(from); ++slot) {
      if (d.arc(slot).head == to && d.arc(slot).kind == SplitDigraph::ArcKind::kCross) {
        return slot;
      }
    }
    return -1;
  };
  for (std::int32_t slot = 0; slot < static_cast<std::int32_t>(d.slot_count()); ++slot) {
    if (!carries[slot] || d.arc(slot).kind != SplitDigraph::ArcKind::kCross) continue;
    const Vertex u = SplitDigraph::original(d.tail(slot));
    const Vertex v = SplitDigraph::original(d.arc(slot).head);
    const std::int32_t back = find_cross(SplitDigraph::out_node(v), SplitDigraph::in_node(u));
    if (back >= 0 && carries[back]) {
      carries[slot] = 0;
      carries[back] = 0;
    }
  }

  DisjointPathsResult result;
  result.split_length = static_cast<int>(split_total);
  for (int i = 0; i < k; ++i) {
    Path p{{s}};
    std::int32_t x = source;
    while (x != sink) {
      std::int32_t next = -1;
      for (std::int32_t slot = d.first_slot(x); slot < d.end_slot(x); ++slot) {
        if (carries[slot]) {
          carries[slot] = 0;
          next = d.arc(slot).head;
          break;
        }
      }
      if (next < 0) throw std::logic_error("flow decomposition failed");
      // next is some v_in; continue from v_out unless it is the sink.
      if (next != sink) {
        const std::int32_t out = next + 1;
        bool internal = false;
        for (std::int32_t slot = d.first_slot(next); slot < d.end_slot(next); ++slot) {
          if (carries[slot] && d.arc(slot).head == out) {
            carries[slot] = 0;
            internal = true;
            break;
          }
        }
        if (!internal) throw std::logic_error("flow decomposition lost an internal arc");
        p.vertices.push_back(SplitDigraph::original(next));
        x = out;
      } else {
        x = sink;
      }
    }
    p.vertices.push_back(t);
    result.total_length += static_cast<int>(p.length());
    result.paths.push_back(std::move(p));
  }
  return result;
}

}  // namespace spp
