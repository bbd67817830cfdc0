#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "spp/model.hpp"

namespace spp {

/// Outcome of shrinking the input graph to the vertices that can lie on a
/// solution path.
struct ReductionReport {
  std::vector<Vertex> kept;         // original ids, ascending
  std::vector<Vertex> to_reduced;   // original id -> reduced id, -1 if dropped
  std::size_t n_before = 0;
  std::size_t n_after = 0;
  std::size_t m_before = 0;
  std::size_t m_after = 0;
  std::size_t dropped_by_distance = 0;
  std::size_t dropped_by_degree = 0;

  Vertex to_original(Vertex reduced) const { return kept[reduced]; }
  Path to_original(const Path& p) const;
  Solution to_original(const Solution& sol) const;
};

/// Keeps N_ell(s) ∩ N_ell(t) ∩ (N_{ell/2}(s) ∪ N_{ell/2}(t)), then strips
/// vertices of degree <= 1 (other than s and t) until none remain. The
/// reduced instance has the same answer. Checkpoints must survive; losing
/// one is an internal error.
std::pair<SppcInstance, ReductionReport> reduce(const SppcInstance& inst);

/// Identity report for a graph that is used as-is.
ReductionReport identity_reduction(const Graph& g);

enum class TrivialVerdict { kYes, kNo, kUnknown };

enum class TrivialRule {
  kNone,
  kEllOne,
  kEllTwo,
  kSinglePath,
  kSeparator,
  kMinTotalLength,
};

std::string_view to_string(TrivialRule rule);

struct TrivialOutcome {
  TrivialVerdict verdict = TrivialVerdict::kUnknown;
  TrivialRule rule = TrivialRule::kNone;
  std::optional<Solution> witness;
  /// Menger count when the separator test ran.
  std::optional<int> separator_flow;
};

/// Root-only detection of instances whose answer follows from polynomial
/// tests: the ell = 1, ell = 2 and k = 1 fast cases, the disjoint-path
/// count, and k disjoint paths of minimum total length.
TrivialOutcome detect_trivial(const SppcInstance& inst);
TrivialOutcome detect_trivial(const SppInstance& inst);

}  // namespace spp
