#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spp/model.hpp"

/// Brute-force reference answers for small graphs. Everything here is
/// exhaustive enumeration and shares no logic with the solver.
namespace spp::oracle {

/// Every simple s-t path of length at most ell, in lexicographic order of
/// vertex sequences.
std::vector<Path> enumerate_bounded_paths(const Graph& g, Vertex s, Vertex t, int ell);

struct Answer {
  bool yes = false;
  std::optional<Solution> witness;
};

Answer decide(const SppInstance& inst);
Answer decide(const SppcInstance& inst);

/// Every solution of the instance, up to `limit` of them.
std::vector<Solution> all_solutions(const SppcInstance& inst, std::size_t limit = 100000);

/// Largest number of internally disjoint s-t paths of length at most ell.
int max_packing(const Graph& g, Vertex s, Vertex t, int ell);

/// Minimum total length of k internally disjoint s-t paths, if they exist.
std::optional<std::uint64_t> min_total_length(const Graph& g, Vertex s, Vertex t, int k);

}  // namespace spp::oracle
