#pragma once

#include <cstdint>
#include <random>

#include "spp/graph.hpp"

namespace spp {

/// Uniform double in [0, 1) from the top 53 bits of one engine draw. Unlike
/// std::uniform_real_distribution, the result is fixed across standard
/// library implementations.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound);

/// G(n, p): each pair u < v, in lexicographic order, becomes an edge when
/// its draw falls below p.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace spp
