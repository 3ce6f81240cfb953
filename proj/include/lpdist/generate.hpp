#pragma once

#include <cstdint>

#include "lpdist/types.hpp"

namespace lpdist {

enum class InputDistribution {
  Uniform,
  // Most symbols land within distance 1 of a multiple of some 2^i with
  // i >= u/2, stressing the rounding-boundary regimes.
  AdversarialNearBoundary,
};

/// Deterministic instance generator (same seed, same string on any platform).
IntString generate_string(Eigen::Index n, std::uint64_t value_bound, InputDistribution dist,
                          std::uint64_t seed);

}  // namespace lpdist
