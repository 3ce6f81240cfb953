#pragma once

#include "lpdist/approx.hpp"
#include "lpdist/types.hpp"

namespace lpdist {

/// Randomized (1+eps)-approximate Hamming text-to-pattern distance: the
/// p -> 0 limit of the randomized lp estimator, with indicator-valued level
/// kernels and eta = eps / (144 * log2 U). Output entries are integer counts
/// in [0, m], the per-position median over `repetitions` runs (odd; 0 = default).
DistanceArray approx_hamming(const IntString& text, const IntString& pattern, double eps,
                             std::uint64_t seed, int repetitions = 0,
                             const ApproxOptions& options = {});

}  // namespace lpdist
