#pragma once

#include "lpdist/decomposition.hpp"
#include "lpdist/exact.hpp"
#include "lpdist/types.hpp"

namespace lpdist {

struct ApproxOptions {
  Route route = Route::Auto;
  int block_length = 0;     // 0 = 2 * next_pow2(m)
  double eta_override = 0;  // 0 = the algorithm's published eta formula
  int threads = 0;          // 0 = LPDIST_THREADS env var, else 1
};

/// Resolved thread count for the level loop.
int resolve_threads(int requested);

/// Shared pipeline: per-position sums of all modular level contributions
/// (p-th-power scale, unclamped). Inputs are fixed-point numerators on the
/// params grid. Levels are evaluated independently (optionally in parallel)
/// and accumulated lowest-first with compensated summation.
RealArray decomposition_power_sums(const SymbolArray& text_numerators,
                                   const SymbolArray& pattern_numerators,
                                   const DecompParams& params, const ApproxOptions& options);

/// Deterministic (1+eps)-approximate lp text-to-pattern distance for p >= 1.
/// Requires eps in (0, 1/p] and eps >= 4/U (below that, exact computation is
/// the right tool). Output is on the lp value scale.
DistanceArray approx_lp_ge1(const IntString& text, const IntString& pattern, double p,
                            double eps, const ApproxOptions& options = {});

}  // namespace lpdist
