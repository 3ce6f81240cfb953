#pragma once

#include "lpdist/approx.hpp"
#include "lpdist/decomposition.hpp"
#include "lpdist/types.hpp"

namespace lpdist {

/// Multiplicative scale r in [1, 9), drawn on the 2^-value_bits grid so that
/// r * symbol stays exact in fixed point.
struct RandomScale {
  FixedPoint r;
  std::uint64_t seed = 0;
};

/// Counter-based derivation of the k-th run's scale: deterministic in
/// (seed, run_index), independent across runs.
RandomScale draw_scale(std::uint64_t seed, std::uint64_t run_index, int value_bits);

/// Default amplification count: 2 * ceil(log2 n) + 1 (odd, so the median is
/// an element).
int default_repetitions(Eigen::Index n);

/// One run of the randomized (1+eps) lp estimator for 0 < p < 1: scale both
/// strings by r, run the decomposition over the extended level range, divide
/// the p-th-power sums by r^p, return lp values.
DistanceArray approx_lp_le1_single(const IntString& text, const IntString& pattern, double p,
                                   double eps, const RandomScale& scale,
                                   const ApproxOptions& options = {});

/// Median amplification over `repetitions` independent runs (odd; 0 = default).
/// Requires eps >= 12*(ln 2)^2 / U.
DistanceArray approx_lp_le1(const IntString& text, const IntString& pattern, double p,
                            double eps, std::uint64_t seed, int repetitions = 0,
                            const ApproxOptions& options = {});

}  // namespace lpdist
