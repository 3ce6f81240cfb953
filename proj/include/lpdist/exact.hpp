#pragma once

#include <functional>

#include "lpdist/types.hpp"

namespace lpdist {

/// How a sliding kernel sum is evaluated. Fft is the blocked-convolution
/// decomposition (one correlation per reduced character); Direct is the
/// grouped table walk. Both satisfy the same contract; Auto picks the
/// cheaper one from the size/alphabet cost model.
enum class Route { Auto, Fft, Direct };

using ReduceFn = std::function<std::uint32_t(std::uint64_t)>;
using KernelFn = std::function<double(std::uint64_t, std::uint64_t)>;

/// Ground-truth oracle: out[i] = sum_j |t[i+j] - q[j]|^p (p-th powers, no root).
DistanceArray brute_force_lp(const IntString& text, const IntString& pattern, double p);

/// Ground-truth oracle: out[i] = number of mismatching positions in window i.
DistanceArray brute_force_hamming(const IntString& text, const IntString& pattern);

/// Core sliding kernel sum over already-reduced strings:
/// out[i] = sum_j kernel(text[i+j], pattern[j]), symbols in [0, alphabet).
/// The Fft route runs `alphabet` correlations of indicator texts against
/// kernel-valued patterns.
RealArray reduced_distance(const ReducedArray& text, const ReducedArray& pattern,
                           const KernelFn& kernel, std::uint64_t alphabet,
                           Route route = Route::Auto, int block_length = 0);

/// Text-to-pattern distance under an arbitrary kernel that factors through
/// reduced alphabets: out[i] = sum_j kernel(reduce_text(t[i+j]), reduce_pattern(q[j])).
DistanceArray small_alphabet_distance(const IntString& text, const IntString& pattern,
                                      const ReduceFn& reduce_text,
                                      const ReduceFn& reduce_pattern, const KernelFn& kernel,
                                      std::uint64_t alphabet, Route route = Route::Auto,
                                      int block_length = 0);

/// Exact p-th-power lp distance for even integer p, via binomial expansion
/// into p+1 correlations of power vectors. Rejects instances where
/// m * U^p reaches 2^53 (double significand limit).
DistanceArray exact_even_p(const IntString& text, const IntString& pattern, int p,
                           int block_length = 0);

}  // namespace lpdist
