#pragma once

#include <atomic>
#include <cstdint>

#include "lpdist/types.hpp"

namespace lpdist {

// Running totals of convolution work. Atomic so that parallel level
// evaluation keeps exact counts; the bench harness reads these to compare
// against the predicted operation model.
struct ConvCounters {
  std::atomic<std::uint64_t> correlate_calls{0};
  std::atomic<std::uint64_t> block_correlations{0};
  std::atomic<std::uint64_t> fft_transforms{0};
  std::atomic<std::uint64_t> direct_term_sums{0};
};

ConvCounters& conv_counters();
void reset_conv_counters();

/// Default FFT block length: 2 * (m rounded up to a power of two).
int default_block_length(Eigen::Index m);

/// Resolve a requested block length: 0 means default; otherwise it is rounded
/// up to a power of two >= 2m.
int normalize_block_length(Eigen::Index m, int requested);

/// Number of text chunks one correlate call processes: the text is walked in
/// steps of block/2, so this is ceil((n-m+1) / (block/2)).
Eigen::Index correlate_block_count(Eigen::Index n, Eigen::Index m, int block_length);

/// Sliding cross-correlation: out[i] = sum_j text[i+j] * pattern[j] for
/// i = 0..n-m. Computed blockwise with FFTs of length `block_length`, so the
/// total work is O(n log m). Per-entry absolute error is bounded by about
/// 8 * m * log2(block) * max|text| * max|pattern| * machine-epsilon.
RealArray correlate(const RealArray& text, const RealArray& pattern, int block_length = 0);

/// Same contract as correlate, computed by the direct O(nm) double loop.
RealArray naive_correlate(const RealArray& text, const RealArray& pattern);

}  // namespace lpdist
