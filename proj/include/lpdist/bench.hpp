#pragma once

#include <string>

#include "lpdist/approx.hpp"
#include "lpdist/types.hpp"

namespace lpdist {

/// One algorithm selection, shared by the dist/verify/bench front ends.
/// Algorithms: exact-brute, exact-alphabet, exact-even-p, approx-det,
/// approx-rand, approx-hamming. p = 0 means Hamming distance.
struct AlgorithmConfig {
  std::string algorithm = "exact-brute";
  double p = 1.0;
  double eps = 0.1;
  std::uint64_t seed = 0;
  int repetitions = 0;  // 0 = default for the randomized algorithms
  ApproxOptions options;
};

/// Dispatch to the chosen algorithm. Exact engines return lp values (the
/// 1/p root is applied here, at the API boundary); p = 0 returns counts.
DistanceArray run_algorithm(const IntString& text, const IntString& pattern,
                            const AlgorithmConfig& config);

/// The operation-count model for the deterministic approximation on the Fft
/// route: every level runs one correlation per reduced character, and each
/// correlation processes correlate_block_count blocks.
std::uint64_t predicted_block_correlations(const DecompParams& params, Eigen::Index n,
                                           Eigen::Index m, int block_length);

struct BenchPoint {
  Eigen::Index n = 0, m = 0;
  std::uint64_t value_bound = 0;
  std::string algorithm;
  double p = 0, eps = 0;
  int levels = 0;
  std::uint64_t reduced_alphabet = 0;
  int block_length = 0;
  Eigen::Index blocks_per_call = 0;
  std::uint64_t correlations = 0;            // measured block correlations
  std::uint64_t predicted_correlations = 0;  // 0 when the model does not apply
  std::uint64_t fft_transforms = 0;
  double seconds = 0;  // mean wall time per run
  int timed_runs = 0;
};

/// Generate a seeded uniform instance, run the algorithm until `min_seconds`
/// of cumulative wall time, and report counters plus mean time.
BenchPoint bench_point(const AlgorithmConfig& config, Eigen::Index n, Eigen::Index m,
                       std::uint64_t value_bound, std::uint64_t instance_seed,
                       double min_seconds);

std::string bench_csv_header();
std::string bench_csv_row(const BenchPoint& point);

}  // namespace lpdist
