#include "lpdist/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lpdist/convolution.hpp"
#include "lpdist/exact.hpp"
#include "lpdist/generate.hpp"
#include "lpdist/hamming.hpp"
#include "lpdist/randomized.hpp"
#include "lpdist/util.hpp"

namespace lpdist {

namespace {

DistanceArray to_lp_values(DistanceArray dist, double p) {
  if (dist.scale == Scale::PowerSums) {
    dist.values = dist.values.max(0.0).pow(1.0 / p);
    dist.scale = Scale::LpValues;
  }
  return dist;
}

}  // namespace

DistanceArray run_algorithm(const IntString& text, const IntString& pattern,
                            const AlgorithmConfig& config) {
  const std::string& algo = config.algorithm;
  const bool hamming = config.p == 0.0;
  if (algo == "exact-brute")
    return hamming ? brute_force_hamming(text, pattern)
                   : to_lp_values(brute_force_lp(text, pattern, config.p), config.p);
  if (algo == "exact-alphabet") {
    if (text.value_bound > (1u << 16))
      throw std::invalid_argument("exact-alphabet: value bound too large, use an approximation");
    const double p = config.p;
    auto identity = [](std::uint64_t s) { return static_cast<std::uint32_t>(s); };
    auto kernel = [p](std::uint64_t a, std::uint64_t b) {
      return powp(std::abs(static_cast<double>(a) - static_cast<double>(b)), p);
    };
    DistanceArray dist = small_alphabet_distance(text, pattern, identity, identity, kernel,
                                                 text.value_bound, config.options.route,
                                                 config.options.block_length);
    if (hamming) return {dist.values.round().max(0.0), Scale::Counts};
    return to_lp_values(std::move(dist), p);
  }
  if (algo == "exact-even-p") {
    const int p = static_cast<int>(config.p);
    if (static_cast<double>(p) != config.p)
      throw std::invalid_argument("exact-even-p: p must be an even integer");
    return to_lp_values(exact_even_p(text, pattern, p, config.options.block_length), config.p);
  }
  if (algo == "approx-hamming" || (hamming && (algo == "approx-det" || algo == "approx-rand")))
    return approx_hamming(text, pattern, config.eps, config.seed, config.repetitions,
                          config.options);
  if (algo == "approx-det")
    return approx_lp_ge1(text, pattern, config.p, config.eps, config.options);
  if (algo == "approx-rand")
    return approx_lp_le1(text, pattern, config.p, config.eps, config.seed, config.repetitions,
                         config.options);
  throw std::invalid_argument("unknown algorithm: " + algo);
}

std::uint64_t predicted_block_correlations(const DecompParams& params, Eigen::Index n,
                                           Eigen::Index m, int block_length) {
  const int block = normalize_block_length(m, block_length);
  return static_cast<std::uint64_t>(params.num_levels()) * params.reduced_alphabet *
         static_cast<std::uint64_t>(correlate_block_count(n, m, block));
}

BenchPoint bench_point(const AlgorithmConfig& config, Eigen::Index n, Eigen::Index m,
                       std::uint64_t value_bound, std::uint64_t instance_seed,
                       double min_seconds) {
  const IntString text = generate_string(n, value_bound, InputDistribution::Uniform, instance_seed);
  const IntString pattern =
      generate_string(m, value_bound, InputDistribution::Uniform, instance_seed + 1);

  BenchPoint point;
  point.n = n;
  point.m = m;
  point.value_bound = value_bound;
  point.algorithm = config.algorithm;
  point.p = config.p;
  point.eps = config.eps;
  point.block_length = normalize_block_length(m, config.options.block_length);
  point.blocks_per_call = correlate_block_count(n, m, point.block_length);

  reset_conv_counters();
  const auto t0 = std::chrono::steady_clock::now();
  run_algorithm(text, pattern, config);
  const auto t1 = std::chrono::steady_clock::now();
  point.correlations = conv_counters().block_correlations.load();
  point.fft_transforms = conv_counters().fft_transforms.load();

  if (config.algorithm == "approx-det") {
    const DecompParams params =
        config.options.eta_override > 0.0
            ? DecompParams::from_eta(config.p, config.eps, config.options.eta_override,
                                     value_bound, false)
            : DecompParams::deterministic(config.p, config.eps, value_bound);
    point.levels = params.num_levels();
    point.reduced_alphabet = params.reduced_alphabet;
    if (config.options.route == Route::Fft)
      point.predicted_correlations =
          predicted_block_correlations(params, n, m, config.options.block_length);
  }

  double total = std::chrono::duration<double>(t1 - t0).count();
  int runs = 1;
  while (total < min_seconds) {
    const auto a = std::chrono::steady_clock::now();
    run_algorithm(text, pattern, config);
    const auto b = std::chrono::steady_clock::now();
    total += std::chrono::duration<double>(b - a).count();
    ++runs;
  }
  point.seconds = total / runs;
  point.timed_runs = runs;
  return point;
}

std::string bench_csv_header() {
  return "algorithm,n,m,U,p,eps,levels,alphabet,block,blocks_per_call,"
         "correlations,predicted_correlations,fft_transforms,seconds,timed_runs";
}

std::string bench_csv_row(const BenchPoint& point) {
  std::ostringstream out;
  out << point.algorithm << ',' << point.n << ',' << point.m << ',' << point.value_bound << ','
      << point.p << ',' << point.eps << ',' << point.levels << ',' << point.reduced_alphabet
      << ',' << point.block_length << ',' << point.blocks_per_call << ',' << point.correlations
      << ',' << point.predicted_correlations << ',' << point.fft_transforms << ','
      << point.seconds << ',' << point.timed_runs;
  return out.str();
}

}  // namespace lpdist
