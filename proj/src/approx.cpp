#include "lpdist/approx.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lpdist {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LPDIST_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

RealArray decomposition_power_sums(const SymbolArray& text_numerators,
                                   const SymbolArray& pattern_numerators,
                                   const DecompParams& params, const ApproxOptions& options) {
  const Eigen::Index n = text_numerators.size();
  const Eigen::Index m = pattern_numerators.size();
  if (m < 1 || m > n) throw std::invalid_argument("need 1 <= pattern length <= text length");

  const int levels = params.num_levels();
  std::vector<RealArray> per_level(levels);
  auto eval_level = [&](int idx) {
    const int level = params.level_lo + idx;
    const LevelKernel kernel(level, params);
    const ReducedArray rt = reduce_symbols(text_numerators, level, params);
    const ReducedArray rp = reduce_symbols(pattern_numerators, level, params);
    per_level[idx] = reduced_distance(
        rt, rp, [&kernel](std::uint64_t a, std::uint64_t b) { return kernel(a, b); },
        params.reduced_alphabet, options.route, options.block_length);
  };

  const int threads = std::min(resolve_threads(options.threads), levels);
  if (threads <= 1) {
    for (int idx = 0; idx < levels; ++idx) eval_level(idx);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        try {
          for (int idx = next.fetch_add(1); idx < levels; idx = next.fetch_add(1))
            eval_level(idx);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  // Magnitudes grow geometrically with the level; sum lowest-first with
  // compensation so cancellation between signed terms stays bounded.
  RealArray total = RealArray::Zero(n - m + 1);
  RealArray comp = RealArray::Zero(n - m + 1);
  for (int idx = 0; idx < levels; ++idx) {
    RealArray y = per_level[idx] - comp;
    RealArray t = total + y;
    comp = (t - total) - y;
    total = t;
  }
  return total;
}

DistanceArray approx_lp_ge1(const IntString& text, const IntString& pattern, double p,
                            double eps, const ApproxOptions& options) {
  if (!(p >= 1.0)) throw std::invalid_argument("approx_lp_ge1: p must be >= 1");
  if (!(eps > 0.0) || !(eps <= 1.0 / p))
    throw std::invalid_argument("approx_lp_ge1: eps must be in (0, 1/p]");
  if (eps < 4.0 / static_cast<double>(text.value_bound))
    throw std::invalid_argument(
        "approx_lp_ge1: eps below 4/U; use the exact engine for this precision");
  if (text.value_bound != pattern.value_bound)
    throw std::invalid_argument("approx_lp_ge1: text and pattern must share the value bound");

  const DecompParams params =
      options.eta_override > 0.0
          ? DecompParams::from_eta(p, eps, options.eta_override, text.value_bound, false)
          : DecompParams::deterministic(p, eps, text.value_bound);

  const int u = params.value_bits;
  SymbolArray tnum(text.size()), pnum(pattern.size());
  for (Eigen::Index i = 0; i < text.size(); ++i) tnum[i] = text.symbols[i] << u;
  for (Eigen::Index j = 0; j < pattern.size(); ++j) pnum[j] = pattern.symbols[j] << u;

  RealArray sums = decomposition_power_sums(tnum, pnum, params, options);
  // Tiny negative totals can survive where the true value is 0.
  return {sums.max(0.0).pow(1.0 / p), Scale::LpValues};
}

}  // namespace lpdist
