#include "lpdist/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lpdist/util.hpp"

namespace lpdist {

RandomScale draw_scale(std::uint64_t seed, std::uint64_t run_index, int value_bits) {
  // 8 * 2^u grid points cover [1, 9); the count is a power of two, so masking
  // the mixed counter is bias-free.
  const std::uint64_t one = 1ull << value_bits;
  const std::uint64_t offset = mix64(seed ^ mix64(run_index)) & (8 * one - 1);
  return RandomScale{FixedPoint{one + offset, value_bits}, seed};
}

int default_repetitions(Eigen::Index n) {
  int bits = 0;
  while ((Eigen::Index(1) << bits) < n) ++bits;
  return 2 * bits + 1;
}

namespace {

SymbolArray scaled_numerators(const SymbolArray& symbols, const FixedPoint& r) {
  SymbolArray out(symbols.size());
  for (Eigen::Index i = 0; i < symbols.size(); ++i) out[i] = r.numerator * symbols[i];
  return out;
}

}  // namespace

DistanceArray approx_lp_le1_single(const IntString& text, const IntString& pattern, double p,
                                   double eps, const RandomScale& scale,
                                   const ApproxOptions& options) {
  if (!(p > 0.0) || !(p < 1.0))
    throw std::invalid_argument("approx_lp_le1_single: p must be in (0, 1)");
  if (!(eps > 0.0) || !(eps <= 1.0))
    throw std::invalid_argument("approx_lp_le1_single: eps must be in (0, 1]");
  if (text.value_bound != pattern.value_bound)
    throw std::invalid_argument("approx_lp_le1_single: text and pattern must share the value bound");
  if (scale.r.frac_bits != text.value_bits || scale.r.numerator < (1ull << text.value_bits) ||
      scale.r.numerator >= (9ull << text.value_bits))
    throw std::invalid_argument("approx_lp_le1_single: scale must lie on the grid in [1, 9)");

  const DecompParams params =
      options.eta_override > 0.0
          ? DecompParams::from_eta(p, eps, options.eta_override, text.value_bound, true)
          : DecompParams::randomized(p, eps, text.value_bound);

  RealArray sums = decomposition_power_sums(scaled_numerators(text.symbols, scale.r),
                                            scaled_numerators(pattern.symbols, scale.r),
                                            params, options);
  // Divide the p-th-power sums by r^p, i.e. the lp values by r.
  sums = sums.max(0.0) / std::pow(scale.r.value(), p);
  return {sums.pow(1.0 / p), Scale::LpValues};
}

DistanceArray approx_lp_le1(const IntString& text, const IntString& pattern, double p,
                            double eps, std::uint64_t seed, int repetitions,
                            const ApproxOptions& options) {
  if (repetitions == 0) repetitions = default_repetitions(text.size());
  if (repetitions < 1 || repetitions % 2 == 0)
    throw std::invalid_argument("approx_lp_le1: repetitions must be odd");
  if (!(eps >= 12.0 * std::log(2.0) * std::log(2.0) / static_cast<double>(text.value_bound)))
    throw std::invalid_argument("approx_lp_le1: eps must be at least 12*(ln 2)^2 / U");

  std::vector<RealArray> runs(repetitions);
  for (int k = 0; k < repetitions; ++k) {
    const RandomScale scale = draw_scale(seed, static_cast<std::uint64_t>(k), text.value_bits);
    runs[k] = approx_lp_le1_single(text, pattern, p, eps, scale, options).values;
  }

  const Eigen::Index positions = runs[0].size();
  RealArray out(positions);
  std::vector<double> buf(repetitions);
  for (Eigen::Index i = 0; i < positions; ++i) {
    for (int k = 0; k < repetitions; ++k) buf[k] = runs[k][i];
    auto mid = buf.begin() + repetitions / 2;
    std::nth_element(buf.begin(), mid, buf.end());
    out[i] = *mid;
  }
  return {out, Scale::LpValues};
}

}  // namespace lpdist
