#include "lpdist/hamming.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lpdist/randomized.hpp"

namespace lpdist {

DistanceArray approx_hamming(const IntString& text, const IntString& pattern, double eps,
                             std::uint64_t seed, int repetitions, const ApproxOptions& options) {
  if (!(eps > 0.0) || !(eps <= 1.0))
    throw std::invalid_argument("approx_hamming: eps must be in (0, 1]");
  if (text.value_bound != pattern.value_bound)
    throw std::invalid_argument("approx_hamming: text and pattern must share the value bound");
  if (repetitions == 0) repetitions = default_repetitions(text.size());
  if (repetitions < 1 || repetitions % 2 == 0)
    throw std::invalid_argument("approx_hamming: repetitions must be odd");

  const DecompParams params =
      options.eta_override > 0.0
          ? DecompParams::from_eta(0.0, eps, options.eta_override, text.value_bound, true)
          : DecompParams::hamming(eps, text.value_bound);
  const double m = static_cast<double>(pattern.size());

  std::vector<RealArray> runs(repetitions);
  for (int k = 0; k < repetitions; ++k) {
    const RandomScale scale = draw_scale(seed, static_cast<std::uint64_t>(k), text.value_bits);
    SymbolArray tnum(text.size()), pnum(pattern.size());
    for (Eigen::Index i = 0; i < text.size(); ++i) tnum[i] = scale.r.numerator * text.symbols[i];
    for (Eigen::Index j = 0; j < pattern.size(); ++j)
      pnum[j] = scale.r.numerator * pattern.symbols[j];
    // Indicator kernels need no unscaling; clamp to the count range and round.
    runs[k] = decomposition_power_sums(tnum, pnum, params, options)
                  .max(0.0)
                  .min(m)
                  .round();
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
  return {out, Scale::Counts};
}

}  // namespace lpdist
