#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "lpdist/exact.hpp"
#include "lpdist/types.hpp"

namespace testutil {

// Deterministic bounded draws on raw mt19937_64 words (distribution classes
// are implementation-defined).
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t v;
    do {
      v = eng();
    } while (v >= limit);
    return v % bound;
  }
  double unit() { return (eng() >> 11) * 0x1.0p-53; }
};

inline lpdist::IntString random_string(Rng& rng, Eigen::Index n, std::uint64_t bound) {
  lpdist::SymbolArray syms(n);
  for (Eigen::Index i = 0; i < n; ++i) syms[i] = rng.below(bound);
  return lpdist::IntString(std::move(syms), bound);
}

inline lpdist::RealArray random_real(Rng& rng, Eigen::Index n, double lo, double hi) {
  lpdist::RealArray v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = lo + (hi - lo) * rng.unit();
  return v;
}

// Independent oracle for sliding kernel sums: the plain double loop, no
// grouping, no convolution.
inline lpdist::RealArray kernel_sum_loop(const lpdist::ReducedArray& text,
                                         const lpdist::ReducedArray& pattern,
                                         const lpdist::KernelFn& kernel) {
  const Eigen::Index n = text.size(), m = pattern.size();
  lpdist::RealArray out = lpdist::RealArray::Zero(n - m + 1);
  for (Eigen::Index i = 0; i + m <= n; ++i)
    for (Eigen::Index j = 0; j < m; ++j) out[i] += kernel(text[i + j], pattern[j]);
  return out;
}

inline double rel_error(double approx, double exact) {
  if (exact == 0.0) return approx == 0.0 ? 0.0 : HUGE_VAL;
  return std::abs(approx - exact) / std::abs(exact);
}

inline double max_rel_error(const lpdist::RealArray& approx, const lpdist::RealArray& exact) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < exact.size(); ++i)
    worst = std::max(worst, rel_error(approx[i], exact[i]));
  return worst;
}

}  // namespace testutil
