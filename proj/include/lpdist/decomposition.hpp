#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lpdist/types.hpp"

namespace lpdist {

/// Nonnegative value on the 2^-frac_bits grid: value = numerator / 2^frac_bits.
/// All symbol arithmetic (rounding, modular norms, scaling by r) happens on
/// numerators, so it is bit-exact and reproducible.
struct FixedPoint {
  std::uint64_t numerator = 0;
  int frac_bits = 0;

  double value() const;
};

/// Parameters of one decomposition run. `reduced_alphabet` is M = 1/eta, a
/// power of two >= 8, so every modulus M * 2^level is a power of two as well.
struct DecompParams {
  double p = 1.0;  // 0 encodes the Hamming limit (indicator kernels)
  double eps = 0.0;
  double eta = 0.0;
  std::uint64_t reduced_alphabet = 8;
  std::uint64_t value_bound = 2;
  int value_bits = 1;
  int level_lo = 0;
  int level_hi = 0;

  int num_levels() const { return level_hi - level_lo + 1; }
  FixedPoint from_symbol(std::uint64_t symbol) const;

  /// eta = eps/128, levels -u..u (plain integer inputs).
  static DecompParams deterministic(double p, double eps, std::uint64_t value_bound);
  /// eta = eps*p / (15555 * log2(U) * ln 2), levels -u..u+4 (inputs scaled by r < 9).
  static DecompParams randomized(double p, double eps, std::uint64_t value_bound);
  /// eta = eps / (144 * log2(U)), indicator kernels, scaled levels.
  static DecompParams hamming(double eps, std::uint64_t value_bound);
  /// Shared constructor: 1/eta is rounded up to a power of two >= 8
  /// (rounding eta down only tightens the approximation).
  static DecompParams from_eta(double p, double eps, double eta_max, std::uint64_t value_bound,
                               bool scaled_levels);
};

/// Largest multiple of 2^level that is <= x. Requires level >= -frac_bits so
/// the result stays on the grid.
FixedPoint round_down(FixedPoint x, int level);

/// min(r mod c, c - r mod c): triangle wave with period c, peak c/2.
FixedPoint mod_norm(FixedPoint r, FixedPoint c);

/// (max(0, |x-y| - 2^level))^p.
double clipped_power(int level, FixedPoint x, FixedPoint y, double p);

/// Level contribution on rounded values:
/// clipped_power(level, x^(level), y^(level)) - clipped_power(level+1, x^(level+1), y^(level+1)).
double level_term(int level, FixedPoint x, FixedPoint y, double p);

/// Modular level contribution: same as level_term but with |.| replaced by
/// the norm modulo B = 2^level / eta on both parts. Depends on (x, y) only
/// through their reduced symbols.
double level_term_mod(int level, FixedPoint x, FixedPoint y, const DecompParams& params);

/// Sum of level_term_mod over the full level range of `params`.
double level_term_mod_sum(FixedPoint x, FixedPoint y, const DecompParams& params);

/// Reduced symbol at a level: (x^(level) mod B) / 2^level, in [0, 1/eta).
std::uint32_t reduce_symbol(FixedPoint x, int level, const DecompParams& params);

/// Vectorized reduce_symbol over raw numerators.
ReducedArray reduce_symbols(const SymbolArray& numerators, int level, const DecompParams& params);

/// Per-level kernel over reduced symbols. Entries are evaluated from the
/// closed form in O(1); the two pow tables are cached for moderate alphabets.
class LevelKernel {
 public:
  LevelKernel(int level, const DecompParams& params);

  int level() const { return level_; }
  std::uint64_t alphabet() const { return alphabet_; }
  double operator()(std::uint64_t a, std::uint64_t b) const;
  /// Dense table; only available for alphabets up to 2048.
  Eigen::ArrayXXd materialize() const;

 private:
  int level_;
  std::uint64_t alphabet_;
  double p_;
  double scale_;  // 2^(level * p)
  std::vector<double> outer_, inner_;  // scale * (w-1)^p, scale * (w-2)^p over w = 0..M/2
};

/// Test support: (sum of plain level differences, sum of rounded level terms)
/// over the level range; both telescope to clipped_power(level_lo, x, y).
std::pair<double, double> telescope_check(FixedPoint x, FixedPoint y, const DecompParams& params);

}  // namespace lpdist
