#include "lpdist/decomposition.hpp"

#include <cmath>
#include <stdexcept>

#include "lpdist/util.hpp"

namespace lpdist {

double FixedPoint::value() const {
  return std::ldexp(static_cast<double>(numerator), -frac_bits);
}

FixedPoint DecompParams::from_symbol(std::uint64_t symbol) const {
  return FixedPoint{symbol << value_bits, value_bits};
}

DecompParams DecompParams::from_eta(double p, double eps, double eta_max,
                                    std::uint64_t value_bound, bool scaled_levels) {
  if (!(p >= 0.0)) throw std::invalid_argument("DecompParams: p must be nonnegative");
  if (!(eps > 0.0) || !(eps <= 1.0)) throw std::invalid_argument("DecompParams: eps must be in (0,1]");
  if (!(eta_max > 0.0)) throw std::invalid_argument("DecompParams: eta must be positive");
  if (!is_pow2(value_bound) || value_bound < 2)
    throw std::invalid_argument("DecompParams: value bound must be a power of two >= 2");

  DecompParams params;
  params.p = p;
  params.eps = eps;
  params.value_bound = value_bound;
  params.value_bits = log2_exact(value_bound);
  std::uint64_t m = 8;
  while (1.0 / static_cast<double>(m) > eta_max) m <<= 1;
  params.reduced_alphabet = m;
  params.eta = 1.0 / static_cast<double>(m);
  params.level_lo = -params.value_bits;
  params.level_hi = params.value_bits + (scaled_levels ? 4 : 0);
  // Largest modulus numerator is M << (level_hi + u); keep it in uint64,
  // and reduced symbols in uint32.
  if (log2_exact(m) + params.level_hi + params.value_bits > 62 || log2_exact(m) > 31)
    throw std::invalid_argument("DecompParams: eta too small for the fixed-point range");
  return params;
}

DecompParams DecompParams::deterministic(double p, double eps, std::uint64_t value_bound) {
  return from_eta(p, eps, eps / 128.0, value_bound, false);
}

DecompParams DecompParams::randomized(double p, double eps, std::uint64_t value_bound) {
  const double u = static_cast<double>(log2_exact(value_bound));
  return from_eta(p, eps, eps * p / (15555.0 * u * std::log(2.0)), value_bound, true);
}

DecompParams DecompParams::hamming(double eps, std::uint64_t value_bound) {
  const double u = static_cast<double>(log2_exact(value_bound));
  return from_eta(0.0, eps, eps / (144.0 * u), value_bound, true);
}

FixedPoint round_down(FixedPoint x, int level) {
  if (level < -x.frac_bits)
    throw std::invalid_argument("round_down: level below the fixed-point grid");
  const int shift = level + x.frac_bits;
  if (shift >= 64) return FixedPoint{0, x.frac_bits};
  return FixedPoint{(x.numerator >> shift) << shift, x.frac_bits};
}

FixedPoint mod_norm(FixedPoint r, FixedPoint c) {
  if (r.frac_bits != c.frac_bits)
    throw std::invalid_argument("mod_norm: mismatched fixed-point precision");
  if (c.numerator == 0) throw std::invalid_argument("mod_norm: modulus must be positive");
  const std::uint64_t rem = r.numerator % c.numerator;
  return FixedPoint{std::min(rem, c.numerator - rem), r.frac_bits};
}

namespace {

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

double clipped_from_numerator(std::uint64_t diff_num, int level, int frac_bits, double p) {
  // (diff - 2^level)^p, clipped at zero, computed on values.
  const double diff = std::ldexp(static_cast<double>(diff_num), -frac_bits);
  const double threshold = std::ldexp(1.0, level);
  return powp(diff - threshold, p);
}

void check_level(int level, const DecompParams& params) {
  if (level < params.level_lo || level > params.level_hi)
    throw std::invalid_argument("level outside the decomposition range");
}

void check_grid(FixedPoint x, const DecompParams& params) {
  if (x.frac_bits != params.value_bits)
    throw std::invalid_argument("fixed-point precision does not match the decomposition");
}

}  // namespace

double clipped_power(int level, FixedPoint x, FixedPoint y, double p) {
  if (x.frac_bits != y.frac_bits)
    throw std::invalid_argument("clipped_power: mismatched fixed-point precision");
  return clipped_from_numerator(abs_diff(x.numerator, y.numerator), level, x.frac_bits, p);
}

double level_term(int level, FixedPoint x, FixedPoint y, double p) {
  return clipped_power(level, round_down(x, level), round_down(y, level), p) -
         clipped_power(level + 1, round_down(x, level + 1), round_down(y, level + 1), p);
}

double level_term_mod(int level, FixedPoint x, FixedPoint y, const DecompParams& params) {
  check_level(level, params);
  check_grid(x, params);
  check_grid(y, params);
  const std::uint64_t mask = params.reduced_alphabet - 1;  // M is a power of two
  const int shift = level + params.value_bits;
  // Work in units of 2^level: the rounded values are a, b, the modulus is M.
  const std::uint64_t a = x.numerator >> shift;
  const std::uint64_t b = y.numerator >> shift;
  const std::uint64_t d1 = (a - b) & mask;
  const std::uint64_t w1 = std::min(d1, params.reduced_alphabet - d1);
  const std::uint64_t d2 = (((x.numerator >> (shift + 1)) << 1) -
                            ((y.numerator >> (shift + 1)) << 1)) &
                           mask;
  const std::uint64_t w2 = std::min(d2, params.reduced_alphabet - d2);
  const double unit = std::ldexp(1.0, level);
  return powp(static_cast<double>(w1) * unit - unit, params.p) -
         powp(static_cast<double>(w2) * unit - 2.0 * unit, params.p);
}

double level_term_mod_sum(FixedPoint x, FixedPoint y, const DecompParams& params) {
  double sum = 0.0, comp = 0.0;
  for (int level = params.level_lo; level <= params.level_hi; ++level) {
    const double term = level_term_mod(level, x, y, params) - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum;
}

std::uint32_t reduce_symbol(FixedPoint x, int level, const DecompParams& params) {
  check_level(level, params);
  check_grid(x, params);
  const int shift = level + params.value_bits;
  return static_cast<std::uint32_t>((x.numerator >> shift) & (params.reduced_alphabet - 1));
}

ReducedArray reduce_symbols(const SymbolArray& numerators, int level, const DecompParams& params) {
  check_level(level, params);
  const int shift = level + params.value_bits;
  const std::uint64_t mask = params.reduced_alphabet - 1;
  ReducedArray out(numerators.size());
  for (Eigen::Index i = 0; i < numerators.size(); ++i)
    out[i] = static_cast<std::uint32_t>((numerators[i] >> shift) & mask);
  return out;
}

LevelKernel::LevelKernel(int level, const DecompParams& params)
    : level_(level),
      alphabet_(params.reduced_alphabet),
      p_(params.p),
      scale_(std::exp2(level * params.p)) {
  check_level(level, params);
  if (alphabet_ / 2 + 1 <= (1u << 16)) {
    const std::uint64_t half = alphabet_ / 2;
    outer_.resize(half + 1);
    inner_.resize(half + 1);
    for (std::uint64_t w = 0; w <= half; ++w) {
      outer_[w] = scale_ * powp(static_cast<double>(w) - 1.0, p_);
      inner_[w] = scale_ * powp(static_cast<double>(w) - 2.0, p_);
    }
  }
}

double LevelKernel::operator()(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t mask = alphabet_ - 1;
  const std::uint64_t d1 = (a - b) & mask;
  const std::uint64_t w1 = std::min(d1, alphabet_ - d1);
  const std::uint64_t d2 = ((a & ~1ull) - (b & ~1ull)) & mask;
  const std::uint64_t w2 = std::min(d2, alphabet_ - d2);
  if (!outer_.empty()) return outer_[w1] - inner_[w2];
  return scale_ * (powp(static_cast<double>(w1) - 1.0, p_) -
                   powp(static_cast<double>(w2) - 2.0, p_));
}

Eigen::ArrayXXd LevelKernel::materialize() const {
  if (alphabet_ > 2048)
    throw std::invalid_argument("LevelKernel::materialize: alphabet too large for a dense table");
  const Eigen::Index m = static_cast<Eigen::Index>(alphabet_);
  Eigen::ArrayXXd table(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) table(a, b) = (*this)(a, b);
  return table;
}

std::pair<double, double> telescope_check(FixedPoint x, FixedPoint y, const DecompParams& params) {
  check_grid(x, params);
  check_grid(y, params);
  double sum_plain = 0.0, sum_rounded = 0.0;
  for (int level = params.level_lo; level <= params.level_hi; ++level) {
    sum_plain += clipped_power(level, x, y, params.p) - clipped_power(level + 1, x, y, params.p);
    sum_rounded += level_term(level, x, y, params.p);
  }
  return {sum_plain, sum_rounded};
}

}  // namespace lpdist
