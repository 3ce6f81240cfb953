#include "lpdist/generate.hpp"

#include <random>
#include <stdexcept>

#include "lpdist/util.hpp"

namespace lpdist {

namespace {

// Bounded draws built on raw mt19937_64 words; std::uniform_int_distribution
// is implementation-defined, which would break cross-platform reproducibility.
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
};

}  // namespace

IntString generate_string(Eigen::Index n, std::uint64_t value_bound, InputDistribution dist,
                          std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_string: length must be positive");
  if (!is_pow2(value_bound) || value_bound < 2)
    throw std::invalid_argument("generate_string: value bound must be a power of two >= 2");
  const int u = log2_exact(value_bound);
  Rng rng(seed);

  SymbolArray symbols(n);
  if (dist == InputDistribution::Uniform) {
    for (Eigen::Index i = 0; i < n; ++i) symbols[i] = rng.below(value_bound);
  } else {
    const int lo = (u + 1) / 2;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (rng.below(10) < 7 && lo < u) {
        const int bit = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(u - lo)));
        const std::uint64_t step = 1ull << bit;
        const std::uint64_t base = rng.below(value_bound / step) * step;
        const std::uint64_t jitter = rng.below(3);  // base - 1, base, base + 1
        std::uint64_t v = base + jitter;
        v = v == 0 ? 0 : v - 1;
        symbols[i] = v >= value_bound ? value_bound - 1 : v;
      } else {
        symbols[i] = rng.below(value_bound);
      }
    }
  }
  return IntString(std::move(symbols), value_bound);
}

}  // namespace lpdist
