#include "lpdist/types.hpp"

namespace lpdist {

int log2_exact(std::uint64_t v) {
  if (!is_pow2(v)) throw std::invalid_argument("log2_exact: not a power of two");
  int b = 0;
  while (v > 1) {
    v >>= 1;
    ++b;
  }
  return b;
}

std::uint64_t next_pow2(std::uint64_t v) {
  std::uint64_t r = 1;
  while (r < v) r <<= 1;
  return r;
}

IntString::IntString(SymbolArray syms, std::uint64_t bound) : symbols(std::move(syms)) {
  if (!is_pow2(bound) || bound < 2)
    throw std::invalid_argument("IntString: value bound must be a power of two >= 2");
  value_bound = bound;
  value_bits = log2_exact(bound);
  for (Eigen::Index i = 0; i < symbols.size(); ++i)
    if (symbols[i] >= value_bound)
      throw std::invalid_argument("IntString: symbol out of range");
}

}  // namespace lpdist
