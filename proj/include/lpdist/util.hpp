#pragma once

#include <cmath>
#include <cstdint>

namespace lpdist {

/// x^p with the conventions 0^0 = 0 and x^0 = 1 for x > 0; negative x clamps to 0.
inline double powp(double x, double p) {
  if (!(x > 0.0)) return 0.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  return std::pow(x, p);
}

/// splitmix64 finalizer; the counter-based generator used for per-run scales.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace lpdist
