#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace lpdist {

using RealArray = Eigen::ArrayXd;
using SymbolArray = Eigen::Array<std::uint64_t, Eigen::Dynamic, 1>;
using ReducedArray = Eigen::Array<std::uint32_t, Eigen::Dynamic, 1>;

constexpr bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

int log2_exact(std::uint64_t v);
std::uint64_t next_pow2(std::uint64_t v);

/// What the entries of a DistanceArray mean.
enum class Scale {
  PowerSums,  // per-position sums |t-q|^p (or raw kernel sums)
  LpValues,   // per-position lp values, i.e. PowerSums^(1/p)
  Counts,     // per-position mismatch counts
};

struct DistanceArray {
  RealArray values;
  Scale scale = Scale::PowerSums;
};

/// String over the integer alphabet [0, value_bound), value_bound = 2^value_bits.
struct IntString {
  SymbolArray symbols;
  std::uint64_t value_bound = 2;
  int value_bits = 1;

  IntString() = default;
  IntString(SymbolArray syms, std::uint64_t bound);

  Eigen::Index size() const { return symbols.size(); }
};

}  // namespace lpdist
