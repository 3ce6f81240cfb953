#include "lpdist/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lpdist/convolution.hpp"
#include "lpdist/util.hpp"

namespace lpdist {

namespace {

void check_pair(const IntString& text, const IntString& pattern) {
  if (pattern.size() < 1 || pattern.size() > text.size())
    throw std::invalid_argument("need 1 <= pattern length <= text length");
  if (text.value_bound != pattern.value_bound)
    throw std::invalid_argument("text and pattern must share the value bound");
}

Route resolve_route(Route route, Eigen::Index m, std::uint64_t alphabet, int block) {
  if (route != Route::Auto) return route;
  // Fft costs ~2*alphabet*log2(block) per output position, Direct costs ~m.
  const double fft_cost = 2.0 * static_cast<double>(alphabet) * std::log2(double(block));
  return fft_cost < static_cast<double>(m) ? Route::Fft : Route::Direct;
}

}  // namespace

DistanceArray brute_force_lp(const IntString& text, const IntString& pattern, double p) {
  check_pair(text, pattern);
  if (!(p > 0.0)) throw std::invalid_argument("brute_force_lp: p must be positive");
  const Eigen::Index n = text.size(), m = pattern.size();
  // |t - q| < U, so the p-th powers of all differences fit a dense memo.
  std::vector<double> pow_memo(text.value_bound, -1.0);
  RealArray out = RealArray::Zero(n - m + 1);
  for (Eigen::Index i = 0; i + m <= n; ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      const std::uint64_t a = text.symbols[i + j], b = pattern.symbols[j];
      const std::uint64_t d = a > b ? a - b : b - a;
      double& memo = pow_memo[d];
      if (memo < 0.0) memo = powp(static_cast<double>(d), p);
      sum += memo;
    }
    out[i] = sum;
  }
  return {out, Scale::PowerSums};
}

DistanceArray brute_force_hamming(const IntString& text, const IntString& pattern) {
  check_pair(text, pattern);
  const Eigen::Index n = text.size(), m = pattern.size();
  RealArray out = RealArray::Zero(n - m + 1);
  for (Eigen::Index i = 0; i + m <= n; ++i) {
    std::uint64_t mism = 0;
    for (Eigen::Index j = 0; j < m; ++j)
      mism += text.symbols[i + j] != pattern.symbols[j];
    out[i] = static_cast<double>(mism);
  }
  return {out, Scale::Counts};
}

RealArray reduced_distance(const ReducedArray& text, const ReducedArray& pattern,
                           const KernelFn& kernel, std::uint64_t alphabet, Route route,
                           int block_length) {
  if (alphabet < 1) throw std::invalid_argument("reduced_distance: alphabet must be >= 1");
  if (pattern.size() < 1 || pattern.size() > text.size())
    throw std::invalid_argument("reduced_distance: need 1 <= pattern length <= text length");
  const Eigen::Index n = text.size(), m = pattern.size();
  const int block = normalize_block_length(m, block_length);

  if (resolve_route(route, m, alphabet, block) == Route::Fft) {
    RealArray out = RealArray::Zero(n - m + 1);
    RealArray indicator(n), row(m);
    for (std::uint64_t c = 0; c < alphabet; ++c) {
      indicator = (text == static_cast<std::uint32_t>(c)).cast<double>();
      for (Eigen::Index j = 0; j < m; ++j) row[j] = kernel(c, pattern[j]);
      out += correlate(indicator, row, block);
    }
    return out;
  }

  // Direct route: group text symbols, tabulate kernel rows against the
  // pattern once, then walk the windows.
  std::vector<std::uint32_t> id_of(n);
  std::vector<std::uint32_t> seen_symbol;
  if (alphabet <= (1u << 16)) {
    std::vector<std::int32_t> dense(alphabet, -1);
    for (Eigen::Index i = 0; i < n; ++i) {
      std::int32_t& slot = dense[text[i]];
      if (slot < 0) {
        slot = static_cast<std::int32_t>(seen_symbol.size());
        seen_symbol.push_back(text[i]);
      }
      id_of[i] = static_cast<std::uint32_t>(slot);
    }
  } else {
    std::unordered_map<std::uint32_t, std::uint32_t> map;
    map.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      auto [it, fresh] = map.emplace(text[i], static_cast<std::uint32_t>(seen_symbol.size()));
      if (fresh) seen_symbol.push_back(text[i]);
      id_of[i] = it->second;
    }
  }
  const std::size_t k = seen_symbol.size();
  std::vector<double> table(k * static_cast<std::size_t>(m));
  for (std::size_t s = 0; s < k; ++s)
    for (Eigen::Index j = 0; j < m; ++j)
      table[s * m + j] = kernel(seen_symbol[s], pattern[j]);

  RealArray out = RealArray::Zero(n - m + 1);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double* col = table.data() + j;
    for (Eigen::Index i = 0; i + m <= n; ++i)
      out[i] += col[static_cast<std::size_t>(id_of[i + j]) * m];
  }
  conv_counters().direct_term_sums += static_cast<std::uint64_t>(n - m + 1) * m;
  return out;
}

DistanceArray small_alphabet_distance(const IntString& text, const IntString& pattern,
                                      const ReduceFn& reduce_text,
                                      const ReduceFn& reduce_pattern, const KernelFn& kernel,
                                      std::uint64_t alphabet, Route route, int block_length) {
  check_pair(text, pattern);
  if (alphabet < 1) throw std::invalid_argument("small_alphabet_distance: alphabet must be >= 1");
  auto apply = [&](const SymbolArray& syms, const ReduceFn& reduce) {
    ReducedArray r(syms.size());
    for (Eigen::Index i = 0; i < syms.size(); ++i) {
      const std::uint32_t v = reduce(syms[i]);
      if (v >= alphabet)
        throw std::invalid_argument("small_alphabet_distance: reduced symbol out of range");
      r[i] = v;
    }
    return r;
  };
  const ReducedArray rt = apply(text.symbols, reduce_text);
  const ReducedArray rp = apply(pattern.symbols, reduce_pattern);
  return {reduced_distance(rt, rp, kernel, alphabet, route, block_length), Scale::PowerSums};
}

DistanceArray exact_even_p(const IntString& text, const IntString& pattern, int p,
                           int block_length) {
  check_pair(text, pattern);
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("exact_even_p: p must be a positive even integer");
  const Eigen::Index n = text.size(), m = pattern.size();
  const double max_term = static_cast<double>(m) *
                          std::pow(static_cast<double>(text.value_bound), p);
  if (!(max_term < 9007199254740992.0))  // 2^53
    throw std::range_error("exact_even_p: m * U^p exceeds exact double range");

  // (t-q)^p = sum_k binom(p,k) (-1)^k t^(p-k) q^k. The k=0 and k=p terms are
  // plain window sums, done exactly with prefix sums; the rest are correlations.
  std::vector<double> binom(p + 1, 1.0);
  for (int k = 1; k <= p; ++k) binom[k] = binom[k - 1] * double(p - k + 1) / double(k);

  const RealArray t = text.symbols.cast<double>();
  const RealArray q = pattern.symbols.cast<double>();
  // Integer powers by repeated multiplication stay exact below 2^53.
  std::vector<RealArray> tpow(p + 1), qpow(p + 1);
  tpow[0] = RealArray::Ones(n);
  qpow[0] = RealArray::Ones(m);
  for (int k = 1; k <= p; ++k) {
    tpow[k] = tpow[k - 1] * t;
    qpow[k] = qpow[k - 1] * q;
  }

  RealArray out = RealArray::Zero(n - m + 1);
  {
    const RealArray& tp = tpow[p];
    double window = tp.head(m).sum();
    out[0] = window;
    for (Eigen::Index i = 1; i + m <= n; ++i) {
      window += tp[i + m - 1] - tp[i - 1];
      out[i] = window;
    }
    out += qpow[p].sum();
  }
  for (int k = 1; k < p; ++k) {
    const double coeff = (k % 2 == 0 ? 1.0 : -1.0) * binom[k];
    out += coeff * correlate(tpow[p - k], qpow[k], block_length);
  }
  return {out, Scale::PowerSums};
}

}  // namespace lpdist
