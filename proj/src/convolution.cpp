#include "lpdist/convolution.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <stdexcept>

namespace lpdist {

ConvCounters& conv_counters() {
  static ConvCounters counters;
  return counters;
}

void reset_conv_counters() {
  auto& c = conv_counters();
  c.correlate_calls = 0;
  c.block_correlations = 0;
  c.fft_transforms = 0;
  c.direct_term_sums = 0;
}

int default_block_length(Eigen::Index m) {
  return static_cast<int>(2 * next_pow2(static_cast<std::uint64_t>(m)));
}

int normalize_block_length(Eigen::Index m, int requested) {
  if (requested <= 0) return default_block_length(m);
  std::uint64_t want = std::max<std::uint64_t>(static_cast<std::uint64_t>(requested),
                                               2 * static_cast<std::uint64_t>(m));
  return static_cast<int>(next_pow2(want));
}

Eigen::Index correlate_block_count(Eigen::Index n, Eigen::Index m, int block_length) {
  const Eigen::Index step = block_length / 2;
  const Eigen::Index out = n - m + 1;
  return (out + step - 1) / step;
}

namespace {

void check_correlate_args(const RealArray& text, const RealArray& pattern) {
  if (pattern.size() < 1 || pattern.size() > text.size())
    throw std::invalid_argument("correlate: need 1 <= pattern length <= text length");
  if (!text.allFinite() || !pattern.allFinite())
    throw std::invalid_argument("correlate: inputs must be finite");
}

}  // namespace

RealArray correlate(const RealArray& text, const RealArray& pattern, int block_length) {
  check_correlate_args(text, pattern);
  const Eigen::Index n = text.size();
  const Eigen::Index m = pattern.size();
  const int block = normalize_block_length(m, block_length);
  const Eigen::Index step = block / 2;
  const Eigen::Index out_len = n - m + 1;
  const Eigen::Index blocks = correlate_block_count(n, m, block);

  auto& counters = conv_counters();
  counters.correlate_calls += 1;
  counters.block_correlations += static_cast<std::uint64_t>(blocks);
  counters.fft_transforms += static_cast<std::uint64_t>(2 * blocks + 1);

  Eigen::FFT<double> fft;

  Eigen::VectorXd padded = Eigen::VectorXd::Zero(block);
  padded.head(m) = pattern.matrix();
  Eigen::VectorXcd pattern_spec;
  fft.fwd(pattern_spec, padded);
  pattern_spec = pattern_spec.conjugate();

  RealArray out(out_len);
  Eigen::VectorXd chunk(block), time(block);
  Eigen::VectorXcd spec, prod(pattern_spec.size());
  for (Eigen::Index k = 0; k < blocks; ++k) {
    const Eigen::Index start = k * step;
    const Eigen::Index avail = std::min<Eigen::Index>(block, n - start);
    chunk.setZero();
    chunk.head(avail) = text.segment(start, avail).matrix();
    fft.fwd(spec, chunk);
    prod = spec.cwiseProduct(pattern_spec);
    fft.inv(time, prod);
    const Eigen::Index last = std::min(start + step, out_len);
    out.segment(start, last - start) = time.head(last - start).array();
  }
  return out;
}

RealArray naive_correlate(const RealArray& text, const RealArray& pattern) {
  check_correlate_args(text, pattern);
  const Eigen::Index n = text.size();
  const Eigen::Index m = pattern.size();
  RealArray out = RealArray::Zero(n - m + 1);
  for (Eigen::Index j = 0; j < m; ++j)
    out += text.segment(j, n - m + 1) * pattern[j];
  return out;
}

}  // namespace lpdist
