#include "lpdist/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lpdist {

IntString read_int_string(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Eigen::Index count = 0;
  std::uint64_t bound = 0;
  if (!(in >> count >> bound) || count < 1)
    throw std::runtime_error("malformed header in " + path);
  SymbolArray symbols(count);
  for (Eigen::Index i = 0; i < count; ++i)
    if (!(in >> symbols[i])) throw std::runtime_error("truncated symbol list in " + path);
  try {
    return IntString(std::move(symbols), bound);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_int_string(const std::string& path, const IntString& str) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << str.size() << ' ' << str.value_bound << '\n';
  for (Eigen::Index i = 0; i < str.size(); ++i) {
    if (i) out << ' ';
    out << str.symbols[i];
  }
  out << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_distance_csv(const std::string& path, const DistanceArray& dist) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "index,value\n";
  for (Eigen::Index i = 0; i < dist.values.size(); ++i)
    out << i << ',' << format_double(dist.values[i]) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace lpdist
