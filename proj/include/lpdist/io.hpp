#pragma once

#include <string>

#include "lpdist/types.hpp"

namespace lpdist {

/// File format: first line "count value_bound", second line the symbols,
/// whitespace separated. Parse and write losslessly. I/O and format errors
/// throw std::runtime_error.
IntString read_int_string(const std::string& path);
void write_int_string(const std::string& path, const IntString& str);

/// "index,value" rows, values with 17 significant digits (bit-faithful replay).
void write_distance_csv(const std::string& path, const DistanceArray& dist);

std::string format_double(double v);  // %.17g

}  // namespace lpdist
