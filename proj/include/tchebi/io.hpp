#pragma once

#include <string>

#include "tchebi/matrix.hpp"

namespace tchebi {

// Shortest decimal string that round-trips the double ('.' separator,
// locale-independent). precision > 0 switches to %.{precision}g.
std::string format_double(double v, int precision = 0);

// Row-major CSV, one row per line, LF endings.
std::string to_csv(const Mat& m, int precision = 0);
std::string to_csv(const IMat& m);

// JSON array of row arrays.
std::string to_json(const Mat& m, int precision = 0);
std::string to_json(const IMat& m);

void write_file(const std::string& path, const std::string& content);

}  // namespace tchebi
