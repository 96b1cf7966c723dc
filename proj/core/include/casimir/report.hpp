#pragma once

#include <string>
#include <vector>

namespace casimir {

/// Shortest round-trip decimal representation (locale-free, deterministic).
std::string format_double(double v);

/// CSV assembly with format_double cells; rows end with '\n'.
std::string csv_line(const std::vector<std::string>& cells);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace casimir
