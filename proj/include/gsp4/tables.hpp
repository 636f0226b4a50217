#pragma once

// CSV tables of weight data.

#include <cstdint>
#include <string>

namespace gsp4 {

struct TableRange {
  std::int64_t lo = 0;
  std::int64_t hi = 8;
};

/// Parses "lo..hi".
TableRange parse_range(const std::string& text);

/// One of "weights", "vanishing", "serre", "selmer"; throws
/// std::invalid_argument otherwise.
std::string make_table(const std::string& name, TableRange range, std::int64_t p);

}  // namespace gsp4
