#pragma once

#include <string>
#include <string_view>

#include "storient/graph.hpp"

namespace storient {

// graph6 short form, n <= 62: one byte n+63, then the upper-triangle bits
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
// each group offset by 63. No header, no newline inside a record.

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

}  // namespace storient
