#pragma once

#include <string>
#include <string_view>

#include "graphsim/graph.hpp"

namespace graphsim {

/// Decode a single graph6 line (short form, n <= 62). The long form
/// ('~' size prefix) and characters outside the printable graph6
/// alphabet are rejected with a ParseError naming the byte offset.
Graph parse_graph6(std::string_view text);

/// Encode in graph6 short form. Throws BudgetError for n > 62.
std::string encode_graph6(const Graph& g);

} // namespace graphsim
