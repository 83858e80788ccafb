#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "starspec/graph.hpp"

namespace starspec {

/// graph6 line for `g` (no trailing newline, no header).
std::string graph6_encode(const Graph& g);

/// Parses one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted. Throws Error{parse_error} with the byte offset of
/// the first offending character.
Graph graph6_decode(std::string_view line);

/// One graph per non-empty line.
std::vector<Graph> graph6_decode_all(std::string_view text);

}  // namespace starspec
