#pragma once

#include <string>

#include "mw/graph.hpp"

namespace mw {

enum class Format { Graph6, EdgeList, Dimacs };

Graph parse_graph(Format f, const std::string& bytes);
std::string emit_graph(const Graph& g, Format f);

// First-byte heuristic: 'p'/'c' -> DIMACS, leading digit -> edge list,
// anything in the graph6 byte range -> graph6.
Format detect_format(const std::string& bytes);

const char* format_name(Format f);

}  // namespace mw
