#pragma once

#include <istream>
#include <string>

#include "hca/graph.hpp"

namespace hca {

/// Reads `graph <n>` followed by `u v` lines; `#` starts a comment.
/// Throws InputError with a line number on malformed input.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph read_graph_file(const std::string& path);

/// Edges sorted with u < v.
std::string format_graph(const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace hca
