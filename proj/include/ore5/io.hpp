#pragma once

#include <iosfwd>
#include <string>

#include "ore5/graph.hpp"

namespace ore5 {

// Text edge-list format:
//   # comment lines allowed anywhere
//   p <n> <m>
//   <u> <v>          (one per edge, 0-based ids)
// The writer emits edges sorted with u < v, lexicographically.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);
std::string to_edge_list_string(const Graph& g);

} // namespace ore5
