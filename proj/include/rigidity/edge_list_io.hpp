#pragma once

#include <filesystem>
#include <iosfwd>

#include "rigidity/graph.hpp"

namespace rigidity {

// Edge-list text format:
//
//   # comment lines start with '#'
//   n m
//   u v        (m lines, 0-based endpoints)
//
// Tokens are whitespace separated. Malformed input raises ParseError with the
// offending line number.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace rigidity
