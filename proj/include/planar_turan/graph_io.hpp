#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "planar_turan/graph.hpp"

namespace planar_turan {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 encoding (no ">>graph6<<" header, no trailing newline).
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph from_graph6(std::string_view text);

/// One graph per non-empty line.
std::vector<Graph> read_graph6_lines(std::istream& in);
void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs);

std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace planar_turan
