#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "spp/graph.hpp"

namespace spp {

/// Malformed graph text. `line()` is 1-based; 0 means end of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the edge-list format: '#' comment lines, a header "<n> <m>", then
/// exactly m lines "<u> <v>" with 1-based ids. Blank lines are ignored.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

/// Writes `g` in the same format, edges sorted with u < v.
void write_graph(std::ostream& out, const Graph& g, const std::string& comment = {});

}  // namespace spp
