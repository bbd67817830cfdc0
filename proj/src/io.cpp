#include "spp/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace spp {

namespace {

bool blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Parses exactly two non-negative integers from the line.
bool two_numbers(const std::string& line, long long& a, long long& b) {
  std::istringstream ss(line);
  std::string rest;
  if (!(ss >> a >> b)) return false;
  return !(ss >> rest);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    long long a = 0;
    long long b = 0;
    if (!two_numbers(line, a, b)) throw ParseError(lineno, "expected two integers");
    if (!header) {
      if (a < 0 || b < 0) throw ParseError(lineno, "negative vertex or edge count");
      if (a > std::numeric_limits<Vertex>::max()) throw ParseError(lineno, "too many vertices");
      header.emplace(a, b);
      edges.reserve(static_cast<std::size_t>(std::min<long long>(b, 1 << 20)));
      continue;
    }
    const auto [n, m] = *header;
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(lineno, "more than " + std::to_string(m) + " edge lines");
    }
    if (a < 1 || a > n || b < 1 || b > n) throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
    if (a == b) throw ParseError(lineno, "self loop");
    const auto u = static_cast<Vertex>(a - 1);
    const auto v = static_cast<Vertex>(b - 1);
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw ParseError(lineno, "duplicate edge");
    }
    edges.push_back({u, v});
  }
  if (!header) throw ParseError(0, "missing header line");
  if (static_cast<long long>(edges.size()) != header->second) {
    throw ParseError(0, "expected " + std::to_string(header->second) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(header->first), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.first + 1 << ' ' << e.second + 1 << '\n';
}

}  // namespace spp
