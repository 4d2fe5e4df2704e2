#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

// Plain-text edge list: the first meaningful line holds the vertex
// count, every following line one "u v" pair.  Blank lines and lines
// starting with '#' are skipped.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream row(line);
    if (n < 0) {
      if (!(row >> n)) {
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": expected vertex count");
      }
    } else {
      int u, v;
      if (!(row >> u >> v)) {
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": expected 'u v'");
      }
      edges.emplace_back(u, v);
    }
    std::string extra;
    if (row >> extra) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": trailing content '" + extra + "'");
    }
  }
  if (n < 0) throw std::invalid_argument("edge list is empty");
  return Graph(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

// Graphviz export; when parts are given each one becomes a color class.
inline std::string to_dot(const Graph& g, std::span<const VertexSet> parts = {},
                          const std::string& name = "G") {
  static const char* kPalette[] = {
      "lightblue",  "lightcoral", "palegreen", "gold",      "plum",
      "lightsalmon", "aquamarine", "khaki",     "lightpink", "lightgray",
  };
  constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int v : parts[i]) {
      out << "  " << v << " [style=filled, fillcolor="
          << kPalette[i % kPaletteSize] << "];\n";
    }
  }
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace domcrit
