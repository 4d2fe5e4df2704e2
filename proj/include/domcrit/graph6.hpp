#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

// graph6: printable encoding of a simple undirected graph.  One byte
// (or, from 63 vertices up, '~' plus three bytes) holds the order; the
// upper adjacency triangle follows in column-major order, six bits per
// byte, each offset by 63.

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int g6_byte(std::string_view s, std::size_t i) {
  if (i >= s.size()) throw Graph6Error("graph6 string truncated");
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) {
    throw Graph6Error("graph6 byte out of range at position " +
                      std::to_string(i));
  }
  return c - 63;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view s) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) throw Graph6Error("empty graph6 string");

  std::size_t pos = 0;
  long n;
  if (detail::g6_byte(s, 0) == 63) {  // '~': long order form
    if (s.size() >= 2 && detail::g6_byte(s, 1) == 63) {
      throw Graph6Error("graph6 orders above 258047 are not supported");
    }
    n = (static_cast<long>(detail::g6_byte(s, 1)) << 12) |
        (detail::g6_byte(s, 2) << 6) | detail::g6_byte(s, 3);
    pos = 4;
  } else {
    n = detail::g6_byte(s, 0);
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices) {
    throw Graph6Error("graph6 order " + std::to_string(n) +
                      " outside supported range [1, 64]");
  }

  long bits = n * (n - 1) / 2;
  std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() != pos + body) {
    throw Graph6Error("graph6 length mismatch: expected " +
                      std::to_string(pos + body) + " bytes, got " +
                      std::to_string(s.size()));
  }

  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  long k = 0;
  int cur = 0;
  int cur_left = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++k) {
      if (cur_left == 0) {
        cur = detail::g6_byte(s, pos++);
        cur_left = 6;
      }
      if (cur & (1 << (cur_left - 1))) {
        adj[static_cast<std::size_t>(row)].add(col);
        adj[static_cast<std::size_t>(col)].add(row);
      }
      --cur_left;
    }
  }
  if (cur_left > 0 && (cur & ((1 << cur_left) - 1)) != 0) {
    throw Graph6Error("graph6 padding bits are not zero");
  }
  return Graph::from_neighborhoods(std::move(adj));
}

inline std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int cur = 0;
  int filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      cur = (cur << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + cur));
        cur = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>(63 + (cur << (6 - filled))));
  }
  return out;
}

}  // namespace domcrit
