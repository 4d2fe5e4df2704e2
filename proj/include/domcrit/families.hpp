#pragma once

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domcrit/graph.hpp"
#include "domcrit/graph6.hpp"

namespace domcrit {

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs a vertex");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("complete bipartite parts must be non-empty");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

// C_n<offsets>: v is adjacent to v +- o (mod n) for each offset o.
inline Graph circulant_graph(int n, const std::vector<int>& offsets) {
  if (n < 2) throw std::invalid_argument("circulant needs at least 2 vertices");
  if (offsets.empty()) throw std::invalid_argument("circulant needs offsets");
  std::set<int> seen;
  std::vector<Edge> edges;
  for (int o : offsets) {
    if (o < 1 || 2 * o > n) {
      throw std::invalid_argument("circulant offset " + std::to_string(o) +
                                  " outside [1, n/2]");
    }
    if (!seen.insert(o).second) {
      throw std::invalid_argument("repeated circulant offset");
    }
    for (int v = 0; v < n; ++v) {
      int w = (v + o) % n;
      edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  }
  return Graph(n, edges);
}

// Harary graph H_{k,n} for even k: the circulant C_n<1, ..., k/2>.
inline Graph harary_graph(int k, int n) {
  if (k % 2 != 0) {
    throw std::invalid_argument("only even-degree harary graphs are supported");
  }
  if (k < 2 || k >= n) {
    throw std::invalid_argument("harary graph needs 2 <= k < n");
  }
  std::vector<int> offsets;
  for (int o = 1; o <= k / 2; ++o) offsets.push_back(o);
  return circulant_graph(n, offsets);
}

// Corona with K1: one fresh pendant leaf per base vertex.  Base vertex v
// keeps id v; its leaf gets id base.order() + v.  For a connected base
// the result is a generalized comb.
inline Graph corona_with_leaves(const Graph& base) {
  int n = base.order();
  if (2 * n > kMaxVertices) {
    throw std::invalid_argument("corona exceeds 64 vertices");
  }
  std::vector<Edge> edges = base.edges();
  for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
  return Graph(2 * n, edges);
}

// K_{2t,2t} minus t vertex-disjoint 4-cycles: side vertices a_i = i and
// b_j = 2t + j are adjacent iff i/2 != j/2 (integer division), i.e. the
// removed 4-cycle through {a_2i, a_2i+1, b_2i, b_2i+1} pairs the blocks.
// t = 1 would delete every edge of K_{2,2}, so it is rejected.
inline Graph k2t2t_minus_4cycles(int t) {
  if (t < 2) {
    throw std::invalid_argument(
        "k2t2t-minus-4cycles needs t >= 2 (t = 1 leaves no edges)");
  }
  if (4 * t > kMaxVertices) {
    throw std::invalid_argument("k2t2t-minus-4cycles exceeds 64 vertices");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < 2 * t; ++i) {
    for (int j = 0; j < 2 * t; ++j) {
      if (i / 2 != j / 2) edges.emplace_back(i, 2 * t + j);
    }
  }
  return Graph(4 * t, edges);
}

// Textual graph descriptor, e.g. "cycle:12", "circulant:12,1,5",
// "comb:path:4", "g6:Cr", "edges:5:0-1,1-2".  parse() validates syntax;
// build() validates parameters and constructs the graph.
class GraphSpec {
 public:
  static GraphSpec parse(std::string_view text);

  Graph build() const;
  const std::string& text() const { return text_; }

 private:
  enum class Family {
    kCycle,
    kPath,
    kComplete,
    kCompleteBipartite,
    kCirculant,
    kHarary,
    kComb,
    kK2t2t,
    kGraph6,
    kEdges,
  };

  std::string text_;
  Family family_ = Family::kGraph6;
  std::vector<int> params_;
  std::string payload_;  // g6 body, comb base spec, or edge list
};

namespace detail {

inline int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  }
  return value;
}

inline std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  while (!s.empty()) {
    std::size_t comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

inline std::vector<Edge> parse_edge_list(std::string_view s) {
  std::vector<Edge> out;
  while (!s.empty()) {
    std::size_t comma = s.find(',');
    std::string_view item = s.substr(0, comma);
    std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw std::invalid_argument("edge '" + std::string(item) +
                                  "' is not of the form u-v");
    }
    out.emplace_back(parse_int(item.substr(0, dash)),
                     parse_int(item.substr(dash + 1)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

inline GraphSpec GraphSpec::parse(std::string_view text) {
  GraphSpec spec;
  spec.text_ = std::string(text);
  std::size_t colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (name == "cycle" || name == "path" || name == "complete") {
    spec.family_ = name == "cycle"     ? Family::kCycle
                   : name == "path"    ? Family::kPath
                                       : Family::kComplete;
    spec.params_ = {detail::parse_int(rest)};
  } else if (name == "complete-bipartite" || name == "kbip") {
    spec.family_ = Family::kCompleteBipartite;
    spec.params_ = detail::parse_int_list(rest);
    if (spec.params_.size() != 2) {
      throw std::invalid_argument("complete-bipartite needs two part sizes");
    }
  } else if (name == "circulant") {
    spec.family_ = Family::kCirculant;
    spec.params_ = detail::parse_int_list(rest);
    if (spec.params_.size() < 2) {
      throw std::invalid_argument("circulant needs an order and offsets");
    }
  } else if (name == "harary") {
    spec.family_ = Family::kHarary;
    spec.params_ = detail::parse_int_list(rest);
    if (spec.params_.size() != 2) {
      throw std::invalid_argument("harary needs degree and order");
    }
  } else if (name == "comb") {
    spec.family_ = Family::kComb;
    if (rest.empty()) throw std::invalid_argument("comb needs a base spec");
    spec.payload_ = std::string(rest);
    GraphSpec::parse(rest);  // validate the base eagerly
  } else if (name == "k2t2t-minus-4cycles" || name == "k2t2t") {
    spec.family_ = Family::kK2t2t;
    spec.params_ = {detail::parse_int(rest)};
  } else if (name == "g6") {
    spec.family_ = Family::kGraph6;
    if (rest.empty()) throw std::invalid_argument("g6 needs a body");
    spec.payload_ = std::string(rest);
  } else if (name == "edges") {
    spec.family_ = Family::kEdges;
    std::size_t colon2 = rest.find(':');
    spec.params_ = {detail::parse_int(rest.substr(0, colon2))};
    if (colon2 != std::string_view::npos) {
      spec.payload_ = std::string(rest.substr(colon2 + 1));
    }
  } else {
    throw std::invalid_argument("unknown graph family '" + std::string(name) +
                                "'");
  }
  return spec;
}

inline Graph GraphSpec::build() const {
  switch (family_) {
    case Family::kCycle:
      return cycle_graph(params_[0]);
    case Family::kPath:
      return path_graph(params_[0]);
    case Family::kComplete:
      return complete_graph(params_[0]);
    case Family::kCompleteBipartite:
      return complete_bipartite(params_[0], params_[1]);
    case Family::kCirculant:
      return circulant_graph(params_[0],
                             {params_.begin() + 1, params_.end()});
    case Family::kHarary:
      return harary_graph(params_[0], params_[1]);
    case Family::kComb:
      return corona_with_leaves(GraphSpec::parse(payload_).build());
    case Family::kK2t2t:
      return k2t2t_minus_4cycles(params_[0]);
    case Family::kGraph6:
      return parse_graph6(payload_);
    case Family::kEdges: {
      auto edges = detail::parse_edge_list(payload_);
      return Graph(params_[0], edges);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace domcrit
