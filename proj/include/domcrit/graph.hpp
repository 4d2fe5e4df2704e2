#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domcrit/vertex_set.hpp"

namespace domcrit {

inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertex ids 0..n-1, stored as one
// neighborhood bitmask per vertex.  Loops and out-of-range ids are
// rejected at construction; parallel edges collapse silently.
class Graph {
 public:
  Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
      throw std::invalid_argument("graph order must be in [1, 64], got " +
                                  std::to_string(n));
    }
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw std::invalid_argument("edge endpoint out of range: " +
                                    std::to_string(u) + "-" +
                                    std::to_string(v));
      }
      if (u == v) {
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
      }
      adj_[static_cast<std::size_t>(u)].add(v);
      adj_[static_cast<std::size_t>(v)].add(u);
    }
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Adopts prebuilt neighborhood masks; they must already be symmetric,
  // irreflexive and confined to ids below adj.size().
  static Graph from_neighborhoods(std::vector<VertexSet> adj) {
    Graph g;
    g.n_ = static_cast<int>(adj.size());
    if (g.n_ < 1 || g.n_ > kMaxVertices) {
      throw std::invalid_argument("graph order must be in [1, 64]");
    }
    VertexSet valid = VertexSet::all(g.n_);
    for (int v = 0; v < g.n_; ++v) {
      VertexSet nb = adj[static_cast<std::size_t>(v)];
      if (nb.contains(v)) {
        throw std::invalid_argument("loop at vertex " + std::to_string(v));
      }
      if (!valid.contains_all(nb)) {
        throw std::invalid_argument("neighborhood exceeds vertex range");
      }
      for (int u : nb) {
        if (!adj[static_cast<std::size_t>(u)].contains(v)) {
          throw std::invalid_argument("asymmetric adjacency " +
                                      std::to_string(v) + "->" +
                                      std::to_string(u));
        }
      }
    }
    g.adj_ = std::move(adj);
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::all(n_); }
  VertexSet neighbors(int v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  VertexSet closed_neighbors(int v) const {
    return adj_[static_cast<std::size_t>(v)] | VertexSet::single(v);
  }
  int degree(int v) const { return neighbors(v).count(); }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for (int v : neighbors(u) - VertexSet::all(u + 1)) {
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// N(S): union of open neighborhoods, minus nothing (may intersect S).
inline VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out;
  for (int v : s) out |= g.neighbors(v);
  return out;
}

// N[S]
inline VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  return open_neighborhood(g, s) | s;
}

// Subgraph induced on V(g) minus a deleted set, with ids compacted to
// 0..k-1 preserving relative order.  original_id maps new id -> old id.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_id;

  VertexSet to_original(VertexSet s) const {
    VertexSet out;
    for (int v : s) out.add(original_id[static_cast<std::size_t>(v)]);
    return out;
  }
};

inline InducedSubgraph delete_vertices(const Graph& g, VertexSet removed) {
  if (!g.vertices().contains_all(removed)) {
    throw std::invalid_argument("deleted set contains unknown vertices");
  }
  VertexSet kept = g.vertices() - removed;
  if (kept.empty()) {
    throw std::invalid_argument("cannot delete every vertex");
  }
  std::vector<int> old_of = kept.to_vector();
  std::vector<int> new_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < old_of.size(); ++i) {
    new_of[static_cast<std::size_t>(old_of[i])] = static_cast<int>(i);
  }
  std::vector<VertexSet> adj(old_of.size());
  for (std::size_t i = 0; i < old_of.size(); ++i) {
    for (int u : g.neighbors(old_of[i]) & kept) {
      adj[i].add(new_of[static_cast<std::size_t>(u)]);
    }
  }
  return InducedSubgraph{Graph::from_neighborhoods(std::move(adj)),
                         std::move(old_of)};
}

// Shortest-path distance, or nullopt when u and v lie in different
// components.  Breadth-first over whole frontiers as bitmasks.
inline std::optional<int> distance(const Graph& g, int u, int v) {
  if (u == v) return 0;
  VertexSet reached = VertexSet::single(u);
  for (int d = 1;; ++d) {
    VertexSet next = closed_neighborhood(g, reached);
    if (next.contains(v)) return d;
    if (next == reached) return std::nullopt;
    reached = next;
  }
}

inline VertexSet component_of(const Graph& g, int v) {
  VertexSet reached = VertexSet::single(v);
  for (;;) {
    VertexSet next = closed_neighborhood(g, reached);
    if (next == reached) return reached;
    reached = next;
  }
}

inline bool is_connected(const Graph& g) {
  return component_of(g, 0) == g.vertices();
}

// Connected components, each listed once, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = component_of(g, left.lowest());
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

// a's vertices keep their ids; b's are shifted up by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  int n = a.order() + b.order();
  if (n > kMaxVertices) {
    throw std::invalid_argument("union exceeds 64 vertices");
  }
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < a.order(); ++v) adj[static_cast<std::size_t>(v)] = a.neighbors(v);
  for (int v = 0; v < b.order(); ++v) {
    adj[static_cast<std::size_t>(a.order() + v)] =
        VertexSet(b.neighbors(v).bits() << a.order());
  }
  return Graph::from_neighborhoods(std::move(adj));
}

// Cartesian product; vertex (u, w) gets id u * b.order() + w.
inline Graph cartesian_product(const Graph& a, const Graph& b) {
  if (a.order() * b.order() > kMaxVertices) {
    throw std::invalid_argument("product exceeds 64 vertices");
  }
  int nb = b.order();
  std::vector<Edge> edges;
  for (int u = 0; u < a.order(); ++u) {
    for (int w = 0; w < nb; ++w) {
      int id = u * nb + w;
      for (int w2 : b.neighbors(w) - VertexSet::all(w + 1)) {
        edges.emplace_back(id, u * nb + w2);
      }
      for (int u2 : a.neighbors(u) - VertexSet::all(u + 1)) {
        edges.emplace_back(id, u2 * nb + w);
      }
    }
  }
  return Graph(a.order() * nb, edges);
}

}  // namespace domcrit
