#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domcrit/criticality.hpp"
#include "domcrit/domination.hpp"
#include "domcrit/families.hpp"
#include "domcrit/graph.hpp"

namespace domcrit {

// Result of gluing two graphs; the maps carry original ids into the
// coalesced graph (merged vertices map to their shared id).
struct CoalescedGraph {
  Graph graph;
  std::vector<int> left_map;
  std::vector<int> right_map;

  VertexSet map_left(VertexSet s) const {
    VertexSet out;
    for (int v : s) out.add(left_map[static_cast<std::size_t>(v)]);
    return out;
  }
  VertexSet map_right(VertexSet s) const {
    VertexSet out;
    for (int v : s) out.add(right_map[static_cast<std::size_t>(v)]);
    return out;
  }
};

// Pairwise identification plan: pairs[i] = (x_i in G, y_i in H).
struct CoalescenceSpec {
  std::vector<std::pair<int, int>> pairs;

  void validate(const Graph& g, const Graph& h) const {
    if (pairs.empty()) {
      throw std::invalid_argument("coalescence needs at least one pair");
    }
    std::set<int> xs, ys;
    for (auto [x, y] : pairs) {
      if (x < 0 || x >= g.order() || y < 0 || y >= h.order()) {
        throw std::invalid_argument("coalescence pair out of range");
      }
      if (!xs.insert(x).second || !ys.insert(y).second) {
        throw std::invalid_argument("coalescence pairs must be distinct per side");
      }
    }
  }
};

// G ._XY H: vertices of G keep their ids; y_i melts into x_i; the other
// vertices of H are appended in id order.  Edges union; duplicates that
// arise from both sides collapse (simple-graph closure).
inline CoalescedGraph vertex_set_coalescence(const Graph& g, const Graph& h,
                                             const CoalescenceSpec& spec) {
  spec.validate(g, h);
  int merged = static_cast<int>(spec.pairs.size());
  int n = g.order() + h.order() - merged;
  if (n > kMaxVertices) {
    throw std::invalid_argument("coalescence exceeds 64 vertices");
  }

  std::vector<int> left(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) left[static_cast<std::size_t>(v)] = v;

  std::vector<int> right(static_cast<std::size_t>(h.order()), -1);
  for (auto [x, y] : spec.pairs) right[static_cast<std::size_t>(y)] = x;
  int next = g.order();
  for (int v = 0; v < h.order(); ++v) {
    if (right[static_cast<std::size_t>(v)] < 0) {
      right[static_cast<std::size_t>(v)] = next++;
    }
  }

  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges()) {
    edges.emplace_back(right[static_cast<std::size_t>(u)],
                       right[static_cast<std::size_t>(v)]);
  }
  return {Graph(n, edges), std::move(left), std::move(right)};
}

// Classic vertex coalescence G.H at one vertex per side.
inline CoalescedGraph vertex_coalescence(const Graph& g, int gv,
                                         const Graph& h, int hv) {
  return vertex_set_coalescence(g, h, CoalescenceSpec{{{gv, hv}}});
}

struct IdentifiedGraph {
  Graph graph;
  std::vector<int> map;  // original id -> new id; map[y] = map[x]
};

// Melt y into x within one graph.  An xy edge would become a loop and is
// dropped; duplicate edges collapse.
inline IdentifiedGraph identify_vertices(const Graph& j, int x, int y) {
  if (x == y) throw std::invalid_argument("identify needs two distinct vertices");
  if (x < 0 || x >= j.order() || y < 0 || y >= j.order()) {
    throw std::invalid_argument("vertex out of range");
  }
  std::vector<int> map(static_cast<std::size_t>(j.order()), -1);
  int next = 0;
  for (int v = 0; v < j.order(); ++v) {
    if (v != y) map[static_cast<std::size_t>(v)] = next++;
  }
  map[static_cast<std::size_t>(y)] = map[static_cast<std::size_t>(x)];

  std::vector<Edge> edges;
  for (auto [u, v] : j.edges()) {
    int mu = map[static_cast<std::size_t>(u)];
    int mv = map[static_cast<std::size_t>(v)];
    if (mu != mv) edges.emplace_back(mu, mv);
  }
  return {Graph(j.order() - 1, edges), std::move(map)};
}

// (C4)^k: k copies of C4 successively coalesced at vertex 0, which the
// singleton-part bookkeeping keeps available after every merge.  3k+1
// vertices; gamma = k+1.
struct C4Power {
  Graph graph;
  std::vector<int> attach_history;  // merged vertex per coalescence step
};

inline C4Power build_c4_power(int k) {
  if (k < 1 || 3 * k + 1 > kMaxVertices) {
    throw std::invalid_argument("c4 power needs 1 <= k <= 21");
  }
  Graph c4 = cycle_graph(4);
  C4Power out{c4, {}};
  for (int i = 1; i < k; ++i) {
    out.graph = vertex_coalescence(out.graph, 0, c4, 0).graph;
    out.attach_history.push_back(0);
  }
  return out;
}

// Report for one vertex-set coalescence: the gamma sandwich, whether
// each side's set is st-critical, whether the glued set is st-critical
// in the result, the biconditional between those, and the gamma equality
// that must follow when the glued set is st-critical.
struct SetCoalescenceCheck {
  int gamma_g = 0;
  int gamma_h = 0;
  int gamma_coalesced = 0;
  int merged_size = 0;
  bool lower_bound_ok = false;  // gamma_g + gamma_h - |X| <= gamma_coalesced
  bool upper_bound_ok = false;  // gamma_coalesced <= gamma_g + gamma_h
  bool x_critical_in_g = false;
  bool y_critical_in_h = false;
  bool x_critical_in_coalesced = false;
  bool iff_ok = false;
  bool equality_applicable = false;
  bool equality_ok = false;

  bool all_ok() const {
    return lower_bound_ok && upper_bound_ok && iff_ok && equality_ok;
  }
};

inline SetCoalescenceCheck verify_set_coalescence(const Graph& g, VertexSet x,
                                                  const Graph& h, VertexSet y) {
  if (x.count() != y.count()) {
    throw std::invalid_argument("coalesced sets must have equal size");
  }
  CoalescenceSpec spec;
  auto xs = x.to_vector();
  auto ys = y.to_vector();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    spec.pairs.emplace_back(xs[i], ys[i]);
  }
  auto coal = vertex_set_coalescence(g, h, spec);

  SetCoalescenceCheck check;
  check.merged_size = x.count();
  check.gamma_g = gamma(g).gamma;
  check.gamma_h = gamma(h).gamma;
  check.gamma_coalesced = gamma(coal.graph).gamma;
  check.lower_bound_ok = check.gamma_g + check.gamma_h - check.merged_size <=
                         check.gamma_coalesced;
  check.upper_bound_ok = check.gamma_coalesced <= check.gamma_g + check.gamma_h;
  check.x_critical_in_g =
      detail::st_critical_given_gamma(g, x, check.gamma_g).has_value();
  check.y_critical_in_h =
      detail::st_critical_given_gamma(h, y, check.gamma_h).has_value();
  check.x_critical_in_coalesced =
      detail::st_critical_given_gamma(coal.graph, coal.map_left(x),
                                      check.gamma_coalesced)
          .has_value();
  check.iff_ok = (check.x_critical_in_g && check.y_critical_in_h) ==
                 check.x_critical_in_coalesced;
  check.equality_applicable = check.x_critical_in_coalesced;
  check.equality_ok =
      !check.equality_applicable ||
      check.gamma_coalesced == check.gamma_g + check.gamma_h - check.merged_size;
  return check;
}

// Report for the partition-merge construction: glue the first parts of
// two st-critical partitions and check that the combined family is an
// st-critical partition of the coalescence — and that the biconditional
// between the two sides holds.
struct PartitionMergeCheck {
  bool g_structure_ok = false;   // partsG partitions V(G)
  bool h_structure_ok = false;
  bool g_parts_critical = false;
  bool h_parts_critical = false;
  bool merged_structure_ok = false;
  bool merged_parts_critical = false;
  int merged_part_count = 0;
  bool biconditional_ok = false;

  bool left_side() const {
    return g_structure_ok && h_structure_ok && g_parts_critical &&
           h_parts_critical;
  }
  bool right_side() const {
    return merged_structure_ok && merged_parts_critical;
  }
};

namespace detail {

inline bool partitions_vertex_set(std::span<const VertexSet> parts,
                                  VertexSet universe) {
  VertexSet seen;
  for (VertexSet p : parts) {
    if (p.empty() || p.intersects(seen)) return false;
    seen |= p;
  }
  return seen == universe;
}

inline bool all_parts_critical(const Graph& g,
                               std::span<const VertexSet> parts) {
  if (g.order() == 1) {
    return parts.size() == 1 && parts[0] == g.vertices();
  }
  int gam = gamma(g).gamma;
  for (VertexSet p : parts) {
    if (p == g.vertices()) return false;  // never st-critical for n >= 2
    if (p.empty() || !st_critical_given_gamma(g, p, gam)) return false;
  }
  return true;
}

}  // namespace detail

inline PartitionMergeCheck verify_partition_coalescence(
    const Graph& g, std::span<const VertexSet> parts_g, const Graph& h,
    std::span<const VertexSet> parts_h) {
  if (parts_g.empty() || parts_h.empty()) {
    throw std::invalid_argument("both partitions need at least one part");
  }
  if (parts_g[0].count() != parts_h[0].count()) {
    throw std::invalid_argument("first parts must have equal size");
  }

  PartitionMergeCheck check;
  check.g_structure_ok = detail::partitions_vertex_set(parts_g, g.vertices());
  check.h_structure_ok = detail::partitions_vertex_set(parts_h, h.vertices());
  check.g_parts_critical = detail::all_parts_critical(g, parts_g);
  check.h_parts_critical = detail::all_parts_critical(h, parts_h);

  CoalescenceSpec spec;
  auto xs = parts_g[0].to_vector();
  auto ys = parts_h[0].to_vector();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    spec.pairs.emplace_back(xs[i], ys[i]);
  }
  auto coal = vertex_set_coalescence(g, h, spec);

  std::vector<VertexSet> merged;
  for (VertexSet p : parts_g) merged.push_back(coal.map_left(p));
  for (std::size_t i = 1; i < parts_h.size(); ++i) {
    merged.push_back(coal.map_right(parts_h[i]));
  }
  check.merged_part_count = static_cast<int>(merged.size());
  check.merged_structure_ok =
      detail::partitions_vertex_set(merged, coal.graph.vertices());
  check.merged_parts_critical =
      detail::all_parts_critical(coal.graph, merged);
  check.biconditional_ok = check.left_side() == check.right_side();
  return check;
}

}  // namespace domcrit
