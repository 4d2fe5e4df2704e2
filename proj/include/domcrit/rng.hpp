#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

// splitmix64 — tiny, seedable, and identical on every platform, unlike
// the standard library distributions whose outputs are unspecified.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough draw from [0, bound); bound must be positive.  The
  // modulo bias is irrelevant at test scale.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Inclusive range.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

 private:
  std::uint64_t state_;
};

// G(n, p%) with no connectivity guarantee.
inline Graph random_graph(int n, int edge_percent, SplitMix64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(edge_percent)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// Random spanning tree (each vertex beyond the first hooks onto an
// earlier one) plus extra edges at the given percentage.
inline Graph random_connected_graph(int n, int extra_edge_percent,
                                    SplitMix64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(rng.range(0, v - 1), v);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(extra_edge_percent)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// k distinct vertices from the pool, as a set.
inline VertexSet random_subset(VertexSet pool, int k, SplitMix64& rng) {
  if (k > pool.count()) {
    throw std::invalid_argument("subset size exceeds pool");
  }
  VertexSet out;
  while (out.count() < k) {
    auto members = (pool - out).to_vector();
    out.add(members[rng.below(members.size())]);
  }
  return out;
}

}  // namespace domcrit
