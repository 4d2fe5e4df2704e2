#pragma once

// Reference implementations for cross-checking the library, kept
// deliberately independent of its internals: domination by scanning all
// vertex subsets over plain adjacency lists, isomorphism classes by
// minimizing the adjacency bit string over every vertex permutation,
// connectivity by list-based depth-first search.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "domcrit/graph.hpp"

namespace oracle {

using AdjLists = std::vector<std::vector<int>>;

inline AdjLists adjacency_lists(const domcrit::Graph& g) {
  AdjLists adj(static_cast<std::size_t>(g.order()));
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

inline bool mask_dominates(const AdjLists& adj, std::uint64_t mask) {
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (mask >> v & 1) continue;
    bool covered = false;
    for (int w : adj[v]) {
      if (mask >> w & 1) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

// Domination number by exhaustive subset scan; practical up to n ~ 20.
inline int gamma_lists(const AdjLists& adj) {
  int n = static_cast<int>(adj.size());
  if (n < 1 || n > 24) throw std::invalid_argument("oracle gamma: bad order");
  int best = n;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) >= best) continue;
    if (mask_dominates(adj, mask)) best = std::popcount(mask);
  }
  return best;
}

inline int gamma(const domcrit::Graph& g) { return gamma_lists(adjacency_lists(g)); }

// Every minimum dominating set, as bitmasks in ascending order.
inline std::vector<std::uint64_t> all_mds_masks(const domcrit::Graph& g) {
  AdjLists adj = adjacency_lists(g);
  int n = g.order();
  int gam = gamma_lists(adj);
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != gam) continue;
    if (mask_dominates(adj, mask)) out.push_back(mask);
  }
  return out;
}

// Induced subgraph on the vertices NOT in `removed`, rebuilt as lists
// with contiguous new ids.
inline AdjLists induced_lists(const AdjLists& adj, std::uint64_t removed) {
  int n = static_cast<int>(adj.size());
  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!(removed >> v & 1)) new_id[static_cast<std::size_t>(v)] = next++;
  }
  AdjLists out(static_cast<std::size_t>(next));
  for (int v = 0; v < n; ++v) {
    int nv = new_id[static_cast<std::size_t>(v)];
    if (nv < 0) continue;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      int nw = new_id[static_cast<std::size_t>(w)];
      if (nw > nv) {
        out[static_cast<std::size_t>(nv)].push_back(nw);
        out[static_cast<std::size_t>(nw)].push_back(nv);
      }
    }
  }
  return out;
}

inline int gamma_minus(const domcrit::Graph& g, std::uint64_t removed) {
  return gamma_lists(induced_lists(adjacency_lists(g), removed));
}

// Definition-direct check: gamma(G - S) == gamma(G) - |S|.
inline bool st_critical(const domcrit::Graph& g, std::uint64_t s) {
  AdjLists adj = adjacency_lists(g);
  int size = std::popcount(s);
  if (size < 1 || size >= g.order()) return false;
  return gamma_lists(induced_lists(adj, s)) == gamma_lists(adj) - size;
}

inline bool connected_lists(const AdjLists& adj) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adj.size();
}

// Isomorphism-class key: the minimum over all vertex permutations of the
// upper-triangle adjacency bits packed into one word (needs n <= 11).
inline std::uint64_t canonical_key(int n, const std::vector<std::vector<char>>& m) {
  if (n < 1 || n > 11) throw std::invalid_argument("oracle key: bad order");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++bit) {
        if (m[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
             [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]) {
          key |= std::uint64_t{1} << bit;
        }
      }
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::uint64_t canonical_key(const domcrit::Graph& g) {
  int n = g.order();
  std::vector<std::vector<char>> m(static_cast<std::size_t>(n),
                                   std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : g.edges()) {
    m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  return canonical_key(n, m);
}

// Isomorphism classes of connected n-vertex graphs, as canonical keys,
// found by trying every edge subset of K_n.  Practical for n <= 6.
inline std::set<std::uint64_t> connected_class_keys(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("oracle census: bad order");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<std::uint64_t> keys;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << slots.size()); ++pick) {
    AdjLists adj(static_cast<std::size_t>(n));
    std::vector<std::vector<char>> m(
        static_cast<std::size_t>(n),
        std::vector<char>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (pick >> i & 1) {
        auto [u, v] = slots[i];
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
        m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
      }
    }
    if (connected_lists(adj)) keys.insert(canonical_key(n, m));
  }
  return keys;
}

}  // namespace oracle
