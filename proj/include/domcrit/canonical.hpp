#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "domcrit/graph.hpp"
#include "domcrit/graph6.hpp"

namespace domcrit {

namespace detail {

// Searches for the vertex ordering whose graph6 body (upper adjacency
// triangle, column-major) is lexicographically smallest.  Positions are
// filled left to right; a vertex placed at position p contributes its
// adjacency column toward the p already-placed vertices, and since every
// ordering emits the same number of bits per position, prefix comparison
// against the best column vector prunes exactly.  Entries of `best`
// beyond `valid` count as +infinity (first completed path writes them).
// Whenever two untried candidates are twins (swapping them is an
// automorphism), only the first is explored.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    if (n_ > 16) {
      throw std::invalid_argument(
          "exhaustive canonicalization is capped at 16 vertices");
    }
  }

  // Returns the placement: position i holds original vertex perm[i].
  std::vector<int> run() {
    best_.assign(static_cast<std::size_t>(n_), 0);
    valid_ = 0;
    placement_.assign(static_cast<std::size_t>(n_), -1);
    col_.assign(static_cast<std::size_t>(n_), 0);
    have_perm_ = false;
    dfs(0, VertexSet{}, false);
    return best_perm_;
  }

 private:
  bool twins(int u, int v) const {
    VertexSet nu = g_.neighbors(u);
    VertexSet nv = g_.neighbors(v);
    if (nu == nv) return true;  // non-adjacent twins
    return g_.adjacent(u, v) &&
           (nu - VertexSet::single(v)) == (nv - VertexSet::single(u));
  }

  void dfs(int p, VertexSet placed, bool wrote) {
    if (p == n_) {
      if (wrote || !have_perm_) {
        best_perm_ = placement_;
        have_perm_ = true;
      }
      return;
    }

    std::array<std::pair<std::uint64_t, int>, kMaxVertices> cand;
    int m = 0;
    for (int v : g_.vertices() - placed) {
      cand[static_cast<std::size_t>(m++)] = {col_[static_cast<std::size_t>(v)],
                                             v};
    }
    std::sort(cand.begin(), cand.begin() + m);

    VertexSet tried;
    for (int i = 0; i < m; ++i) {
      auto [col, v] = cand[static_cast<std::size_t>(i)];
      if (p < valid_ && col > best_[static_cast<std::size_t>(p)]) {
        break;  // sorted ascending: every later candidate is worse
      }
      bool skip = false;
      for (int u : tried) {
        if (twins(u, v)) {
          skip = true;
          break;
        }
      }
      tried.add(v);
      if (skip) continue;

      bool child_wrote = wrote;
      if (p >= valid_ || col < best_[static_cast<std::size_t>(p)]) {
        best_[static_cast<std::size_t>(p)] = col;
        valid_ = p + 1;
        child_wrote = true;
      }

      placement_[static_cast<std::size_t>(p)] = v;
      VertexSet nv = g_.neighbors(v);
      for (int w : g_.vertices() - placed - VertexSet::single(v)) {
        col_[static_cast<std::size_t>(w)] =
            (col_[static_cast<std::size_t>(w)] << 1) |
            (nv.contains(w) ? 1 : 0);
      }
      dfs(p + 1, placed | VertexSet::single(v), child_wrote);
      for (int w : g_.vertices() - placed - VertexSet::single(v)) {
        col_[static_cast<std::size_t>(w)] >>= 1;
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_;  // minimal column values found so far
  int valid_ = 0;                    // entries of best_ below this are set
  std::vector<std::uint64_t> col_;   // adjacency of v toward placed, as bits
  std::vector<int> placement_;
  std::vector<int> best_perm_;
  bool have_perm_ = false;
};

}  // namespace detail

// Relabeling of g that realizes the lexicographically smallest graph6
// body; two graphs are isomorphic iff their canonical forms are equal.
inline Graph canonical_form(const Graph& g) {
  std::vector<int> perm = detail::CanonicalSearch(g).run();
  int n = g.order();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int w : g.neighbors(perm[static_cast<std::size_t>(i)])) {
      adj[static_cast<std::size_t>(i)].add(pos[static_cast<std::size_t>(w)]);
    }
  }
  return Graph::from_neighborhoods(std::move(adj));
}

// Canonical form serialized as graph6 — a hashable isomorphism key.
inline std::string canonical_code(const Graph& g) {
  return write_graph6(canonical_form(g));
}

namespace detail {

// Joint color refinement: both graphs share one signature space so the
// final color histograms are comparable.  Returns false early when the
// histograms diverge (the graphs cannot be isomorphic).
inline bool joint_refinement(const Graph& a, const Graph& b,
                             std::vector<int>& ca, std::vector<int>& cb) {
  int na = a.order();
  ca.assign(static_cast<std::size_t>(na), 0);
  cb.assign(static_cast<std::size_t>(na), 0);
  for (int v = 0; v < na; ++v) ca[static_cast<std::size_t>(v)] = a.degree(v);
  for (int v = 0; v < na; ++v) cb[static_cast<std::size_t>(v)] = b.degree(v);

  for (int round = 0; round < na; ++round) {
    using Sig = std::pair<int, std::vector<int>>;
    std::map<Sig, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& c, int v) {
      std::vector<int> nb;
      for (int w : g.neighbors(v)) nb.push_back(c[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      return Sig{c[static_cast<std::size_t>(v)], std::move(nb)};
    };
    std::vector<Sig> sa, sb;
    for (int v = 0; v < na; ++v) sa.push_back(signature(a, ca, v));
    for (int v = 0; v < na; ++v) sb.push_back(signature(b, cb, v));
    for (const Sig& s : sa) ids.emplace(s, 0);
    for (const Sig& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;

    std::vector<int> histo_a(static_cast<std::size_t>(next), 0);
    std::vector<int> histo_b(static_cast<std::size_t>(next), 0);
    bool changed = false;
    for (int v = 0; v < na; ++v) {
      int id = ids.at(sa[static_cast<std::size_t>(v)]);
      if (id != ca[static_cast<std::size_t>(v)]) changed = true;
      ca[static_cast<std::size_t>(v)] = id;
      ++histo_a[static_cast<std::size_t>(id)];
    }
    for (int v = 0; v < na; ++v) {
      int id = ids.at(sb[static_cast<std::size_t>(v)]);
      if (id != cb[static_cast<std::size_t>(v)]) changed = true;
      cb[static_cast<std::size_t>(v)] = id;
      ++histo_b[static_cast<std::size_t>(id)];
    }
    if (histo_a != histo_b) return false;
    if (!changed) break;
  }
  return true;
}

inline bool extend_isomorphism(const Graph& a, const Graph& b,
                               const std::vector<int>& order, std::size_t k,
                               std::vector<int>& image, VertexSet used,
                               const std::vector<int>& ca,
                               const std::vector<int>& cb) {
  if (k == order.size()) return true;
  int v = order[k];
  for (int w = 0; w < b.order(); ++w) {
    if (used.contains(w)) continue;
    if (cb[static_cast<std::size_t>(w)] != ca[static_cast<std::size_t>(v)]) {
      continue;
    }
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      int u = order[j];
      if (a.adjacent(v, u) !=
          b.adjacent(w, image[static_cast<std::size_t>(u)])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    image[static_cast<std::size_t>(v)] = w;
    if (extend_isomorphism(a, b, order, k + 1, image,
                           used | VertexSet::single(w), ca, cb)) {
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Exact isomorphism test: joint color refinement narrows the candidate
// images, then backtracking finishes.  Deliberately independent of
// canonical_code so the two can cross-check each other.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<int> ca, cb;
  if (!detail::joint_refinement(a, b, ca, cb)) return false;

  // Rarest colors first keeps the branching factor small.
  std::vector<int> class_size(ca.size() + cb.size(), 0);
  for (int c : ca) {
    if (static_cast<std::size_t>(c) >= class_size.size()) {
      class_size.resize(static_cast<std::size_t>(c) + 1, 0);
    }
    ++class_size[static_cast<std::size_t>(c)];
  }
  std::vector<int> order(static_cast<std::size_t>(a.order()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int sx = class_size[static_cast<std::size_t>(ca[static_cast<std::size_t>(x)])];
    int sy = class_size[static_cast<std::size_t>(ca[static_cast<std::size_t>(y)])];
    if (sx != sy) return sx < sy;
    if (ca[static_cast<std::size_t>(x)] != ca[static_cast<std::size_t>(y)]) {
      return ca[static_cast<std::size_t>(x)] < ca[static_cast<std::size_t>(y)];
    }
    return x < y;
  });

  std::vector<int> image(static_cast<std::size_t>(a.order()), -1);
  return detail::extend_isomorphism(a, b, order, 0, image, VertexSet{}, ca, cb);
}

}  // namespace domcrit
