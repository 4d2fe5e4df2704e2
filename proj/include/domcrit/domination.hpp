#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "domcrit/graph.hpp"

namespace domcrit {

struct GammaCertificate {
  int gamma = 0;
  VertexSet witness;
};

inline bool is_dominating(const Graph& g, VertexSet d) {
  if (!g.vertices().contains_all(d)) {
    throw std::invalid_argument("dominating-set candidate has unknown vertices");
  }
  return closed_neighborhood(g, d) == g.vertices();
}

namespace detail {

// Exact minimum dominating set search: branch and bound over the set
// cover by closed neighborhoods.
//
// Branching picks an undominated vertex w with the fewest remaining
// dominators (its closed neighborhood minus excluded vertices) and
// splits on those candidates in decreasing fresh-coverage order;
// candidate i is excluded in branches i+1.., so every dominating set
// appears in exactly one leaf.  Vertices that are the sole remaining
// dominator of someone are forced without branching.  The bound is the
// larger of a greedy 2-packing among undominated vertices (their closed
// neighborhoods are pairwise disjoint, so each needs its own dominator)
// and |undominated| / max fresh coverage, rounded up.
//
// Modes:
//  * optimize (default): minimize |D| with required subset forced in;
//    stops early once best <= stop_at.
//  * enumerate (enumerate_target >= 0): collect every dominating set
//    D >= required with |D| == enumerate_target.  The target must be
//    gamma(g), otherwise smaller dominating sets would terminate
//    branches below the target size.
struct SolverOptions {
  VertexSet required;
  int stop_at = 0;
  int enumerate_target = -1;
  std::size_t solution_limit = std::numeric_limits<std::size_t>::max();
};

struct SolverOutcome {
  int best = std::numeric_limits<int>::max();
  VertexSet witness;
  std::vector<VertexSet> solutions;
  bool truncated = false;
};

class DominationSolver {
 public:
  DominationSolver(const Graph& g, SolverOptions opt)
      : opt_(opt), n_(g.order()), full_(g.vertices()) {
    closed_.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) closed_.push_back(g.closed_neighbors(v));
  }

  SolverOutcome run() {
    VertexSet chosen = opt_.required;
    VertexSet dominated = coverage(chosen);
    enumerate_ = opt_.enumerate_target >= 0;
    if (enumerate_) {
      best_ = opt_.enumerate_target + 1;
    } else {
      greedy_seed(chosen, dominated);
    }
    dfs(chosen, chosen.count(), dominated, VertexSet{});
    SolverOutcome out;
    out.best = best_;
    out.witness = witness_;
    out.solutions = std::move(solutions_);
    out.truncated = truncated_;
    return out;
  }

 private:
  static constexpr int kInfeasible = std::numeric_limits<int>::max() / 4;

  VertexSet coverage(VertexSet d) const {
    VertexSet out;
    for (int v : d) out |= closed_[static_cast<std::size_t>(v)];
    return out;
  }

  // Plain greedy gives the initial upper bound and incumbent witness.
  void greedy_seed(VertexSet chosen, VertexSet dominated) {
    while (dominated != full_) {
      int best_v = -1;
      int best_cover = 0;
      for (int v : full_ - chosen) {
        int cover = (closed_[static_cast<std::size_t>(v)] - dominated).count();
        if (cover > best_cover) {
          best_cover = cover;
          best_v = v;
        }
      }
      chosen.add(best_v);
      dominated |= closed_[static_cast<std::size_t>(best_v)];
    }
    best_ = chosen.count();
    witness_ = chosen;
  }

  int lower_bound(VertexSet undominated, VertexSet avail) const {
    int max_cover = 0;
    for (int v : avail) {
      int cover = (closed_[static_cast<std::size_t>(v)] & undominated).count();
      if (cover > max_cover) max_cover = cover;
    }
    if (max_cover == 0) return kInfeasible;
    int ratio = (undominated.count() + max_cover - 1) / max_cover;

    // Greedy 2-packing, tightest neighborhoods first.
    std::array<std::pair<int, int>, kMaxVertices> order;
    int m = 0;
    for (int v : undominated) {
      order[static_cast<std::size_t>(m++)] = {
          closed_[static_cast<std::size_t>(v)].count(), v};
    }
    std::sort(order.begin(), order.begin() + m);
    int packing = 0;
    VertexSet blocked;
    for (int i = 0; i < m; ++i) {
      int v = order[static_cast<std::size_t>(i)].second;
      if (!closed_[static_cast<std::size_t>(v)].intersects(blocked)) {
        blocked |= closed_[static_cast<std::size_t>(v)];
        ++packing;
      }
    }
    return std::max(ratio, packing);
  }

  void record(VertexSet chosen, int k) {
    if (enumerate_) {
      if (solutions_.size() >= opt_.solution_limit) {
        truncated_ = true;
        stop_ = true;
        return;
      }
      solutions_.push_back(chosen);
      if (k < best_) {
        best_ = k;
        witness_ = chosen;
      }
      return;
    }
    if (k < best_) {
      best_ = k;
      witness_ = chosen;
      if (best_ <= opt_.stop_at) stop_ = true;
    }
  }

  void dfs(VertexSet chosen, int k, VertexSet dominated, VertexSet excluded) {
    if (stop_) return;

    // Apply forced choices until the branch vertex is determined.
    VertexSet avail = full_ - excluded;
    int branch_w = -1;
    for (;;) {
      if (dominated == full_) {
        if (!enumerate_ || k == opt_.enumerate_target) record(chosen, k);
        return;
      }
      branch_w = -1;
      int branch_count = std::numeric_limits<int>::max();
      bool forced = false;
      for (int w : full_ - dominated) {
        int c = (closed_[static_cast<std::size_t>(w)] & avail).count();
        if (c == 0) return;  // w can no longer be dominated
        if (c == 1) {
          int v = (closed_[static_cast<std::size_t>(w)] & avail).lowest();
          chosen.add(v);
          ++k;
          dominated |= closed_[static_cast<std::size_t>(v)];
          forced = true;
          break;
        }
        if (c < branch_count) {
          branch_count = c;
          branch_w = w;
        }
      }
      if (!forced) break;
      if (enumerate_ ? k > opt_.enumerate_target : k >= best_) return;
    }

    VertexSet undominated = full_ - dominated;
    int bound = k + lower_bound(undominated, avail);
    if (enumerate_ ? bound > opt_.enumerate_target : bound >= best_) return;

    // Candidate dominators of the branch vertex, best fresh coverage
    // first; ties break toward the smaller id for determinism.
    VertexSet cands = closed_[static_cast<std::size_t>(branch_w)] & avail;
    std::array<std::pair<int, int>, kMaxVertices> order;
    int m = 0;
    for (int v : cands) {
      order[static_cast<std::size_t>(m++)] = {
          -(closed_[static_cast<std::size_t>(v)] & undominated).count(), v};
    }
    std::sort(order.begin(), order.begin() + m);

    VertexSet tried;
    for (int i = 0; i < m && !stop_; ++i) {
      int v = order[static_cast<std::size_t>(i)].second;
      dfs(chosen | VertexSet::single(v), k + 1,
          dominated | closed_[static_cast<std::size_t>(v)], excluded | tried);
      tried.add(v);
    }
  }

  SolverOptions opt_;
  int n_;
  VertexSet full_;
  std::vector<VertexSet> closed_;

  bool enumerate_ = false;
  bool stop_ = false;
  bool truncated_ = false;
  int best_ = std::numeric_limits<int>::max();
  VertexSet witness_;
  std::vector<VertexSet> solutions_;
};

}  // namespace detail

// gamma(g) with a witness minimum dominating set.  Exact for any graph
// up to 64 vertices, connected or not.
inline GammaCertificate gamma(const Graph& g) {
  auto out = detail::DominationSolver(g, {}).run();
  return {out.best, out.witness};
}

// Smallest dominating set containing `required`, stopping early once a
// set of size <= stop_at is in hand (0 disables early stop).
inline GammaCertificate gamma_with_required(const Graph& g, VertexSet required,
                                            int stop_at = 0) {
  if (!g.vertices().contains_all(required)) {
    throw std::invalid_argument("required set has unknown vertices");
  }
  detail::SolverOptions opt;
  opt.required = required;
  opt.stop_at = stop_at;
  auto out = detail::DominationSolver(g, opt).run();
  return {out.best, out.witness};
}

// Any dominating set of size <= max_size, or nullopt if gamma(g) exceeds
// max_size.  Decides "gamma <= max_size" without computing gamma exactly.
inline std::optional<VertexSet> find_dominating_set_within(const Graph& g,
                                                           int max_size) {
  if (max_size <= 0) return std::nullopt;
  detail::SolverOptions opt;
  opt.stop_at = max_size;
  auto out = detail::DominationSolver(g, opt).run();
  if (out.best <= max_size) return out.witness;
  return std::nullopt;
}

struct MdsEnumeration {
  std::vector<VertexSet> sets;
  bool truncated = false;
};

// Every minimum dominating set, sorted by bit pattern.  `limit` caps the
// collection; the report notes when it was hit.
inline MdsEnumeration all_mds(const Graph& g, std::size_t limit = 10000) {
  detail::SolverOptions opt;
  opt.enumerate_target = gamma(g).gamma;
  opt.solution_limit = limit;
  auto out = detail::DominationSolver(g, opt).run();
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return {std::move(out.solutions), out.truncated};
}

// Reference solver: subsets in increasing cardinality via Gosper's hack,
// so the first hit is a minimum dominating set and, within each size,
// the numerically smallest bit pattern.  Exponential; exists purely to
// cross-check the branch and bound.
inline GammaCertificate brute_force_gamma(const Graph& g) {
  int n = g.order();
  if (n > 32) {
    throw std::invalid_argument("brute_force_gamma is capped at 32 vertices");
  }
  VertexSet full = g.vertices();
  std::uint64_t end = std::uint64_t{1} << n;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < end) {
      VertexSet d(mask);
      if (closed_neighborhood(g, d) == full) return {k, d};
      std::uint64_t c = mask & (~mask + 1);
      std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  return {n, full};  // unreachable: the full set always dominates
}

}  // namespace domcrit
