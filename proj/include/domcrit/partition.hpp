#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "domcrit/criticality.hpp"
#include "domcrit/graph.hpp"

namespace domcrit {

// Partition of V(G) into st-critical parts, each with its certificate.
struct StCriticalPartition {
  std::vector<StCriticalCertificate> parts;

  std::vector<VertexSet> part_sets() const {
    std::vector<VertexSet> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(p.set);
    return out;
  }
};

// All achievable part counts and part-size multisets of a graph.
struct SequenceReport {
  std::vector<int> achievable_l;               // ascending
  std::vector<std::vector<int>> sequences;     // non-increasing tuples, sorted
};

namespace detail {

// Backtracking search over partitions of V(G) into st-critical parts.
// Vertices are assigned in id order to an existing part or a fresh one
// (restricted growth: parts stay ordered by smallest member, so each set
// partition is visited once).  A vertex may join a part only if the
// grown part is itself st-critical — sound because every subset of an
// st-critical set is st-critical, so prefixes of a good final part never
// fail.  Growth also preserves the 2-packing property via a per-part
// closed-neighborhood mask.  Verdicts are memoized per bitmask for the
// lifetime of one search.
class PartitionSearch {
 public:
  explicit PartitionSearch(const Graph& g)
      : g_(g), n_(g.order()), gam_(gamma(g).gamma) {}

  // First partition into exactly l parts under lexicographic assignment.
  std::optional<StCriticalPartition> find_exact(int l) {
    if (n_ == 1) {
      if (l != 1) return std::nullopt;
      return StCriticalPartition{{{VertexSet::single(0), VertexSet{}}}};
    }
    target_ = l;
    found_.reset();
    parts_.clear();
    hull_.clear();
    dfs_exact(0);
    return found_;
  }

  // Visits the part-size vector of every partition into st-critical
  // parts, in lexicographic assignment order.
  template <typename Visitor>
  void enumerate(Visitor&& visit) {
    if (n_ == 1) {
      visit(std::vector<int>{1});
      return;
    }
    parts_.clear();
    hull_.clear();
    dfs_enumerate(0, visit);
  }

 private:
  static constexpr std::uint64_t kNotCritical = ~std::uint64_t{0};

  // Witness bits for an st-critical part, kNotCritical otherwise.  The
  // sentinel never collides: a witness lives in V - S and V has at most
  // 64 vertices with S non-empty.
  std::uint64_t part_verdict(VertexSet s) {
    auto it = memo_.find(s.bits());
    if (it != memo_.end()) return it->second;
    auto cert = st_critical_given_gamma(g_, s, gam_);
    std::uint64_t verdict = cert ? cert->witness.bits() : kNotCritical;
    memo_.emplace(s.bits(), verdict);
    return verdict;
  }

  bool grow_allowed(std::size_t slot, int v) const {
    return !g_.closed_neighbors(v).intersects(hull_[slot]);
  }

  void push(std::size_t slot, int v) {
    if (slot == parts_.size()) {
      parts_.push_back(VertexSet{});
      hull_.push_back(VertexSet{});
    }
    parts_[slot].add(v);
    hull_[slot] |= g_.closed_neighbors(v);
  }

  void pop(std::size_t slot, int v) {
    parts_[slot].remove(v);
    if (parts_[slot].empty()) {
      parts_.pop_back();
      hull_.pop_back();
    } else {
      hull_[slot] = VertexSet{};
      for (int w : parts_[slot]) hull_[slot] |= g_.closed_neighbors(w);
    }
  }

  void dfs_exact(int v) {
    if (found_) return;
    if (v == n_) {
      if (static_cast<int>(parts_.size()) != target_) return;
      StCriticalPartition result;
      for (VertexSet p : parts_) {
        result.parts.push_back({p, VertexSet(part_verdict(p))});
      }
      found_ = std::move(result);
      return;
    }
    int remaining = n_ - v;
    if (static_cast<int>(parts_.size()) + remaining < target_) return;

    std::size_t open = parts_.size();
    for (std::size_t slot = 0; slot <= open && !found_; ++slot) {
      if (slot == open && static_cast<int>(open) >= target_) break;
      if (slot < open && !grow_allowed(slot, v)) continue;
      VertexSet grown =
          (slot == open ? VertexSet{} : parts_[slot]) | VertexSet::single(v);
      if (part_verdict(grown) == kNotCritical) continue;
      push(slot, v);
      dfs_exact(v + 1);
      pop(slot, v);
    }
  }

  template <typename Visitor>
  void dfs_enumerate(int v, Visitor&& visit) {
    if (v == n_) {
      std::vector<int> sizes;
      sizes.reserve(parts_.size());
      for (VertexSet p : parts_) sizes.push_back(p.count());
      std::sort(sizes.begin(), sizes.end(), std::greater<>());
      visit(std::move(sizes));
      return;
    }
    std::size_t open = parts_.size();
    for (std::size_t slot = 0; slot <= open; ++slot) {
      if (slot < open && !grow_allowed(slot, v)) continue;
      VertexSet grown =
          (slot == open ? VertexSet{} : parts_[slot]) | VertexSet::single(v);
      if (part_verdict(grown) == kNotCritical) continue;
      push(slot, v);
      dfs_enumerate(v + 1, visit);
      pop(slot, v);
    }
  }

  const Graph& g_;
  int n_;
  int gam_;
  int target_ = 0;
  std::vector<VertexSet> parts_;
  std::vector<VertexSet> hull_;  // union of closed neighborhoods per part
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
  std::optional<StCriticalPartition> found_;
};

}  // namespace detail

// Partition of V(G) into exactly l st-critical parts, if one exists.
// Deterministic: first hit in lexicographic vertex-assignment order.
inline std::optional<StCriticalPartition> find_partition(const Graph& g,
                                                         int l) {
  if (l < 1 || l > g.order()) {
    throw std::invalid_argument("part count must be within [1, n]");
  }
  return detail::PartitionSearch(g).find_exact(l);
}

inline bool is_strong_l_critical(const Graph& g, int l) {
  return find_partition(g, l).has_value();
}

// Exhaustive sweep over all partitions into st-critical parts: which
// part counts are achievable, and which size multisets occur.
inline SequenceReport achievable_part_counts(const Graph& g) {
  std::set<int> ls;
  std::set<std::vector<int>> seqs;
  detail::PartitionSearch(g).enumerate([&](std::vector<int> sizes) {
    ls.insert(static_cast<int>(sizes.size()));
    seqs.insert(std::move(sizes));
  });
  SequenceReport report;
  report.achievable_l.assign(ls.begin(), ls.end());
  report.sequences.assign(seqs.begin(), seqs.end());
  return report;
}

}  // namespace domcrit
