#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domcrit/domination.hpp"
#include "domcrit/graph.hpp"

namespace domcrit {

// Pairwise distance > 2 — equivalently, pairwise disjoint closed
// neighborhoods, which is how it is checked.
inline bool is_two_packing(const Graph& g, VertexSet m) {
  if (!g.vertices().contains_all(m)) {
    throw std::invalid_argument("packing candidate has unknown vertices");
  }
  VertexSet seen;
  for (int v : m) {
    VertexSet cn = g.closed_neighbors(v);
    if (cn.intersects(seen)) return false;
    seen |= cn;
  }
  return true;
}

namespace detail {

inline bool critical_vertex_given_gamma(const Graph& g, int v, int gam) {
  auto sub = delete_vertices(g, VertexSet::single(v));
  // gamma(G-v) >= gamma(G) - 1 always holds, so <= means equality.
  return find_dominating_set_within(sub.graph, gam - 1).has_value();
}

}  // namespace detail

// True iff gamma(G - v) = gamma(G) - 1.
inline bool is_critical_vertex(const Graph& g, int v) {
  if (g.order() < 2) {
    throw std::invalid_argument("criticality of a vertex needs order >= 2");
  }
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument("vertex out of range");
  }
  return detail::critical_vertex_given_gamma(g, v, gamma(g).gamma);
}

// Every vertex critical.  K1 counts as vertex-critical by convention:
// it is the canonical one-part witness, and the achievable-part-count
// interval for K1 is {1}, which must end at n with the graph
// vertex-critical.
inline bool is_vertex_critical(const Graph& g) {
  if (g.order() == 1) return true;
  int gam = gamma(g).gamma;
  for (int v = 0; v < g.order(); ++v) {
    if (!detail::critical_vertex_given_gamma(g, v, gam)) return false;
  }
  return true;
}

// S together with a minimum dominating set of G - S (original ids).
struct StCriticalCertificate {
  VertexSet set;
  VertexSet witness;
};

namespace detail {

// Core st-criticality test; assumes S is a valid vertex set with
// S != V(G) whenever |S| < gam (guaranteed since gam <= n).  Deciding
// gamma(G-S) <= gam - |S| suffices: the reverse inequality always holds.
inline std::optional<StCriticalCertificate> st_critical_given_gamma(
    const Graph& g, VertexSet s, int gam) {
  int size = s.count();
  if (size >= gam) return std::nullopt;  // gamma(G-S) >= 1 > gam - |S|
  if (!is_two_packing(g, s)) return std::nullopt;  // necessary condition
  auto sub = delete_vertices(g, s);
  auto witness = find_dominating_set_within(sub.graph, gam - size);
  if (!witness) return std::nullopt;
  StCriticalCertificate cert{s, sub.to_original(*witness)};
  assert(cert.witness.count() == gam - size);
  assert(!cert.witness.intersects(open_neighborhood(g, s)));
  return cert;
}

}  // namespace detail

// Certificate iff gamma(G - S) = gamma(G) - |S|.  |S| > gamma(G) is
// simply non-critical; S = V(G) or S = {} is a usage error.
inline std::optional<StCriticalCertificate> is_st_critical(const Graph& g,
                                                           VertexSet s) {
  if (s.empty()) throw std::invalid_argument("st-critical set must be non-empty");
  if (!g.vertices().contains_all(s)) {
    throw std::invalid_argument("st-critical candidate has unknown vertices");
  }
  if (s == g.vertices()) {
    throw std::invalid_argument("st-critical set must be a proper subset");
  }
  return detail::st_critical_given_gamma(g, s, gamma(g).gamma);
}

// All st-critical vertex-sets of size <= max_size.  Candidates are grown
// as 2-packings in increasing-smallest-vertex order; a set that fails
// the test is never extended, because every subset of an st-critical set
// is itself st-critical (so a failing set has no st-critical superset).
inline std::vector<StCriticalCertificate> enumerate_st_critical_sets(
    const Graph& g, int max_size) {
  int gam = gamma(g).gamma;
  if (max_size > gam) {
    throw std::invalid_argument(
        "enumerate_st_critical_sets: max_size exceeds gamma");
  }
  std::vector<StCriticalCertificate> out;
  if (max_size < 1 || g.order() < 2) return out;

  auto grow = [&](auto&& self, VertexSet s, VertexSet blocked,
                  int next) -> void {
    for (int v = next; v < g.order(); ++v) {
      VertexSet cn = g.closed_neighbors(v);
      if (cn.intersects(blocked)) continue;  // keep the 2-packing
      VertexSet grown = s | VertexSet::single(v);
      auto cert = detail::st_critical_given_gamma(g, grown, gam);
      if (!cert) continue;
      out.push_back(*cert);
      if (grown.count() < max_size) {
        self(self, grown, blocked | cn, v + 1);
      }
    }
  };
  grow(grow, VertexSet{}, VertexSet{}, 0);
  std::sort(out.begin(), out.end(),
            [](const StCriticalCertificate& a, const StCriticalCertificate& b) {
              if (a.set.count() != b.set.count()) {
                return a.set.count() < b.set.count();
              }
              return a.set.bits() < b.set.bits();
            });
  return out;
}

struct CompatibilityVerdict {
  int x = 0;
  int y = 0;
  bool compatible = false;
  VertexSet witness;  // an MDS containing both, when compatible
};

// x and y are mutually compatible iff some minimum dominating set
// contains both — decided by forcing the pair into the branch and bound
// and asking whether the optimum stays at gamma(G).
inline CompatibilityVerdict compatibility(const Graph& j, int x, int y) {
  if (x == y) throw std::invalid_argument("compatibility needs two vertices");
  if (x < 0 || x >= j.order() || y < 0 || y >= j.order()) {
    throw std::invalid_argument("vertex out of range");
  }
  int gam = gamma(j).gamma;
  auto forced =
      gamma_with_required(j, VertexSet::of({x, y}), /*stop_at=*/gam);
  if (forced.gamma == gam) return {x, y, true, forced.witness};
  return {x, y, false, VertexSet{}};
}

struct TwoColoredGammaSet {
  VertexSet d1;  // contains the smallest vertex of the union
  VertexSet d2;
};

struct TwoColoredEnumeration {
  std::vector<TwoColoredGammaSet> sets;
  bool truncated = false;
};

// All two-colored gamma-sets: minimum dominating sets D that split into
// non-empty D1 and D2 with V - N[D1] = D2 and V - N[D2] = D1.
// Normalized so d1 holds the smallest vertex of D; ordered by (D, d1).
inline TwoColoredEnumeration find_two_colored_gamma_sets(
    const Graph& g, std::size_t limit = 10000) {
  TwoColoredEnumeration result;
  MdsEnumeration mds = all_mds(g);
  result.truncated = mds.truncated;
  VertexSet full = g.vertices();
  for (VertexSet d : mds.sets) {
    if (d.count() < 2) continue;
    std::uint64_t lead = std::uint64_t{1} << d.lowest();
    std::uint64_t rest = d.bits() & ~lead;
    // All submasks of rest, ascending, each unioned with the lead bit.
    std::uint64_t sub = 0;
    for (;;) {
      VertexSet d1(lead | sub);
      VertexSet d2 = d - d1;
      if (!d2.empty() && full - closed_neighborhood(g, d1) == d2 &&
          full - closed_neighborhood(g, d2) == d1) {
        if (result.sets.size() >= limit) {
          result.truncated = true;
          return result;
        }
        result.sets.push_back({d1, d2});
      }
      if (sub == rest) break;
      sub = (sub - rest) & rest;
    }
  }
  return result;
}

// One violation found while auditing the structural facts below.
struct AuditViolation {
  std::string rule;
  std::string tuple;
};

struct StructuralAudit {
  long checks = 0;  // instantiations examined across all rules
  std::vector<AuditViolation> violations;
  bool passed() const { return violations.empty(); }
};

// Audits, for a verified st-critical certificate (G, S):
//  * mds-avoids-neighborhood: every MDS of G-S misses N(S);
//  * escape-neighbor: every w outside S with a neighbor z in S has some
//    v0 in N(w)-{z} with N(v0) disjoint from S;
//  * interior-path-degree: on any path u-v-w-z with u,z in S (possibly
//    u = z) and v,w outside S, the inner vertex w has degree > 2;
//  * unique-attachment: if w outside S has degree 2 or 3 and every
//    neighbor of w has a neighbor in S, then N(N(w)) meets S in exactly
//    one vertex;
//  * degree2-trail: any trail u-v-w-y-z over four distinct edges with
//    u,z in S and d(w) = 2 must close up (u = z).
inline StructuralAudit audit_structural_lemmas(
    const Graph& g, const StCriticalCertificate& cert) {
  StructuralAudit audit;
  VertexSet s = cert.set;
  VertexSet ns = open_neighborhood(g, s);
  auto violation = [&](const char* rule, std::string tuple) {
    audit.violations.push_back({rule, std::move(tuple)});
  };

  // Every MDS of G-S avoids N(S).
  {
    auto sub = delete_vertices(g, s);
    for (VertexSet d : all_mds(sub.graph).sets) {
      ++audit.checks;
      VertexSet original = sub.to_original(d);
      if (original.intersects(ns)) {
        violation("mds-avoids-neighborhood",
                  "D=" + original.to_string() + " meets N(S)");
      }
    }
  }

  VertexSet outside = g.vertices() - s;
  for (int w : outside) {
    VertexSet nw = g.neighbors(w);

    // escape-neighbor, per neighbor z of w inside S.
    for (int z : nw & s) {
      ++audit.checks;
      bool found = false;
      for (int v0 : nw - VertexSet::single(z)) {
        if (!g.neighbors(v0).intersects(s)) {
          found = true;
          break;
        }
      }
      if (!found) {
        violation("escape-neighbor", "w=" + std::to_string(w) +
                                         " z=" + std::to_string(z));
      }
    }

    // interior-path-degree: u in S, v,w outside S, z in S.
    for (int v : nw - s) {
      for (int u : g.neighbors(v) & s) {
        for (int z : nw & s) {
          if (v == w || u == w || z == v) continue;
          ++audit.checks;
          if (g.degree(w) <= 2) {
            violation("interior-path-degree",
                      "u=" + std::to_string(u) + " v=" + std::to_string(v) +
                          " w=" + std::to_string(w) +
                          " z=" + std::to_string(z));
          }
        }
      }
    }

    // unique-attachment.
    int dw = g.degree(w);
    if (dw == 2 || dw == 3) {
      bool premise = true;
      for (int x : nw) {
        if (!g.neighbors(x).intersects(s)) {
          premise = false;
          break;
        }
      }
      if (premise) {
        ++audit.checks;
        VertexSet hits = open_neighborhood(g, nw) & s;
        if (hits.count() != 1) {
          violation("unique-attachment",
                    "w=" + std::to_string(w) + " N(N(w)) meets S in " +
                        hits.to_string());
        }
      }
    }

    // degree2-trail: w is the middle vertex of u-v-w-y-z.
    if (g.degree(w) == 2) {
      for (int v : nw) {
        if (s.contains(v)) continue;  // v adjacent to u in S, so v outside S
        for (int u : g.neighbors(v) & s) {
          if (u == w) continue;
          for (int y : nw - VertexSet::single(v)) {
            for (int z : g.neighbors(y) & s) {
              if (z == w) continue;
              ++audit.checks;
              if (u != z) {
                violation("degree2-trail",
                          "u=" + std::to_string(u) + " v=" + std::to_string(v) +
                              " w=" + std::to_string(w) +
                              " y=" + std::to_string(y) +
                              " z=" + std::to_string(z));
              }
            }
          }
        }
      }
    }
  }
  return audit;
}

// Connected, and every vertex of degree > 1 has exactly one neighbor of
// degree 1.  Vacuously true for K2 (no vertex of degree > 1); callers
// that care can test for that reading separately.
inline bool is_generalized_comb(const Graph& g) {
  if (g.order() < 2) {
    throw std::invalid_argument("generalized comb needs order >= 2");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("generalized comb test needs a connected graph");
  }
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= 1) continue;
    int leaves = 0;
    for (int u : g.neighbors(v)) {
      if (g.degree(u) == 1) ++leaves;
    }
    if (leaves != 1) return false;
  }
  return true;
}

}  // namespace domcrit
