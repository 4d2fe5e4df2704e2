#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "domcrit/census.hpp"
#include "domcrit/coalescence.hpp"
#include "domcrit/criticality.hpp"
#include "domcrit/domination.hpp"
#include "domcrit/families.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/partition.hpp"
#include "domcrit/rng.hpp"

namespace domcrit {

// Outcome of one property sweep: how many individual assertions ran and
// how many failed, with the first few failures spelled out.
struct SweepReport {
  std::string name;
  long cases = 0;
  long violations = 0;
  std::vector<std::string> details;
  double elapsed_ms = 0.0;

  bool passed() const { return violations == 0 && cases > 0; }
};

namespace detail {

constexpr std::size_t kMaxSweepDetails = 8;

inline void record_violation(SweepReport& report, std::string what) {
  ++report.violations;
  if (report.details.size() < kMaxSweepDetails) {
    report.details.push_back(std::move(what));
  }
}

inline void check_case(SweepReport& report, bool ok, const char* rule,
                       const std::string& context) {
  ++report.cases;
  if (!ok) record_violation(report, std::string(rule) + ": " + context);
}

}  // namespace detail

// gamma(C_n) = gamma(P_n) = ceil(n/3), the two closed-form anchors.
inline SweepReport sweep_formula_oracles() {
  detail::Timer timer;
  SweepReport report;
  report.name = "formula-oracles";
  for (int n = 3; n <= 30; ++n) {
    detail::check_case(report, gamma(cycle_graph(n)).gamma == (n + 2) / 3,
                       "gamma(C_n) = ceil(n/3)", "n=" + std::to_string(n));
  }
  for (int n = 1; n <= 30; ++n) {
    detail::check_case(report, gamma(path_graph(n)).gamma == (n + 2) / 3,
                       "gamma(P_n) = ceil(n/3)", "n=" + std::to_string(n));
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// Branch-and-bound solver against the subset-enumeration oracle:
// exhaustive over connected graphs up to n_exhaustive, then seeded
// random graphs on 8..12 vertices.
inline SweepReport sweep_solver_vs_brute(ConnectedCensus& census,
                                         int n_exhaustive = 7,
                                         int random_trials = 200,
                                         std::uint64_t seed = 0) {
  detail::Timer timer;
  SweepReport report;
  report.name = "solver-vs-brute-force";

  auto compare = [&](const Graph& g, const std::string& label) {
    GammaCertificate solved = gamma(g);
    GammaCertificate brute = brute_force_gamma(g);
    detail::check_case(report, solved.gamma == brute.gamma,
                       "solver gamma != brute force",
                       label + " solver=" + std::to_string(solved.gamma) +
                           " brute=" + std::to_string(brute.gamma));
    detail::check_case(report,
                       is_dominating(g, solved.witness) &&
                           solved.witness.count() == solved.gamma,
                       "witness is not a minimum dominating set", label);
  };

  for (int n = 1; n <= n_exhaustive; ++n) {
    for (const Graph& g : census.graphs(n)) compare(g, write_graph6(g));
  }
  SplitMix64 rng(seed);
  for (int t = 0; t < random_trials; ++t) {
    int n = rng.range(8, 12);
    int percent = rng.range(15, 85);
    Graph g = (t % 2 == 0) ? random_graph(n, percent, rng)
                           : random_connected_graph(n, percent / 2, rng);
    compare(g, "trial " + std::to_string(t) + " " + write_graph6(g));
  }
  report.elapsed_ms = timer.ms();
  return report;
}

namespace detail {

// All structural facts hanging off one graph's st-critical sets, plus
// the vertex-removal and two-colored invariants.  subset_scan gates the
// exponential all-subsets bound check.
inline void structural_checks_one_graph(const Graph& g, bool subset_scan,
                                        SweepReport& report) {
  const std::string label = write_graph6(g);
  int n = g.order();
  int gam = gamma(g).gamma;

  // Vertex removal: gamma never drops by more than one, and dropping by
  // exactly one is what being a critical vertex means.
  if (n >= 2) {
    for (int v = 0; v < n; ++v) {
      int reduced =
          gamma(delete_vertices(g, VertexSet::single(v)).graph).gamma;
      std::string ctx = label + " v=" + std::to_string(v);
      check_case(report, reduced >= gam - 1,
                 "gamma(G-v) < gamma(G) - 1", ctx);
      check_case(report, (reduced == gam - 1) == is_critical_vertex(g, v),
                 "critical-vertex classification mismatch", ctx);
    }
  }

  // No neighbor of a degree-1 vertex is critical.
  if (n >= 2) {
    for (int u = 0; u < n; ++u) {
      if (g.degree(u) != 1) continue;
      for (int v : g.neighbors(u)) {
        check_case(report, !is_critical_vertex(g, v),
                   "support vertex is critical",
                   label + " leaf=" + std::to_string(u) +
                       " support=" + std::to_string(v));
      }
    }
  }

  // Everything quantified over st-critical sets.
  auto sets = enumerate_st_critical_sets(g, gam - 1);
  for (const StCriticalCertificate& cert : sets) {
    const std::string set_ctx = label + " S=" + cert.set.to_string();

    check_case(report, is_two_packing(g, cert.set),
               "st-critical set is not a 2-packing", set_ctx);

    StructuralAudit audit = audit_structural_lemmas(g, cert);
    ++report.cases;
    if (!audit.passed()) {
      for (const AuditViolation& v : audit.violations) {
        record_violation(report, "structural audit [" + v.rule + "]: " +
                                     set_ctx + " " + v.tuple);
      }
    }

    // Subset closure: every non-empty subset is st-critical too.
    std::uint64_t bits = cert.set.bits();
    for (std::uint64_t sub = (bits - 1) & bits; sub;
         sub = (sub - 1) & bits) {
      check_case(
          report,
          detail::st_critical_given_gamma(g, VertexSet(sub), gam).has_value(),
          "subset of st-critical set is not st-critical",
          set_ctx + " T=" + VertexSet(sub).to_string());
    }

    // Disjoint split: S1 stays st-critical after deleting S2.
    for (std::uint64_t s2 = (bits - 1) & bits; s2; s2 = (s2 - 1) & bits) {
      std::uint64_t rest = bits & ~s2;
      auto sub = delete_vertices(g, VertexSet(s2));
      std::vector<int> to_new(static_cast<std::size_t>(n), -1);
      for (std::size_t i = 0; i < sub.original_id.size(); ++i) {
        to_new[static_cast<std::size_t>(sub.original_id[i])] =
            static_cast<int>(i);
      }
      for (std::uint64_t s1 = rest; s1; s1 = (s1 - 1) & rest) {
        VertexSet mapped;
        for (int v : VertexSet(s1)) {
          mapped.add(to_new[static_cast<std::size_t>(v)]);
        }
        check_case(report,
                   is_st_critical(sub.graph, mapped).has_value(),
                   "split of st-critical set fails in reduced graph",
                   set_ctx + " S1=" + VertexSet(s1).to_string() +
                       " S2=" + VertexSet(s2).to_string());
      }
    }
  }

  // Two-colored gamma-sets: re-verify the defining equations and that
  // both color classes are st-critical.
  for (const TwoColoredGammaSet& tc : find_two_colored_gamma_sets(g).sets) {
    VertexSet d = tc.d1 | tc.d2;
    const std::string tc_ctx =
        label + " D1=" + tc.d1.to_string() + " D2=" + tc.d2.to_string();
    check_case(report,
               !tc.d1.empty() && !tc.d2.empty() && !tc.d1.intersects(tc.d2) &&
                   g.vertices() - closed_neighborhood(g, tc.d1) == tc.d2 &&
                   g.vertices() - closed_neighborhood(g, tc.d2) == tc.d1,
               "two-colored equations fail on recheck", tc_ctx);
    check_case(report,
               is_dominating(g, d) &&
                   d.count() == brute_force_gamma(g).gamma,
               "two-colored set is not a minimum dominating set", tc_ctx);
    check_case(report,
               detail::st_critical_given_gamma(g, tc.d1, gam).has_value() &&
                   detail::st_critical_given_gamma(g, tc.d2, gam).has_value(),
               "two-colored color class is not st-critical", tc_ctx);
  }

  // gamma(G-S) >= gamma(G) - |S| over every proper subset.
  if (subset_scan && n >= 2) {
    std::uint64_t full = g.vertices().bits();
    for (std::uint64_t s = 1; s < full; ++s) {
      VertexSet vs(s);
      int reduced = gamma(delete_vertices(g, vs).graph).gamma;
      check_case(report, reduced >= gam - vs.count(),
                 "gamma(G-S) < gamma(G) - |S|",
                 label + " S=" + vs.to_string());
    }
  }
}

}  // namespace detail

// The structural property suite: vertex-removal bounds, support-vertex
// rule, 2-packing, MDS-avoidance and neighborhood audits, subset
// closure, disjoint splits, two-colored consistency, and the deletion
// lower bound.  Exhaustive through n_exhaustive; st-critical-set checks
// run on every graph through n_stcrit, the all-subsets scan is sampled
// there.
inline SweepReport sweep_structural_lemmas(ConnectedCensus& census,
                                           int n_exhaustive = 6,
                                           int n_stcrit = 7,
                                           int spot_stride = 20) {
  detail::Timer timer;
  SweepReport report;
  report.name = "structural-lemmas";
  for (int n = 1; n <= n_stcrit; ++n) {
    const auto& graphs = census.graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      bool subset_scan =
          n <= n_exhaustive ||
          (i % static_cast<std::size_t>(spot_stride) == 0);
      detail::structural_checks_one_graph(graphs[i], subset_scan, report);
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// Partition-structure invariants: the achievable part counts form a
// contiguous interval ending at n exactly when the graph is
// vertex-critical, and the exact-l search agrees with the enumeration.
inline SweepReport sweep_partition_structure(ConnectedCensus& census,
                                             int n_max = 6,
                                             int n_crosscheck = 5) {
  detail::Timer timer;
  SweepReport report;
  report.name = "partition-structure";
  for (int n = 1; n <= n_max; ++n) {
    for (const Graph& g : census.graphs(n)) {
      const std::string label = write_graph6(g);
      SequenceReport seq = achievable_part_counts(g);
      bool critical = is_vertex_critical(g);

      detail::check_case(report, seq.achievable_l.empty() != critical,
                         "achievable part counts non-empty <=> "
                         "vertex-critical fails",
                         label);
      if (!seq.achievable_l.empty()) {
        bool contiguous = true;
        for (std::size_t i = 1; i < seq.achievable_l.size(); ++i) {
          if (seq.achievable_l[i] != seq.achievable_l[i - 1] + 1) {
            contiguous = false;
          }
        }
        detail::check_case(report,
                           contiguous && seq.achievable_l.back() == n,
                           "achievable part counts not a contiguous "
                           "interval ending at n",
                           label);
      }
      if (n <= n_crosscheck) {
        for (int l = 1; l <= n; ++l) {
          bool listed = std::find(seq.achievable_l.begin(),
                                  seq.achievable_l.end(),
                                  l) != seq.achievable_l.end();
          detail::check_case(report,
                             find_partition(g, l).has_value() == listed,
                             "exact partition search disagrees with "
                             "enumeration",
                             label + " l=" + std::to_string(l));
        }
      }
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// Single-vertex coalescence, exhaustively: the glued graph is
// vertex-critical exactly when both inputs are, and gamma lands in
// [gamma_g + gamma_h - 1, gamma_g + gamma_h], hitting the bottom when
// the criticality condition holds.
inline SweepReport sweep_single_coalescence_iff(ConnectedCensus& census,
                                                int n_max = 5) {
  detail::Timer timer;
  SweepReport report;
  report.name = "single-coalescence-iff";

  struct Entry {
    Graph graph;
    int gamma = 0;
    bool critical = false;
  };
  std::vector<Entry> entries;
  for (int n = 1; n <= n_max; ++n) {
    for (const Graph& g : census.graphs(n)) {
      entries.push_back({g, gamma(g).gamma, is_vertex_critical(g)});
    }
  }

  for (const Entry& a : entries) {
    for (const Entry& b : entries) {
      for (int u = 0; u < a.graph.order(); ++u) {
        for (int w = 0; w < b.graph.order(); ++w) {
          Graph glued = vertex_coalescence(a.graph, u, b.graph, w).graph;
          int gam = gamma(glued).gamma;
          std::string ctx = write_graph6(a.graph) + "@" + std::to_string(u) +
                            " . " + write_graph6(b.graph) + "@" +
                            std::to_string(w);
          detail::check_case(
              report, a.gamma + b.gamma - 1 <= gam && gam <= a.gamma + b.gamma,
              "coalescence gamma outside sandwich", ctx);
          bool both = a.critical && b.critical;
          bool glued_critical = is_vertex_critical(glued);
          detail::check_case(report, glued_critical == both,
                             "vertex-criticality biconditional fails", ctx);
          if (both) {
            detail::check_case(report, gam == a.gamma + b.gamma - 1,
                               "critical coalescence misses gamma equality",
                               ctx);
          }
        }
      }
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// Seeded random vertex-set coalescences: sandwich bounds, the
// st-critical biconditional, and the conditional gamma equality.
inline SweepReport sweep_coalescence_bounds(int trials = 100,
                                            std::uint64_t seed = 0) {
  detail::Timer timer;
  SweepReport report;
  report.name = "set-coalescence-bounds";
  SplitMix64 rng(seed);

  auto random_input = [&](int variant) -> Graph {
    switch (variant) {
      case 1:
        return cycle_graph(4);
      case 2:
        return harary_graph(4, 6);
      default:
        return random_connected_graph(rng.range(3, 7), rng.range(10, 50), rng);
    }
  };

  for (int t = 0; t < trials; ++t) {
    // Mix vertex-critical family members in so the equality branch and
    // the positive side of the biconditional both get exercised.
    Graph g = random_input(t % 4 == 1 ? 1 : (t % 4 == 2 ? 2 : 0));
    Graph h = random_input(t % 4 == 2 ? 1 : 0);
    int m = rng.range(1, std::min({3, g.order(), h.order()}));
    VertexSet x = random_subset(g.vertices(), m, rng);
    VertexSet y = random_subset(h.vertices(), m, rng);
    SetCoalescenceCheck check = verify_set_coalescence(g, x, h, y);
    std::string ctx = "trial " + std::to_string(t) + " " + write_graph6(g) +
                      " X=" + x.to_string() + " . " + write_graph6(h) +
                      " Y=" + y.to_string();
    detail::check_case(report, check.lower_bound_ok && check.upper_bound_ok,
                       "gamma sandwich violated", ctx);
    detail::check_case(report, check.iff_ok,
                       "st-critical biconditional violated", ctx);
    detail::check_case(report, check.equality_ok,
                       "gamma equality violated for st-critical glue", ctx);
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// Seeded partitioned pairs: merging the first parts of two partitions
// yields an st-critical partition of the coalescence exactly when both
// input families were st-critical partitions.
inline SweepReport sweep_partition_coalescence(int trials = 50,
                                               std::uint64_t seed = 0) {
  detail::Timer timer;
  SweepReport report;
  report.name = "partition-coalescence";
  SplitMix64 rng(seed);

  struct Seeded {
    Graph graph;
    std::vector<VertexSet> parts;
  };
  std::vector<Seeded> pool;
  auto add_pool = [&](const Graph& g, int l) {
    auto part = find_partition(g, l);
    if (part) pool.push_back({g, part->part_sets()});
  };
  add_pool(cycle_graph(4), 4);
  add_pool(build_c4_power(2).graph, 6);
  add_pool(build_c4_power(2).graph, 7);
  add_pool(harary_graph(4, 6), 6);

  // Rotates some singleton part to the front so two entries can always
  // be glued along equal-size first parts.
  auto singleton_first = [](std::vector<VertexSet> parts) {
    auto it = std::find_if(parts.begin(), parts.end(),
                           [](VertexSet p) { return p.count() == 1; });
    if (it != parts.end()) std::iter_swap(parts.begin(), it);
    return parts;
  };

  auto random_partition = [&](const Graph& g) {
    // First part is a random singleton; the rest of V splits at random.
    std::vector<VertexSet> parts;
    int first = rng.below(static_cast<std::uint64_t>(g.order()));
    parts.push_back(VertexSet::single(static_cast<int>(first)));
    int extra = g.order() == 1 ? 0 : 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < extra; ++i) parts.push_back({});
    for (int v = 0; v < g.order(); ++v) {
      if (v == static_cast<int>(first)) continue;
      std::size_t slot =
          1 + static_cast<std::size_t>(rng.below(
                  static_cast<std::uint64_t>(parts.size() - 1)));
      parts[slot].add(v);
    }
    std::erase_if(parts, [](VertexSet p) { return p.empty(); });
    return parts;
  };

  for (int t = 0; t < trials; ++t) {
    Seeded left{complete_graph(1), {}};
    Seeded right{complete_graph(1), {}};
    int variant = t % 3;
    if (variant == 0) {
      left = pool[rng.below(pool.size())];
      right = pool[rng.below(pool.size())];
      left.parts = singleton_first(left.parts);
      right.parts = singleton_first(right.parts);
    } else {
      Graph g = random_connected_graph(rng.range(3, 6), rng.range(10, 50), rng);
      right = {g, random_partition(g)};
      if (variant == 1) {
        left = pool[rng.below(pool.size())];
        left.parts = singleton_first(left.parts);
      } else {
        Graph g2 =
            random_connected_graph(rng.range(3, 6), rng.range(10, 50), rng);
        left = {g2, random_partition(g2)};
      }
    }
    PartitionMergeCheck check = verify_partition_coalescence(
        left.graph, left.parts, right.graph, right.parts);
    std::string ctx = "trial " + std::to_string(t) + " " +
                      write_graph6(left.graph) + " . " +
                      write_graph6(right.graph);
    detail::check_case(report, check.biconditional_ok,
                       "partition-merge biconditional fails", ctx);
    if (variant == 0) {
      detail::check_case(report,
                         check.left_side() && check.right_side() &&
                             check.merged_part_count ==
                                 static_cast<int>(left.parts.size() +
                                                  right.parts.size() - 1),
                         "seeded family merge did not stay st-critical", ctx);
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// Seeded vertex identification: gamma loses at most one, and staying
// equal happens exactly when the pair is mutually incompatible and
// neither endpoint is critical.
inline SweepReport sweep_identification(int trials = 100,
                                        std::uint64_t seed = 0) {
  detail::Timer timer;
  SweepReport report;
  report.name = "vertex-identification";
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = rng.range(4, 9);
    Graph j = random_connected_graph(n, rng.range(10, 60), rng);
    int x = rng.range(0, n - 1);
    int y = rng.range(0, n - 1);
    if (x == y) y = (y + 1) % n;
    int gam = gamma(j).gamma;
    int merged = gamma(identify_vertices(j, x, y).graph).gamma;
    std::string ctx = "trial " + std::to_string(t) + " " + write_graph6(j) +
                      " x=" + std::to_string(x) + " y=" + std::to_string(y);
    detail::check_case(report, gam - 1 <= merged && merged <= gam,
                       "identification gamma outside sandwich", ctx);
    bool incompatible = !compatibility(j, x, y).compatible;
    bool equality_expected = incompatible && !is_critical_vertex(j, x) &&
                             !is_critical_vertex(j, y);
    detail::check_case(report, (merged == gam) == equality_expected,
                       "identification equality characterization fails", ctx);
  }
  report.elapsed_ms = timer.ms();
  return report;
}

// Canonical codes against the independent refinement-plus-backtracking
// isomorphism test, on seeded random pairs (half mutated relabelings,
// half unrelated graphs).
inline SweepReport sweep_canonical_crosscheck(int trials = 200,
                                              std::uint64_t seed = 0) {
  detail::Timer timer;
  SweepReport report;
  report.name = "canonical-vs-isomorphism";
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int n = rng.range(2, 8);
    Graph a = random_graph(n, rng.range(15, 85), rng);
    Graph b = [&] {
      if (t % 2 == 0) {
        // Random relabeling of a.
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i) {
          std::swap(perm[static_cast<std::size_t>(i)],
                    perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
        }
        std::vector<Edge> edges;
        for (auto [u, v] : a.edges()) {
          edges.emplace_back(perm[static_cast<std::size_t>(u)],
                             perm[static_cast<std::size_t>(v)]);
        }
        return Graph(n, edges);
      }
      return random_graph(n, rng.range(15, 85), rng);
    }();
    bool iso = is_isomorphic(a, b);
    bool same_code = canonical_code(a) == canonical_code(b);
    detail::check_case(report, iso == same_code,
                       "canonical code disagrees with isomorphism test",
                       "trial " + std::to_string(t) + " " + write_graph6(a) +
                           " vs " + write_graph6(b));
  }
  report.elapsed_ms = timer.ms();
  return report;
}

}  // namespace domcrit
