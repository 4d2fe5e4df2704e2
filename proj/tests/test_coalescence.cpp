#include <catch2/catch_amalgamated.hpp>

#include "domcrit/census.hpp"
#include "domcrit/coalescence.hpp"
#include "domcrit/families.hpp"
#include "oracles.hpp"

using namespace domcrit;

TEST_CASE("vertex coalescence glues at one shared vertex") {
  Graph c4 = cycle_graph(4);
  CoalescedGraph glued = vertex_coalescence(c4, 0, c4, 0);
  CHECK(glued.graph.order() == 7);
  CHECK(glued.graph.edge_count() == 8);
  CHECK(glued.graph.degree(0) == 4);
  CHECK(glued.left_map == std::vector<int>{0, 1, 2, 3});
  CHECK(glued.right_map == std::vector<int>{0, 4, 5, 6});
  CHECK(glued.map_right(VertexSet::of({0, 2})) == VertexSet::of({0, 5}));
  CHECK(is_connected(glued.graph));
  // both attachment vertices are critical, so gamma drops by one
  CHECK(gamma(glued.graph).gamma == 3);
  CHECK(oracle::gamma(glued.graph) == 3);
}

TEST_CASE("glued vertex is critical only when both attachments are") {
  // one non-critical attachment: the merged vertex loses criticality,
  // though gamma may still land anywhere inside the sandwich
  Graph c4 = cycle_graph(4);
  Graph p3 = path_graph(3);
  CHECK(!is_critical_vertex(p3, 0));
  CoalescedGraph low = vertex_coalescence(c4, 0, p3, 0);
  CHECK(!is_critical_vertex(low.graph, 0));
  CHECK(gamma(low.graph).gamma >= gamma(c4).gamma + gamma(p3).gamma - 1);
  CHECK(gamma(low.graph).gamma <= gamma(c4).gamma + gamma(p3).gamma);
  CHECK(gamma(low.graph).gamma == oracle::gamma(low.graph));

  // two five-paths glued at their centers attain the upper bound
  Graph p5 = path_graph(5);
  CHECK(!is_critical_vertex(p5, 2));
  CoalescedGraph high = vertex_coalescence(p5, 2, p5, 2);
  CHECK(gamma(high.graph).gamma == gamma(p5).gamma + gamma(p5).gamma);
  CHECK(!is_critical_vertex(high.graph, 2));
  CHECK(gamma(high.graph).gamma == oracle::gamma(high.graph));
}

TEST_CASE("set coalescence validates its plan") {
  Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS(vertex_set_coalescence(c4, c4, CoalescenceSpec{{}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(vertex_set_coalescence(c4, c4, CoalescenceSpec{{{0, 4}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      vertex_set_coalescence(c4, c4, CoalescenceSpec{{{0, 0}, {0, 1}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      vertex_set_coalescence(c4, c4, CoalescenceSpec{{{0, 0}, {1, 0}}}),
      std::invalid_argument);
  CHECK_THROWS_AS(vertex_coalescence(complete_graph(40), 0, complete_graph(30), 0),
                  std::invalid_argument);
}

TEST_CASE("pairwise set coalescence merges the chosen vertices") {
  Graph c6a = cycle_graph(6);
  Graph c6b = cycle_graph(6);
  CoalescedGraph glued = vertex_set_coalescence(
      c6a, c6b, CoalescenceSpec{{{0, 0}, {3, 3}}});
  CHECK(glued.graph.order() == 10);
  CHECK(glued.graph.degree(0) == 4);
  CHECK(glued.graph.degree(3) == 4);
  CHECK(glued.right_map[0] == 0);
  CHECK(glued.right_map[3] == 3);
}

TEST_CASE("set coalescence bounds and criticality transfer") {
  Graph c4 = cycle_graph(4);
  SetCoalescenceCheck check =
      verify_set_coalescence(c4, VertexSet::single(0), c4, VertexSet::single(0));
  CHECK(check.gamma_g == 2);
  CHECK(check.gamma_h == 2);
  CHECK(check.gamma_coalesced == 3);
  CHECK(check.lower_bound_ok);
  CHECK(check.upper_bound_ok);
  CHECK(check.x_critical_in_g);
  CHECK(check.y_critical_in_h);
  CHECK(check.x_critical_in_coalesced);
  CHECK(check.iff_ok);
  CHECK(check.equality_applicable);
  CHECK(check.equality_ok);
  CHECK(check.all_ok());

  // a two-vertex identification across six-cycles
  Graph c6 = cycle_graph(6);
  SetCoalescenceCheck pairs = verify_set_coalescence(
      c6, VertexSet::of({0, 3}), c6, VertexSet::of({0, 3}));
  CHECK(pairs.merged_size == 2);
  CHECK(pairs.lower_bound_ok);
  CHECK(pairs.upper_bound_ok);
  CHECK(pairs.all_ok());
}

TEST_CASE("partition coalescence biconditional") {
  Graph c4 = cycle_graph(4);
  auto parts = find_partition(c4, 4);
  REQUIRE(parts.has_value());
  std::vector<VertexSet> sets = parts->part_sets();

  PartitionMergeCheck check =
      verify_partition_coalescence(c4, sets, c4, sets);
  CHECK(check.g_structure_ok);
  CHECK(check.h_structure_ok);
  CHECK(check.g_parts_critical);
  CHECK(check.h_parts_critical);
  CHECK(check.merged_structure_ok);
  CHECK(check.merged_parts_critical);
  CHECK(check.merged_part_count == 7);
  CHECK(check.left_side());
  CHECK(check.right_side());
  CHECK(check.biconditional_ok);

  std::vector<VertexSet> mismatched{VertexSet::of({0, 2}), VertexSet::single(1),
                                    VertexSet::single(3)};
  CHECK_THROWS_AS(verify_partition_coalescence(c4, mismatched, c4, sets),
                  std::invalid_argument);
}

TEST_CASE("vertex identification within one graph") {
  Graph p5 = path_graph(5);
  IdentifiedGraph merged = identify_vertices(p5, 0, 4);
  CHECK(merged.graph.order() == 4);
  CHECK(is_isomorphic(merged.graph, cycle_graph(4)));
  CHECK(merged.map[0] == merged.map[4]);

  // neither endpoint is critical and no optimum holds both, so the
  // domination number survives the merge
  CHECK(!is_critical_vertex(p5, 0));
  CHECK(!is_critical_vertex(p5, 4));
  CHECK(!compatibility(p5, 0, 4).compatible);
  CHECK(gamma(merged.graph).gamma == gamma(p5).gamma);

  // adjacent pair: the shared edge dissolves
  Graph p3 = path_graph(3);
  IdentifiedGraph folded = identify_vertices(p3, 0, 1);
  CHECK(folded.graph.order() == 2);
  CHECK(folded.graph.edge_count() == 1);
  CHECK(gamma(folded.graph).gamma == gamma(p3).gamma);

  CHECK_THROWS_AS(identify_vertices(p5, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(identify_vertices(p5, 0, 9), std::invalid_argument);
}

TEST_CASE("identification can lower the optimum by one") {
  // gluing the two ends of a six-cycle's antipodal pair: both vertices
  // critical, so the merged graph needs one fewer dominator
  Graph c7 = cycle_graph(7);
  CHECK(is_critical_vertex(c7, 0));
  IdentifiedGraph merged = identify_vertices(c7, 0, 2);
  int before = gamma(c7).gamma;
  int after = gamma(merged.graph).gamma;
  CHECK(after >= before - 1);
  CHECK(after <= before);
  CHECK(after == oracle::gamma(merged.graph));
}

TEST_CASE("chained four-cycle powers") {
  for (int k = 1; k <= 4; ++k) {
    C4Power power = build_c4_power(k);
    CHECK(power.graph.order() == 3 * k + 1);
    CHECK(gamma(power.graph).gamma == k + 1);
    CHECK(is_connected(power.graph));
  }
  CHECK_THROWS_AS(build_c4_power(0), std::invalid_argument);
}
