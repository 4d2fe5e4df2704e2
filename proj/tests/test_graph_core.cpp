#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "domcrit/canonical.hpp"
#include "domcrit/families.hpp"
#include "domcrit/graph.hpp"
#include "domcrit/graph6.hpp"
#include "domcrit/graph_io.hpp"
#include "domcrit/rng.hpp"
#include "oracles.hpp"

using namespace domcrit;

TEST_CASE("vertex set basics") {
  VertexSet s = VertexSet::of({5, 1, 3});
  CHECK(s.count() == 3);
  CHECK(s.contains(1));
  CHECK(!s.contains(2));
  CHECK(s.lowest() == 1);
  CHECK(s.to_vector() == std::vector<int>{1, 3, 5});
  CHECK((s | VertexSet::single(2)).count() == 4);
  CHECK((s - VertexSet::of({1, 3})) == VertexSet::single(5));
  CHECK((s & VertexSet::of({3, 4})) == VertexSet::single(3));
  CHECK(VertexSet::all(4) == VertexSet::of({0, 1, 2, 3}));
  CHECK(VertexSet{}.empty());
  CHECK(s.to_string() == "{1,3,5}");
}

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);

  Graph g(3, {{0, 1}, {1, 0}, {0, 1}});  // parallel edges collapse
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.degree(2) == 0);
}

TEST_CASE("closed neighborhoods") {
  Graph c4 = cycle_graph(4);
  CHECK(closed_neighborhood(c4, VertexSet::single(0)) == VertexSet::of({3, 0, 1}));
  CHECK(closed_neighborhood(c4, VertexSet{}) == VertexSet{});
  CHECK(closed_neighborhood(complete_graph(4), VertexSet::single(2)) ==
        VertexSet::all(4));
  CHECK(open_neighborhood(c4, VertexSet::single(0)) == VertexSet::of({1, 3}));
}

TEST_CASE("vertex deletion relabels contiguously") {
  Graph c4 = cycle_graph(4);
  InducedSubgraph sub = delete_vertices(c4, VertexSet::single(0));
  CHECK(sub.graph == path_graph(3));
  CHECK(sub.to_original(VertexSet::single(0)) == VertexSet::single(1));
  CHECK(sub.to_original(VertexSet::all(3)) == VertexSet::of({1, 2, 3}));

  CHECK_THROWS_AS(delete_vertices(c4, VertexSet::all(4)), std::invalid_argument);
  CHECK_THROWS_AS(delete_vertices(c4, VertexSet::single(7)), std::invalid_argument);
}

TEST_CASE("distance and connectivity") {
  Graph p5 = path_graph(5);
  CHECK(distance(p5, 0, 4) == 4);
  CHECK(distance(p5, 2, 2) == 0);
  CHECK(is_connected(p5));

  Graph two = disjoint_union(path_graph(2), path_graph(3));
  CHECK(!is_connected(two));
  CHECK(!distance(two, 0, 3).has_value());
  auto comps = components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::of({0, 1}));
  CHECK(comps[1] == VertexSet::of({2, 3, 4}));
}

TEST_CASE("cartesian product") {
  Graph q3 = cartesian_product(path_graph(2), cycle_graph(4));
  CHECK(q3.order() == 8);
  CHECK(q3.edge_count() == 12);
  for (int v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);
  CHECK(is_connected(q3));
  CHECK_THROWS_AS(cartesian_product(complete_graph(9), complete_graph(8)),
                  std::invalid_argument);
}

TEST_CASE("family generators") {
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(1).edge_count() == 0);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_bipartite(2, 3).edge_count() == 6);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("circulants wrap around") {
  Graph h = harary_graph(4, 6);  // C6<1,2>
  CHECK(h.edge_count() == 12);
  for (int v = 0; v < 6; ++v) CHECK(h.degree(v) == 4);
  CHECK(h.adjacent(5, 0));
  CHECK(h.adjacent(4, 0));
  CHECK(h.adjacent(5, 1));
  CHECK(is_isomorphic(h, circulant_graph(6, {1, 2})));

  Graph c12 = circulant_graph(12, {1, 5});
  CHECK(c12.edge_count() == 24);
  for (int v = 0; v < 12; ++v) CHECK(c12.degree(v) == 4);

  // the antipodal offset contributes each edge once
  Graph matching = circulant_graph(6, {3});
  CHECK(matching.edge_count() == 3);
  for (int v = 0; v < 6; ++v) CHECK(matching.degree(v) == 1);

  CHECK(is_isomorphic(circulant_graph(5, {1}), cycle_graph(5)));
  CHECK(is_isomorphic(circulant_graph(5, {1, 2}), complete_graph(5)));

  CHECK_THROWS_AS(circulant_graph(6, {0}), std::invalid_argument);
  CHECK_THROWS_AS(circulant_graph(6, {4}), std::invalid_argument);
  CHECK_THROWS_AS(circulant_graph(6, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(circulant_graph(6, {}), std::invalid_argument);
  CHECK_THROWS_AS(harary_graph(3, 6), std::invalid_argument);
  CHECK_THROWS_AS(harary_graph(6, 6), std::invalid_argument);
}

TEST_CASE("corona attaches one leaf per base vertex") {
  Graph comb = corona_with_leaves(path_graph(3));
  CHECK(comb.order() == 6);
  CHECK(comb.edge_count() == 5);
  for (int v = 0; v < 3; ++v) {
    CHECK(comb.adjacent(v, 3 + v));
    CHECK(comb.degree(3 + v) == 1);
  }
  CHECK(is_connected(comb));
  CHECK_THROWS_AS(corona_with_leaves(complete_graph(33)), std::invalid_argument);
}

TEST_CASE("bipartite minus disjoint four-cycles") {
  Graph g = k2t2t_minus_4cycles(2);
  CHECK(g.order() == 8);
  for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 2);
  auto comps = components(g);
  REQUIRE(comps.size() == 2);  // t = 2 splits into two 4-cycles
  for (const auto& c : comps) {
    CHECK(is_isomorphic(delete_vertices(g, g.vertices() - c).graph,
                        cycle_graph(4)));
  }
  Graph g3 = k2t2t_minus_4cycles(3);
  CHECK(g3.order() == 12);
  for (int v = 0; v < 12; ++v) CHECK(g3.degree(v) == 4);
  CHECK(is_connected(g3));
  CHECK_THROWS_AS(k2t2t_minus_4cycles(1), std::invalid_argument);
}

TEST_CASE("graph specs parse and build") {
  CHECK(GraphSpec::parse("cycle:7").build() == cycle_graph(7));
  CHECK(GraphSpec::parse("path:4").build() == path_graph(4));
  CHECK(GraphSpec::parse("complete:3").build() == complete_graph(3));
  CHECK(GraphSpec::parse("complete-bipartite:2,3").build() ==
        complete_bipartite(2, 3));
  CHECK(GraphSpec::parse("circulant:8,1,2").build() == circulant_graph(8, {1, 2}));
  CHECK(GraphSpec::parse("harary:4,6").build() == harary_graph(4, 6));
  CHECK(GraphSpec::parse("comb:path:3").build() == corona_with_leaves(path_graph(3)));
  CHECK(GraphSpec::parse("k2t2t-minus-4cycles:2").build() == k2t2t_minus_4cycles(2));
  CHECK(GraphSpec::parse("g6:C]").build().order() == 4);
  CHECK(GraphSpec::parse("edges:3:0-1,1-2").build() == path_graph(3));

  CHECK_THROWS(GraphSpec::parse("nosuch:3"));
  CHECK_THROWS(GraphSpec::parse("cycle:"));
  CHECK_THROWS(GraphSpec::parse("cycle:x"));
  CHECK_THROWS(GraphSpec::parse("cycle:2").build());
}

TEST_CASE("graph6 round trip") {
  SplitMix64 rng(42);
  for (int n : {1, 2, 3, 7, 20, 40, 62, 63, 64}) {
    for (int trial = 0; trial < 4; ++trial) {
      Graph g = random_graph(n, 40, rng);
      Graph back = parse_graph6(write_graph6(g));
      CHECK(back == g);
    }
  }
  CHECK(parse_graph6(">>graph6<<" + write_graph6(cycle_graph(5))) ==
        cycle_graph(5));
  CHECK(is_isomorphic(parse_graph6("C]"), cycle_graph(4)));
}

TEST_CASE("graph6 rejects malformed strings") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);          // body truncated
  CHECK_THROWS_AS(parse_graph6("C]]"), Graph6Error);        // trailing bytes
  CHECK_THROWS_AS(parse_graph6("C\x07"), Graph6Error);      // byte out of range
  CHECK_THROWS_AS(parse_graph6("~?@E"), Graph6Error);       // order 70 > 64
  CHECK_THROWS_AS(parse_graph6("Cr "), Graph6Error);        // stray blank
}

TEST_CASE("edge list io") {
  Graph g = cycle_graph(5);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == g);

  std::istringstream commented("# header\n\n 4\n0 1\n# middle\n2 3\n");
  Graph parsed = read_edge_list(commented);
  CHECK(parsed.order() == 4);
  CHECK(parsed.edge_count() == 2);

  std::istringstream trailing("3\n0 1 9\n");
  CHECK_THROWS_AS(read_edge_list(trailing), std::invalid_argument);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_edge_list(empty), std::invalid_argument);
  std::istringstream badpair("3\n0\n");
  CHECK_THROWS_AS(read_edge_list(badpair), std::invalid_argument);
}

TEST_CASE("dot export") {
  Graph p3 = path_graph(3);
  std::vector<VertexSet> parts{VertexSet::of({0, 2}), VertexSet::single(1)};
  std::string dot = to_dot(p3, parts, "demo");
  CHECK(dot.find("graph demo {") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("fillcolor=lightblue") != std::string::npos);
  CHECK(dot.find("fillcolor=lightcoral") != std::string::npos);
}

TEST_CASE("canonical codes agree with the permutation oracle") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = static_cast<int>(rng.range(2, 6));
    Graph a = random_graph(n, static_cast<int>(rng.range(20, 80)), rng);
    Graph b = random_graph(n, static_cast<int>(rng.range(20, 80)), rng);
    bool same_class = oracle::canonical_key(a) == oracle::canonical_key(b);
    CHECK(is_isomorphic(a, b) == same_class);
    CHECK((canonical_code(a) == canonical_code(b)) == same_class);
  }
  Graph g = circulant_graph(6, {1, 2});
  Graph canon = canonical_form(g);
  CHECK(is_isomorphic(g, canon));
  CHECK(canonical_code(canon) == canonical_code(g));
  CHECK(canonical_code(g) == write_graph6(canon));
}
