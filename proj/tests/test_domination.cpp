#include <catch2/catch_amalgamated.hpp>

#include "domcrit/census.hpp"
#include "domcrit/domination.hpp"
#include "domcrit/families.hpp"
#include "domcrit/rng.hpp"
#include "oracles.hpp"

using namespace domcrit;

TEST_CASE("dominating set predicate") {
  Graph c4 = cycle_graph(4);
  CHECK(is_dominating(c4, VertexSet::of({0, 2})));
  CHECK(is_dominating(c4, VertexSet::of({0, 1})));
  CHECK(!is_dominating(c4, VertexSet::single(0)));
  CHECK(!is_dominating(c4, VertexSet{}));
  CHECK(is_dominating(complete_graph(1), VertexSet::single(0)));
}

TEST_CASE("domination numbers of named families") {
  auto third = [](int n) { return (n + 2) / 3; };
  for (int n = 3; n <= 30; ++n) CHECK(gamma(cycle_graph(n)).gamma == third(n));
  for (int n = 1; n <= 30; ++n) CHECK(gamma(path_graph(n)).gamma == third(n));
  for (int n = 1; n <= 8; ++n) CHECK(gamma(complete_graph(n)).gamma == 1);
  CHECK(gamma(complete_bipartite(1, 5)).gamma == 1);
  CHECK(gamma(complete_bipartite(2, 3)).gamma == 2);
  CHECK(gamma(cartesian_product(path_graph(2), cycle_graph(4))).gamma == 2);
  CHECK(gamma(harary_graph(4, 6)).gamma == 2);
  CHECK(gamma(circulant_graph(12, {1, 5})).gamma == 4);
}

TEST_CASE("solver matches the subset-scan oracle exhaustively") {
  ConnectedCensus census;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : census.graphs(n)) {
      GammaCertificate cert = gamma(g);
      CHECK(cert.gamma == oracle::gamma(g));
      CHECK(is_dominating(g, cert.witness));
      CHECK(cert.witness.count() == cert.gamma);
    }
  }
}

TEST_CASE("solver matches the oracle on random graphs") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng.range(8, 14));
    Graph g = trial % 2 == 0
                  ? random_graph(n, static_cast<int>(rng.range(10, 90)), rng)
                  : random_connected_graph(n, static_cast<int>(rng.range(0, 50)), rng);
    GammaCertificate cert = gamma(g);
    CHECK(cert.gamma == oracle::gamma(g));
    CHECK(is_dominating(g, cert.witness));
    CHECK(cert.witness.count() == cert.gamma);
  }
}

TEST_CASE("reference solver agrees with branch and bound") {
  ConnectedCensus census;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : census.graphs(n)) {
      GammaCertificate brute = brute_force_gamma(g);
      CHECK(brute.gamma == gamma(g).gamma);
      CHECK(is_dominating(g, brute.witness));
      CHECK(brute.witness.count() == brute.gamma);
    }
  }
  SplitMix64 rng(1);
  CHECK_THROWS_AS(brute_force_gamma(random_graph(33, 50, rng)),
                  std::invalid_argument);
}

TEST_CASE("forced vertices") {
  Graph c6 = cycle_graph(6);
  GammaCertificate plain = gamma(c6);
  GammaCertificate forced = gamma_with_required(c6, VertexSet::single(0));
  CHECK(forced.witness.contains(0));
  CHECK(is_dominating(c6, forced.witness));
  CHECK(forced.gamma >= plain.gamma);
  // forcing a member of some minimum dominating set keeps the optimum
  GammaCertificate refit = gamma_with_required(c6, plain.witness);
  CHECK(refit.gamma == plain.gamma);
}

TEST_CASE("capped search") {
  Graph c9 = cycle_graph(9);  // gamma = 3
  CHECK(!find_dominating_set_within(c9, 0).has_value());
  CHECK(!find_dominating_set_within(c9, 2).has_value());
  auto hit = find_dominating_set_within(c9, 3);
  REQUIRE(hit.has_value());
  CHECK(is_dominating(c9, *hit));
  CHECK(hit->count() <= 3);
  CHECK(find_dominating_set_within(c9, 9).has_value());
}

TEST_CASE("minimum dominating set enumeration is complete") {
  ConnectedCensus census;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : census.graphs(n)) {
      MdsEnumeration found = all_mds(g);
      CHECK(!found.truncated);
      std::vector<std::uint64_t> masks;
      for (VertexSet d : found.sets) masks.push_back(d.bits());
      CHECK(masks == oracle::all_mds_masks(g));
    }
  }
}

TEST_CASE("enumeration limit reports truncation") {
  MdsEnumeration capped = all_mds(cycle_graph(6), 1);
  CHECK(capped.truncated);
  CHECK(capped.sets.size() == 1);
}

TEST_CASE("gamma is subadditive across pieces and exact on components") {
  ConnectedCensus census;
  SplitMix64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& small = census.graphs(static_cast<int>(rng.range(1, 5)));
    const auto& other = census.graphs(static_cast<int>(rng.range(1, 5)));
    const Graph& a = small[static_cast<std::size_t>(rng.below(small.size()))];
    const Graph& b = other[static_cast<std::size_t>(rng.below(other.size()))];
    Graph both = disjoint_union(a, b);
    CHECK(gamma(both).gamma == gamma(a).gamma + gamma(b).gamma);
    // a spanning supergraph can only need fewer vertices
    std::vector<Edge> edges = both.edges();
    edges.emplace_back(0, a.order());
    Graph bridged(both.order(), edges);
    CHECK(gamma(bridged).gamma <= gamma(a).gamma + gamma(b).gamma);
  }
}
