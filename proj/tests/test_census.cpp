#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "domcrit/census.hpp"
#include "domcrit/families.hpp"
#include "oracles.hpp"

using namespace domcrit;

TEST_CASE("generation matches the edge-subset oracle class by class") {
  ConnectedCensus census;
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> got;
    for (const Graph& g : census.graphs(n)) {
      CHECK(g.order() == n);
      CHECK(is_connected(g));
      got.insert(oracle::canonical_key(g));
    }
    CHECK(got.size() == census.graphs(n).size());  // pairwise non-isomorphic
    CHECK(got == oracle::connected_class_keys(n));
  }
}

TEST_CASE("generation counts match the published sequence") {
  ConnectedCensus census;
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(census.graphs(n).size() == expected[n - 1]);
  }
  CHECK_THROWS_AS(census.graphs(10), std::invalid_argument);
  CHECK_THROWS_AS(census.graphs(0), std::invalid_argument);
}

TEST_CASE("graph6 ingestion reports line-precise errors") {
  std::istringstream in("C]\n\nDQc\nnot-a-graph\x01\nC\n~?@E\nBW\n");
  IngestResult result = ingest_graph6(in);
  CHECK(result.graphs.size() == 3);
  CHECK(result.graphs[0] == parse_graph6("C]"));
  REQUIRE(result.errors.size() == 3);
  CHECK(result.errors[0].find("line 4") != std::string::npos);
  CHECK(result.errors[1].find("line 5") != std::string::npos);
  CHECK(result.errors[2].find("line 6") != std::string::npos);

  std::istringstream strict("broken\x01\nC]\n");
  IngestResult aborted = ingest_graph6(strict, true);
  CHECK(aborted.graphs.empty());  // abort stops before later valid lines
  REQUIRE(aborted.errors.size() == 1);
  CHECK(aborted.errors[0].find("line 1") != std::string::npos);
}

TEST_CASE("nonexistent part counts: pass verdict only for the settled trio") {
  ConnectedCensus census;
  CensusReport settled = check_l_nonexistence(census, 5, {2, 3, 5});
  CHECK(settled.verdict == Verdict::kPass);
  CHECK(settled.hits.empty());
  CHECK(settled.examined == 31);
  CHECK(settled.n_min == 1);
  CHECK(settled.n_max == 5);

  CensusReport informative = check_l_nonexistence(census, 4, {4});
  CHECK(informative.verdict == Verdict::kExploratory);
  REQUIRE(informative.hits.size() == 1);
  CHECK(informative.hits[0].g6 == "C]");
  CHECK(informative.hits[0].finding.find("strong 4-vertex-sets-critical") !=
        std::string::npos);
}

TEST_CASE("l-nonexistence accepts external graph streams") {
  ConnectedCensus census;
  std::vector<Graph> graphs;
  for (int n = 1; n <= 5; ++n) {
    const auto& level = census.graphs(n);
    graphs.insert(graphs.end(), level.begin(), level.end());
  }
  CensusReport from_span =
      check_l_nonexistence(std::span<const Graph>(graphs), {2, 3, 5});
  CHECK(from_span.verdict == Verdict::kPass);
  CHECK(from_span.examined == 31);
  CHECK(from_span.n_min == 1);
  CHECK(from_span.n_max == 5);
}

TEST_CASE("parallel scans produce the same report") {
  ConnectedCensus census;
  CensusReport seq = check_l_nonexistence(census, 6, {4, 6}, 1);
  CensusReport par = check_l_nonexistence(census, 6, {4, 6}, 4);
  CHECK(seq.examined == par.examined);
  REQUIRE(seq.hits.size() == par.hits.size());
  for (std::size_t i = 0; i < seq.hits.size(); ++i) {
    CHECK(seq.hits[i].g6 == par.hits[i].g6);
    CHECK(seq.hits[i].finding == par.hits[i].finding);
  }
  CHECK(seq.verdict == par.verdict);
}

TEST_CASE("four-cycle uniqueness at small scale") {
  ConnectedCensus census;
  CensusReport report = check_c4_uniqueness(census, 5);
  CHECK(report.verdict == Verdict::kPass);
  REQUIRE(report.hits.size() == 1);
  CHECK(report.hits[0].g6 == "C]");
  CHECK(report.hits[0].finding.find("isomorphic to C4") != std::string::npos);

  CensusReport short_range = check_c4_uniqueness(census, 3);
  CHECK(short_range.note == "C4 out of range");
  CHECK(short_range.verdict == Verdict::kPass);  // vacuous: no hits possible
}

TEST_CASE("named six-part members verify with explicit partitions") {
  CensusReport report = check_c6_members();
  CHECK(report.verdict == Verdict::kPass);
  REQUIRE(report.hits.size() == 3);
  for (const auto& hit : report.hits) {
    CHECK(hit.finding.find("strong 6-vertex-sets-critical") != std::string::npos);
    Graph g = parse_graph6(hit.g6);
    CHECK(is_connected(g));
  }
}

TEST_CASE("family sufficiency rejects the settled trio and bad counts") {
  ConnectedCensus census;
  CHECK_THROWS_AS(verify_family_sufficiency(census, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_family_sufficiency(census, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_family_sufficiency(census, 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_family_sufficiency(census, 0), std::invalid_argument);

  CensusReport one = verify_family_sufficiency(census, 1);
  CHECK(one.verdict == Verdict::kPass);
  REQUIRE(one.hits.size() == 1);
  CHECK(one.hits[0].g6 == "@");

  CensusReport four = verify_family_sufficiency(census, 4);
  CHECK(four.verdict == Verdict::kPass);
  REQUIRE(four.hits.size() == 1);
  CHECK(parse_graph6(four.hits[0].g6).order() == 4);

  CensusReport seven = verify_family_sufficiency(census, 7);
  CHECK(seven.verdict == Verdict::kPass);
  CHECK(parse_graph6(seven.hits[0].g6).order() == 7);
}

TEST_CASE("multi-sequence search reports the smallest examples only") {
  ConnectedCensus census;
  CensusReport below = find_multi_sequence_graph(census, 6);
  CHECK(below.verdict == Verdict::kExploratory);
  CHECK(below.hits.empty());
  CHECK(below.examined == 143);

  CensusReport found = find_multi_sequence_graph(census, 7);
  CHECK(found.verdict == Verdict::kExploratory);
  REQUIRE(!found.hits.empty());
  for (const auto& hit : found.hits) {
    Graph g = parse_graph6(hit.g6);
    CHECK(g.order() == 7);
    SequenceReport seqs = achievable_part_counts(g);
    CHECK(seqs.sequences.size() >= 2);
  }
}

TEST_CASE("bipartite partition survey finds only the four-cycle early") {
  ConnectedCensus census;
  CensusReport report = explore_conjecture_bipartite(census, 6);
  CHECK(report.verdict == Verdict::kExploratory);
  REQUIRE(report.hits.size() == 1);
  CHECK(report.hits[0].g6 == "C]");
  CHECK(report.hits[0].finding.find("matches conjectured family") !=
        std::string::npos);
}

TEST_CASE("report strings name the check and order range") {
  ConnectedCensus census;
  CensusReport report = check_l_nonexistence(census, 3, {2});
  CHECK(report.check == "l-nonexistence");
  CHECK(to_string(Verdict::kPass) == std::string("pass"));
  CHECK(to_string(Verdict::kFail) == std::string("fail"));
  CHECK(to_string(Verdict::kExploratory) == std::string("exploratory"));
}
