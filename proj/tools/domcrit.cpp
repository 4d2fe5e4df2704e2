// Command-line front end for the domination-criticality toolkit.
//
// Exit codes: 0 success (or passing check), 1 failing check, 2 usage or
// input error.  Reports go to stdout as JSON (default) or as a
// human-readable table with --table; diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <domcrit/domcrit.hpp>

namespace {

using nlohmann::json;
using namespace domcrit;

// Aggregated command-line state: one input graph (or two specs for the
// two-graph commands), plus the shared numeric flags.
struct RunConfig {
  std::string spec;
  std::string g6;
  std::string edges_file;
  std::string second_spec;
  std::string at;
  std::string check;
  std::string ls = "2,3,5";
  std::string format = "g6";
  int parts = 0;
  int max_n = 0;
  int family_l = 0;
  int comb_max = 8;
  int host_max = 6;
  long limit = 10000;
  int trials = -1;
  std::uint64_t seed = 0;
  int workers = 1;
  int max_size = -1;
  std::string set_text;
  bool table = false;
};

std::string read_stdin_line() {
  std::string line;
  while (std::getline(std::cin, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) {
      line.pop_back();
    }
    if (!line.empty()) return line;
  }
  throw std::runtime_error("expected a graph6 line on standard input");
}

Graph load_graph(const RunConfig& cfg) {
  int sources = (!cfg.spec.empty()) + (!cfg.g6.empty()) +
                (!cfg.edges_file.empty());
  if (sources != 1) {
    throw std::runtime_error(
        "provide exactly one of --spec, --g6, --edges");
  }
  if (!cfg.spec.empty()) return GraphSpec::parse(cfg.spec).build();
  if (!cfg.g6.empty()) {
    return parse_graph6(cfg.g6 == "-" ? read_stdin_line() : cfg.g6);
  }
  std::ifstream in(cfg.edges_file);
  if (!in) throw std::runtime_error("cannot open " + cfg.edges_file);
  return read_edge_list(in);
}

VertexSet parse_vertex_list(const std::string& text, const Graph& g) {
  VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = std::stoi(item);
    if (v < 0 || v >= g.order()) {
      throw std::runtime_error("vertex " + item + " out of range");
    }
    out.add(v);
  }
  if (out.empty()) throw std::runtime_error("empty vertex list");
  return out;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("expected u:v in --at, got '" + item + "'");
    }
    pairs.emplace_back(std::stoi(item.substr(0, colon)),
                       std::stoi(item.substr(colon + 1)));
  }
  if (pairs.empty()) throw std::runtime_error("--at needs at least one pair");
  return pairs;
}

std::set<int> parse_int_set(const std::string& text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

// Human-oriented rendering: nested keys indented, scalar arrays inline,
// object arrays one entry per line.
void render_table(const json& j, std::ostream& out, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() ||
          (value.is_array() && !value.empty() && value[0].is_structured())) {
        out << pad << key << ":\n";
        render_table(value, out, indent + 1);
      } else {
        out << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_structured()) {
        out << pad << "-\n";
        render_table(value, out, indent + 1);
      } else {
        out << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

void emit(const json& j, const RunConfig& cfg) {
  if (cfg.table) {
    render_table(j, std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int cmd_gamma(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  GammaCertificate cert = gamma(g);
  emit(json{{"gamma", cert.gamma},
            {"witness", cert.witness},
            {"n", g.order()}},
       cfg);
  return 0;
}

int cmd_mds(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  MdsEnumeration mds = all_mds(g, static_cast<std::size_t>(cfg.limit));
  emit(json{{"n", g.order()},
            {"gamma", gamma(g).gamma},
            {"count", mds.sets.size()},
            {"sets", mds.sets},
            {"truncated", mds.truncated}},
       cfg);
  return 0;
}

int cmd_critical(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  std::vector<int> critical;
  if (g.order() >= 2) {
    for (int v = 0; v < g.order(); ++v) {
      if (is_critical_vertex(g, v)) critical.push_back(v);
    }
  }
  emit(json{{"n", g.order()},
            {"gamma", gamma(g).gamma},
            {"critical_vertices", critical},
            {"vertex_critical", is_vertex_critical(g)}},
       cfg);
  return 0;
}

int cmd_stcrit(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  int gam = gamma(g).gamma;
  if (!cfg.set_text.empty()) {
    VertexSet s = parse_vertex_list(cfg.set_text, g);
    auto cert = is_st_critical(g, s);
    json out{{"n", g.order()},
             {"gamma", gam},
             {"set", s},
             {"critical", cert.has_value()}};
    out["witness"] = cert ? json(cert->witness) : json(nullptr);
    emit(out, cfg);
    return 0;
  }
  int max_size = cfg.max_size < 0 ? gam - 1 : cfg.max_size;
  auto sets = enumerate_st_critical_sets(g, max_size);
  emit(json{{"n", g.order()},
            {"gamma", gam},
            {"max_size", max_size},
            {"count", sets.size()},
            {"sets", sets}},
       cfg);
  return 0;
}

int cmd_partition(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  auto part = find_partition(g, cfg.parts);
  json out{{"n", g.order()},
           {"gamma", gamma(g).gamma},
           {"parts", cfg.parts},
           {"found", part.has_value()}};
  out["partition"] = part ? json(*part) : json(nullptr);
  emit(out, cfg);
  return 0;
}

int cmd_sequences(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  SequenceReport report = achievable_part_counts(g);
  emit(json{{"n", g.order()},
            {"achievable_l", report.achievable_l},
            {"sequences", report.sequences}},
       cfg);
  return 0;
}

int cmd_coalesce(const RunConfig& cfg) {
  Graph g = GraphSpec::parse(cfg.spec).build();
  Graph h = GraphSpec::parse(cfg.second_spec).build();
  auto pairs = parse_pairs(cfg.at);
  CoalescenceSpec spec;
  spec.pairs = pairs;
  CoalescedGraph coal = vertex_set_coalescence(g, h, spec);
  VertexSet x, y;
  for (auto [u, w] : pairs) {
    x.add(u);
    y.add(w);
  }
  SetCoalescenceCheck check = verify_set_coalescence(g, x, h, y);
  emit(json{{"g6", write_graph6(coal.graph)},
            {"n", coal.graph.order()},
            {"left_map", coal.left_map},
            {"right_map", coal.right_map},
            {"check", check}},
       cfg);
  return 0;
}

int cmd_identify(const RunConfig& cfg) {
  Graph g = GraphSpec::parse(cfg.spec).build();
  auto pairs = parse_pairs(cfg.at);
  if (pairs.size() != 1) {
    throw std::runtime_error("identify takes exactly one --at pair");
  }
  IdentifiedGraph merged = identify_vertices(g, pairs[0].first,
                                             pairs[0].second);
  emit(json{{"g6", write_graph6(merged.graph)},
            {"n", merged.graph.order()},
            {"map", merged.map},
            {"gamma_before", gamma(g).gamma},
            {"gamma_after", gamma(merged.graph).gamma}},
       cfg);
  return 0;
}

int cmd_gen(const RunConfig& cfg) {
  Graph g = GraphSpec::parse(cfg.spec).build();
  if (cfg.format == "g6") {
    std::cout << write_graph6(g) << "\n";
  } else if (cfg.format == "edges") {
    write_edge_list(std::cout, g);
  } else if (cfg.format == "dot") {
    std::cout << to_dot(g);
  } else if (cfg.format == "json") {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    emit(json{{"spec", cfg.spec},
              {"g6", write_graph6(g)},
              {"n", g.order()},
              {"edges", edges}},
         cfg);
  } else {
    throw std::runtime_error("unknown format '" + cfg.format +
                             "' (use g6, edges, dot, json)");
  }
  return 0;
}

std::vector<Graph> ingest_stream(const RunConfig& cfg) {
  IngestResult result;
  if (cfg.g6 == "-") {
    result = ingest_graph6(std::cin);
  } else {
    std::ifstream in(cfg.g6);
    if (!in) throw std::runtime_error("cannot open " + cfg.g6);
    result = ingest_graph6(in);
  }
  for (const std::string& err : result.errors) {
    std::cerr << "graph6 " << err << "\n";
  }
  if (result.graphs.empty() && !result.errors.empty()) {
    throw std::runtime_error("no parseable graph6 records");
  }
  return result.graphs;
}

int cmd_census(const RunConfig& cfg) {
  ConnectedCensus census;
  CensusReport report;
  bool streamed = !cfg.g6.empty();
  std::vector<Graph> stream;
  if (streamed) stream = ingest_stream(cfg);

  auto need_builtin = [&](const char* name) {
    if (streamed) {
      throw std::runtime_error(std::string("census check '") + name +
                               "' does not accept --g6 input");
    }
  };

  if (cfg.check == "l-nonexistence") {
    std::set<int> ls = parse_int_set(cfg.ls);
    if (ls.empty()) throw std::runtime_error("--ls needs at least one value");
    report = streamed
                 ? check_l_nonexistence(stream, ls, cfg.workers)
                 : check_l_nonexistence(census, cfg.max_n ? cfg.max_n : 7, ls,
                                        cfg.workers);
  } else if (cfg.check == "c4-uniqueness") {
    report = streamed
                 ? check_c4_uniqueness(stream, cfg.workers)
                 : check_c4_uniqueness(census, cfg.max_n ? cfg.max_n : 8,
                                       cfg.workers);
  } else if (cfg.check == "c6-members") {
    need_builtin("c6-members");
    report = check_c6_members();
  } else if (cfg.check == "h48-reconstruction") {
    need_builtin("h48-reconstruction");
    report = reconstruct_h48(census, cfg.workers);
  } else if (cfg.check == "family-sufficiency") {
    need_builtin("family-sufficiency");
    if (cfg.family_l == 0) {
      throw std::runtime_error("family-sufficiency needs --l <count>");
    }
    report = verify_family_sufficiency(census, cfg.family_l, cfg.workers);
  } else if (cfg.check == "vizing-comb") {
    need_builtin("vizing-comb");
    report = check_vizing_comb(census, cfg.comb_max, cfg.host_max,
                               cfg.workers);
  } else if (cfg.check == "bipartite-conjecture") {
    report = streamed ? explore_conjecture_bipartite(stream, cfg.workers)
                      : explore_conjecture_bipartite(
                            census, cfg.max_n ? cfg.max_n : 7, cfg.workers);
  } else if (cfg.check == "multi-sequence") {
    report = streamed ? find_multi_sequence_graph(stream, cfg.workers)
                      : find_multi_sequence_graph(
                            census, cfg.max_n ? cfg.max_n : 7, cfg.workers);
  } else {
    throw std::runtime_error(
        "unknown census check '" + cfg.check +
        "' (use l-nonexistence, c4-uniqueness, c6-members, "
        "h48-reconstruction, family-sufficiency, vizing-comb, "
        "bipartite-conjecture, multi-sequence)");
  }

  emit(json(report), cfg);
  return report.verdict == Verdict::kFail ? 1 : 0;
}

int cmd_verify(const RunConfig& cfg) {
  ConnectedCensus census;
  SweepReport report;
  auto trials = [&](int fallback) {
    return cfg.trials < 0 ? fallback : cfg.trials;
  };

  if (cfg.check == "formula-oracles") {
    report = sweep_formula_oracles();
  } else if (cfg.check == "solver-vs-brute") {
    report = sweep_solver_vs_brute(census, cfg.max_n ? cfg.max_n : 7,
                                   trials(200), cfg.seed);
  } else if (cfg.check == "structural-lemmas") {
    report = sweep_structural_lemmas(census, 6, cfg.max_n ? cfg.max_n : 7);
  } else if (cfg.check == "partition-structure") {
    report = sweep_partition_structure(census, cfg.max_n ? cfg.max_n : 6);
  } else if (cfg.check == "single-coalescence") {
    report = sweep_single_coalescence_iff(census, cfg.max_n ? cfg.max_n : 5);
  } else if (cfg.check == "coalescence-bounds") {
    report = sweep_coalescence_bounds(trials(100), cfg.seed);
  } else if (cfg.check == "partition-coalescence") {
    report = sweep_partition_coalescence(trials(50), cfg.seed);
  } else if (cfg.check == "identification") {
    report = sweep_identification(trials(100), cfg.seed);
  } else if (cfg.check == "canonical") {
    report = sweep_canonical_crosscheck(trials(200), cfg.seed);
  } else {
    throw std::runtime_error(
        "unknown verifier '" + cfg.check +
        "' (use formula-oracles, solver-vs-brute, structural-lemmas, "
        "partition-structure, single-coalescence, coalescence-bounds, "
        "partition-coalescence, identification, canonical)");
  }

  emit(json(report), cfg);
  return report.passed() ? 0 : 1;
}

void add_graph_input(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--spec", cfg.spec,
                  "graph spec, e.g. cycle:4, path:7, complete:5, "
                  "complete-bipartite:2,3, circulant:12,1,5, harary:4,6, "
                  "comb:path:3, k2t2t:2, g6:Cr, edges:4:0-1,1-2");
  cmd->add_option("--g6", cfg.g6, "graph6 string, or - for stdin");
  cmd->add_option("--edges", cfg.edges_file, "edge-list file");
}

void add_output_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_flag("--table", cfg.table, "human-readable table output");
  cmd->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation toolkit for domination criticality"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* gamma_cmd = app.add_subcommand("gamma", "domination number + witness");
  add_graph_input(gamma_cmd, cfg);
  add_output_flags(gamma_cmd, cfg);

  auto* mds_cmd = app.add_subcommand("mds", "all minimum dominating sets");
  add_graph_input(mds_cmd, cfg);
  mds_cmd->add_option("--limit", cfg.limit, "max sets to enumerate");
  add_output_flags(mds_cmd, cfg);

  auto* critical_cmd =
      app.add_subcommand("critical", "critical vertices and vertex-criticality");
  add_graph_input(critical_cmd, cfg);
  add_output_flags(critical_cmd, cfg);

  auto* stcrit_cmd = app.add_subcommand(
      "stcrit", "test one st-critical set (--set) or enumerate them all");
  add_graph_input(stcrit_cmd, cfg);
  stcrit_cmd->add_option("--set", cfg.set_text, "vertex list, e.g. 0,2,5");
  stcrit_cmd->add_option("--max-size", cfg.max_size,
                         "enumeration size cap (default gamma-1)");
  add_output_flags(stcrit_cmd, cfg);

  auto* partition_cmd = app.add_subcommand(
      "partition", "partition V into l strong critical vertex-sets");
  add_graph_input(partition_cmd, cfg);
  partition_cmd->add_option("--parts", cfg.parts, "part count l")
      ->required();
  add_output_flags(partition_cmd, cfg);

  auto* sequences_cmd = app.add_subcommand(
      "sequences", "achievable part counts and part-size sequences");
  add_graph_input(sequences_cmd, cfg);
  add_output_flags(sequences_cmd, cfg);

  auto* coalesce_cmd = app.add_subcommand(
      "coalesce", "vertex-set coalescence of two graphs plus its checks");
  coalesce_cmd->add_option("first", cfg.spec, "left graph spec")->required();
  coalesce_cmd->add_option("second", cfg.second_spec, "right graph spec")
      ->required();
  coalesce_cmd
      ->add_option("--at", cfg.at, "identified pairs u:v[,u:v...]")
      ->required();
  add_output_flags(coalesce_cmd, cfg);

  auto* identify_cmd =
      app.add_subcommand("identify", "identify two vertices of one graph");
  identify_cmd->add_option("graph", cfg.spec, "graph spec")->required();
  identify_cmd->add_option("--at", cfg.at, "pair x:y")->required();
  add_output_flags(identify_cmd, cfg);

  auto* gen_cmd = app.add_subcommand("gen", "build a graph from a spec");
  gen_cmd->add_option("spec", cfg.spec, "graph spec")->required();
  gen_cmd->add_option("--format", cfg.format, "g6 | edges | dot | json");
  add_output_flags(gen_cmd, cfg);

  auto* census_cmd =
      app.add_subcommand("census", "exhaustive checks over small graphs");
  census_cmd->add_option("--check", cfg.check, "check name")->required();
  census_cmd->add_option("--max-n", cfg.max_n, "largest order to generate");
  census_cmd->add_option("--ls", cfg.ls, "part counts, e.g. 2,3,5");
  census_cmd->add_option("--l", cfg.family_l, "part count for family-sufficiency");
  census_cmd->add_option("--comb-max", cfg.comb_max,
                         "largest comb order for vizing-comb");
  census_cmd->add_option("--h-max", cfg.host_max,
                         "largest host order for vizing-comb");
  census_cmd->add_option("--g6", cfg.g6,
                         "graph6 stream file (or -) instead of generation");
  census_cmd->add_option("--workers", cfg.workers, "worker threads");
  add_output_flags(census_cmd, cfg);

  auto* verify_cmd =
      app.add_subcommand("verify", "property sweeps with seeded trials");
  verify_cmd->add_option("name", cfg.check, "sweep name")->required();
  verify_cmd->add_option("--trials", cfg.trials, "random trial count");
  verify_cmd->add_option("--seed", cfg.seed, "random seed (default 0)");
  verify_cmd->add_option("--max-n", cfg.max_n, "census size bound");
  add_output_flags(verify_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gamma_cmd->parsed()) return cmd_gamma(cfg);
    if (mds_cmd->parsed()) return cmd_mds(cfg);
    if (critical_cmd->parsed()) return cmd_critical(cfg);
    if (stcrit_cmd->parsed()) return cmd_stcrit(cfg);
    if (partition_cmd->parsed()) return cmd_partition(cfg);
    if (sequences_cmd->parsed()) return cmd_sequences(cfg);
    if (coalesce_cmd->parsed()) return cmd_coalesce(cfg);
    if (identify_cmd->parsed()) return cmd_identify(cfg);
    if (gen_cmd->parsed()) return cmd_gen(cfg);
    if (census_cmd->parsed()) return cmd_census(cfg);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
