#include "swg/cli.hpp"

#include <chrono>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "swg/coloring.hpp"
#include "swg/component_graph.hpp"
#include "swg/graph.hpp"
#include "swg/harness.hpp"
#include "swg/json_io.hpp"
#include "swg/switch_paths.hpp"
#include "swg/torus.hpp"

namespace swg {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitInternal = 3;

Automorphism identity_automorphism(const Graph& g) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  return validate_automorphism(g, perm);
}

// "antipodal" needs a hypercube, "farthest" an even cycle/product (on a
// hypercube it coincides with antipodal), "identity" works everywhere.
Automorphism named_automorphism(const std::string& name, const GraphSpec& spec,
                                const Graph& g) {
  if (name == "identity") return identity_automorphism(g);
  if (name == "antipodal") {
    auto n = hypercube_dimension(g);
    if (!n) throw std::invalid_argument("automorphism 'antipodal' needs a hypercube graph");
    return antipodal_map(*n);
  }
  if (name == "farthest") {
    switch (spec.kind) {
      case GraphSpec::Kind::Cycle:
        return farthest_point_automorphism(ProductSpec{{spec.m}});
      case GraphSpec::Kind::Product:
        return farthest_point_automorphism(ProductSpec{spec.cycles});
      case GraphSpec::Kind::Hypercube:
        return antipodal_map(spec.n);
      case GraphSpec::Kind::Explicit:
        throw std::invalid_argument("automorphism 'farthest' needs a cycle/product/hypercube");
    }
  }
  throw std::invalid_argument("unknown automorphism '" + name +
                              "' (antipodal|farthest|identity)");
}

std::string default_automorphism_name(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::Hypercube: return "antipodal";
    case GraphSpec::Kind::Cycle:
    case GraphSpec::Kind::Product: return "farthest";
    case GraphSpec::Kind::Explicit: return "identity";
  }
  throw std::logic_error("unknown graph kind");
}

Automorphism pick_automorphism(const std::string& flag, const GraphSpec& spec,
                               const Graph& g, std::ostream& out) {
  std::string name = flag.empty() ? default_automorphism_name(spec) : flag;
  out << "automorphism = " << name << '\n';
  return named_automorphism(name, spec, g);
}

struct GenOptions {
  std::string family, graph, output, color = "R";
  int k = 0, m = 0, n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
};

int run_gen(const GenOptions& opt) {
  GraphSpec spec;
  ColoredGraph colored;
  if (opt.family == "directional") {
    colored = directional_coloring(opt.k);
    spec = parse_graph_spec("hypercube:" + std::to_string(2 * opt.k));
  } else if (opt.family == "two-cube") {
    colored = two_cube_coloring(opt.m, opt.k);
    spec = parse_graph_spec("hypercube:" + std::to_string(opt.m + opt.k));
  } else if (opt.family == "double-level") {
    colored = double_level_coloring(opt.k);
    spec = parse_graph_spec("hypercube:" + std::to_string(2 * opt.k));
  } else if (opt.family == "level-alternating") {
    colored = level_alternating_coloring(opt.n);
    spec = parse_graph_spec("hypercube:" + std::to_string(opt.n));
  } else if (opt.family == "proper-cycle") {
    colored = proper_cycle_coloring(opt.m);
    spec = parse_graph_spec("cycle:" + std::to_string(opt.m));
  } else if (opt.family == "random") {
    if (opt.graph.empty())
      throw std::invalid_argument("gen: family 'random' needs --graph");
    spec = parse_graph_spec(opt.graph);
    Graph g = build_graph(spec);
    EdgeColoring c = random_coloring(g, opt.p, opt.seed);
    colored = ColoredGraph{std::move(g), std::move(c)};
  } else if (opt.family == "monochromatic") {
    if (opt.graph.empty())
      throw std::invalid_argument("gen: family 'monochromatic' needs --graph");
    if (opt.color != "R" && opt.color != "B")
      throw std::invalid_argument("gen: --color must be R or B");
    spec = parse_graph_spec(opt.graph);
    Graph g = build_graph(spec);
    EdgeColoring c = monochromatic_coloring(g, opt.color == "R" ? Color::Red : Color::Blue);
    colored = ColoredGraph{std::move(g), std::move(c)};
  } else {
    throw std::invalid_argument(
        "gen: unknown family '" + opt.family +
        "' (directional|two-cube|double-level|level-alternating|proper-cycle|"
        "random|monochromatic)");
  }

  std::cout << "family = " << opt.family << ", graph = " << graph_spec_string(spec)
            << ", edges = " << colored.graph.edge_count();
  if (opt.family == "random") std::cout << ", p = " << format_double(opt.p)
                                        << ", seed = " << opt.seed;
  std::cout << '\n';
  save_json(coloring_file_to_json(spec, colored.coloring), opt.output);
  std::cout << "wrote " << opt.output << '\n';
  return kExitOk;
}

struct CompOptions {
  std::string input, output, dot;
  std::int64_t cycle_budget = 10'000'000;
};

int run_comp(const CompOptions& opt) {
  ColoringFile file = load_coloring_file(opt.input);
  ComponentGraph cg = build_component_graph(file.colored.graph, file.colored.coloring);
  int red = cg.red_count(), blue = cg.vertex_count() - red;
  std::cout << "graph = " << graph_spec_string(file.spec)
            << ", base vertices = " << cg.base_vertex_count << '\n';
  std::cout << "components: " << red << " red + " << blue << " blue, meta edges = "
            << cg.edge_count() << '\n';
  bool tree = is_tree(cg);
  std::cout << "tree: " << (tree ? "yes" : "no") << '\n';
  bool biclique = static_cast<long long>(red) * blue == cg.edge_count() && red > 0 && blue > 0;
  std::cout << "complete bipartite: "
            << (biclique ? "yes (K_{" + std::to_string(red) + "," + std::to_string(blue) + "})"
                         : "no")
            << '\n';
  if (!tree) {
    LongestCycleResult cyc = longest_cycle_length(cg, opt.cycle_budget);
    if (cyc.kind == LongestCycleResult::Kind::Exact)
      std::cout << "longest meta cycle = " << cyc.length << '\n';
    else if (cyc.kind == LongestCycleResult::Kind::LowerBound)
      std::cout << "longest meta cycle >= " << cyc.length << " (budget exhausted)\n";
  }
  if (!opt.output.empty()) {
    save_json(component_graph_to_json(cg), opt.output);
    std::cout << "wrote " << opt.output << '\n';
  }
  if (!opt.dot.empty()) {
    save_text(export_dot(cg), opt.dot);
    std::cout << "wrote " << opt.dot << '\n';
  }
  return kExitOk;
}

struct SwitchOptions {
  std::string input, output, automorphism;
  int u = -1, v = -1;
  bool has_u = false, has_v = false;
};

int run_switch(const SwitchOptions& opt) {
  ColoringFile file = load_coloring_file(opt.input);
  const Graph& g = file.colored.graph;
  const EdgeColoring& c = file.colored.coloring;

  int u = -1, v = -1;
  std::optional<OrbitObjectiveResult> orbit;
  if (opt.has_u && opt.has_v) {
    u = opt.u;
    v = opt.v;
  } else {
    Automorphism phi = pick_automorphism(opt.automorphism, file.spec, g, std::cout);
    if (opt.has_u) {
      u = opt.u;
      if (u < 0 || u >= g.vertex_count())
        throw std::invalid_argument("switch: --u out of range");
      v = phi(u);
    } else {
      orbit = orbit_objective(g, c, phi);
      if (!orbit) {
        std::cout << "every orbit pair is disconnected\n";
        return kExitOk;
      }
      u = orbit->witness_vertex;
      v = phi(u);
    }
  }
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("switch: vertex out of range");

  std::optional<SwitchPath> path =
      orbit ? std::optional<SwitchPath>(orbit->path) : min_switches(g, c, u, v);
  if (!path) {
    std::cout << "u = " << u << ", v = " << v << ": unreachable\n";
    if (!opt.output.empty()) {
      nlohmann::json j{{"u", u}, {"v", v}, {"reachable", false}};
      save_json(j, opt.output);
      std::cout << "wrote " << opt.output << '\n';
    }
    return kExitOk;
  }
  std::cout << "u = " << u << ", v = " << v << ", switches = " << path->switches
            << ", path length = " << path->colors.size() << '\n';
  if (!opt.output.empty()) {
    save_json(path_to_json(u, v, *path), opt.output);
    std::cout << "wrote " << opt.output << '\n';
  }
  return kExitOk;
}

struct WitnessOptions {
  std::string input, output, automorphism;
  int k = 0;
  std::int64_t cycle_budget = 50'000'000;
};

int run_witness(const WitnessOptions& opt) {
  ColoringFile file = load_coloring_file(opt.input);
  const Graph& g = file.colored.graph;
  Automorphism phi = pick_automorphism(opt.automorphism, file.spec, g, std::cout);
  TheoremWitnessResult result =
      theorem_witness(g, file.colored.coloring, phi, opt.k, opt.cycle_budget);

  int code = kExitOk;
  if (const auto* w = std::get_if<Witness>(&result)) {
    std::cout << "witness: u = " << w->u << ", switches = " << w->path.switches
              << " (k = " << opt.k << ")\n";
  } else if (const auto* h = std::get_if<HypothesisViolated>(&result)) {
    std::cout << "hypothesis violated: meta cycle of length " << h->meta_cycle.size()
              << " >= " << 2 * opt.k + 3 << '\n';
  } else {
    std::cout << "internal failure: " << std::get<WitnessFailure>(result).reason << '\n';
    code = kExitInternal;
  }
  if (!opt.output.empty()) {
    save_json(witness_result_to_json(result), opt.output);
    std::cout << "wrote " << opt.output << '\n';
  }
  return code;
}

struct TorusPairOptions {
  std::string input, output;
  int a = 0, b = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool has_a = false, has_b = false;
};

int run_torus_pair(const TorusPairOptions& opt) {
  TorusColoring tc;
  if (!opt.input.empty()) {
    ColoringFile file = load_coloring_file(opt.input);
    if (file.spec.kind != GraphSpec::Kind::Product || file.spec.cycles.size() != 2)
      throw std::invalid_argument("torus-pair: input graph must be product:<2a>x<2b>");
    int w = file.spec.cycles[0], h = file.spec.cycles[1];
    if (w % 2 != 0 || h % 2 != 0)
      throw std::invalid_argument("torus-pair: both cycle lengths must be even");
    tc = make_torus_coloring(w / 2, h / 2, file.colored.coloring);
    std::cout << "torus = " << graph_spec_string(file.spec) << '\n';
  } else if (opt.has_a && opt.has_b) {
    Graph g = product_of_cycles(ProductSpec{{2 * opt.a, 2 * opt.b}});
    tc = make_torus_coloring(opt.a, opt.b, random_coloring(g, opt.p, opt.seed));
    std::cout << "torus = product:" << 2 * opt.a << 'x' << 2 * opt.b
              << ", p = " << format_double(opt.p) << ", seed = " << opt.seed << '\n';
  } else {
    throw std::invalid_argument("torus-pair: give a coloring file or both --a and --b");
  }

  TorusPairResult result = find_pair(tc);
  auto [ux, uy] = tc.coords(result.u);
  auto [vx, vy] = tc.coords(result.v);
  std::cout << "pair: (" << ux << ',' << uy << ") -> (" << vx << ',' << vy
            << "), distance = " << tc.a + tc.b << ", switches = " << result.path.switches
            << " (bound " << tc.b - 1 << ")\n";
  if (result.all_cycles_proper) {
    std::cout << "every 4-cycle is properly colored; L-shaped path with "
              << result.path.switches << " switch(es)\n";
  } else {
    std::cout << "diagonals start at row " << result.start_row << ", chosen #"
              << result.chosen << ":\n"
              << describe_diagonal_table(result.diagonals);
  }
  if (!opt.output.empty()) {
    save_json(torus_pair_to_json(tc, result), opt.output);
    std::cout << "wrote " << opt.output << '\n';
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string graph, output, automorphism;
  bool exhaustive = false, simple = false;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  int bound = -1;
  bool has_bound = false;
};

int run_verify(const VerifyOptions& opt) {
  GraphSpec spec = parse_graph_spec(opt.graph);
  Graph g = build_graph(spec);

  VerificationReport report;
  if (opt.simple) {
    auto n = hypercube_dimension(g);
    if (!n) throw std::invalid_argument("verify --simple needs a hypercube graph");
    report = simple_coloring_suite(*n);
    std::cout << "simple colorings of Q_" << *n << ": " << report.cases_relevant << " of "
              << report.cases_checked << " colorings\n";
    std::cout << "all give a monochromatic orbit pair and a tree component graph: "
              << (report.violations.empty() ? "yes" : "NO") << '\n';
  } else if (opt.exhaustive) {
    Automorphism phi = pick_automorphism(opt.automorphism, spec, g, std::cout);
    auto t0 = std::chrono::steady_clock::now();
    ExhaustiveDResult res = exhaustive_d(g, phi);
    report.instance = graph_spec_string(spec);
    report.mode = "exhaustive";
    report.cases_checked = res.colorings;
    report.cases_relevant = res.colorings;
    report.worst_case_switches = res.d;
    report.worst_case_coloring = res.extremal.to_string();
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "d = " << res.d << " (exhaustive over " << res.colorings
              << " colorings)\n";
    std::cout << "extremal coloring: " << report.worst_case_coloring << '\n';
    if (opt.has_bound && res.d > opt.bound)
      report.violations.push_back("worst case " + std::to_string(res.d) + " > bound " +
                                  std::to_string(opt.bound) + " coloring " +
                                  report.worst_case_coloring);
  } else if (opt.samples > 0) {
    Automorphism phi = pick_automorphism(opt.automorphism, spec, g, std::cout);
    std::cout << "samples = " << opt.samples << ", seed = " << opt.seed
              << ", workers = " << opt.workers << '\n';
    report = sampled_d(g, phi, opt.samples, opt.seed,
                       opt.has_bound ? std::optional<int>(opt.bound) : std::nullopt,
                       opt.workers);
    report.instance = graph_spec_string(spec);
    std::cout << "worst sampled case: " << report.worst_case_switches << " switches\n";
  } else {
    throw std::invalid_argument("verify: pick a mode (--exhaustive, --samples N, --simple)");
  }

  if (!report.violations.empty()) {
    std::cout << "VIOLATIONS (" << report.violations.size() << "):\n";
    for (const std::string& v : report.violations) std::cout << "  " << v << '\n';
  }
  if (!opt.output.empty()) {
    save_json(report_to_json(report), opt.output);
    std::cout << "wrote " << opt.output << '\n';
  }
  return report.violations.empty() ? kExitOk : kExitViolation;
}

struct ExperimentOptions {
  std::string kind, family = "level-alternating", output;
  std::vector<int> ns;
  std::int64_t samples = 2000;
  std::uint64_t seed = 0;
  int workers = 1;
  double p = 0.5;
  bool exhaustive = false;
};

int run_experiment(const ExperimentOptions& opt) {
  if (opt.ns.empty()) throw std::invalid_argument("experiment: give at least one --n");
  std::vector<CsvRow> rows;
  if (opt.kind == "tree-fraction") {
    std::cout << "tree fraction of random colorings, ";
    if (opt.exhaustive)
      std::cout << "exhaustive\n";
    else
      std::cout << "samples = " << opt.samples << ", seed = " << opt.seed
                << ", workers = " << opt.workers << '\n';
    for (int n : opt.ns) {
      CsvRow row;
      row.n = n;
      if (opt.exhaustive) {
        Graph g = hypercube(n);
        row.samples = std::int64_t{1} << g.edge_count();
        row.value = exhaustive_tree_fraction(n);
      } else {
        row.samples = opt.samples;
        row.value = tree_fraction_experiment(n, opt.samples, opt.seed, opt.workers);
      }
      std::cout << "n = " << n << ": " << format_double(row.value) << '\n';
      rows.push_back(row);
    }
  } else if (opt.kind == "connectivity") {
    std::cout << "connectivity of random subgraphs, p = " << format_double(opt.p)
              << ", samples = " << opt.samples << ", seed = " << opt.seed
              << ", workers = " << opt.workers << '\n';
    for (int n : opt.ns) {
      CsvRow row;
      row.n = n;
      row.samples = opt.samples;
      row.value = connectivity_experiment(n, opt.p, opt.samples, opt.seed, opt.workers);
      std::cout << "n = " << n << ": " << format_double(row.value) << '\n';
      rows.push_back(row);
    }
    if (opt.p == 0.5) std::cout << "reference: 1/e = 0.36787944117144233\n";
  } else if (opt.kind == "average-switch") {
    std::cout << "average switches to the paired vertex, family = " << opt.family << '\n';
    for (int n : opt.ns) {
      ColoredGraph colored;
      Automorphism phi = antipodal_map(1);
      if (opt.family == "level-alternating") {
        colored = level_alternating_coloring(n);
        phi = antipodal_map(n);
      } else if (opt.family == "proper-cycle") {
        colored = proper_cycle_coloring(n);
        phi = farthest_point_automorphism(ProductSpec{{n}});
      } else {
        throw std::invalid_argument(
            "experiment: --family must be level-alternating or proper-cycle");
      }
      AverageSwitchReport rep =
          average_switch_experiment(colored.graph, colored.coloring, phi);
      CsvRow row;
      row.n = n;
      row.samples = colored.graph.vertex_count() - rep.disconnected_pairs;
      row.value = rep.mean;
      std::cout << "n = " << n << ": mean = " << format_double(rep.mean);
      if (rep.disconnected_pairs > 0)
        std::cout << " (" << rep.disconnected_pairs << " disconnected pairs)";
      std::cout << '\n';
      rows.push_back(row);
    }
  } else {
    throw std::invalid_argument("experiment: unknown kind '" + opt.kind +
                                "' (tree-fraction|connectivity|average-switch)");
  }
  if (!opt.output.empty()) {
    save_text(experiment_csv(rows), opt.output);
    std::cout << "wrote " << opt.output << '\n';
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"few-color-change paths between automorphism-paired vertices"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a named coloring family");
  gen_cmd->add_option("--family", gen.family, "coloring family")->required();
  gen_cmd->add_option("--k", gen.k, "family parameter k");
  gen_cmd->add_option("--m", gen.m, "family parameter m");
  gen_cmd->add_option("--n", gen.n, "family parameter n");
  gen_cmd->add_option("--graph", gen.graph, "graph spec (random/monochromatic)");
  gen_cmd->add_option("--p", gen.p, "red probability (random)");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--color", gen.color, "R or B (monochromatic)");
  gen_cmd->add_option("-o,--output", gen.output, "coloring file to write")->required();

  CompOptions comp;
  CLI::App* comp_cmd = app.add_subcommand("comp", "component graph of a coloring");
  comp_cmd->add_option("input", comp.input, "coloring file")->required();
  comp_cmd->add_option("-o,--output", comp.output, "component graph JSON to write");
  comp_cmd->add_option("--dot", comp.dot, "Graphviz file to write");
  comp_cmd->add_option("--cycle-budget", comp.cycle_budget, "longest-cycle search budget");

  SwitchOptions sw;
  CLI::App* sw_cmd = app.add_subcommand("switch", "fewest color changes between vertices");
  sw_cmd->add_option("input", sw.input, "coloring file")->required();
  CLI::Option* sw_u = sw_cmd->add_option("--u", sw.u, "start vertex");
  CLI::Option* sw_v = sw_cmd->add_option("--v", sw.v, "end vertex");
  sw_cmd->add_option("--automorphism", sw.automorphism,
                     "pairing map (antipodal|farthest|identity)");
  sw_cmd->add_option("-o,--output", sw.output, "path JSON to write");

  WitnessOptions wit;
  CLI::App* wit_cmd = app.add_subcommand("witness", "constructive few-switch witness");
  wit_cmd->add_option("input", wit.input, "coloring file")->required();
  wit_cmd->add_option("--k", wit.k, "switch budget")->required();
  wit_cmd->add_option("--automorphism", wit.automorphism,
                      "pairing map (antipodal|farthest|identity)");
  wit_cmd->add_option("--cycle-budget", wit.cycle_budget, "longest-cycle search budget");
  wit_cmd->add_option("-o,--output", wit.output, "result JSON to write");

  TorusPairOptions torus;
  CLI::App* torus_cmd = app.add_subcommand("torus-pair", "far pair with few switches on a torus");
  torus_cmd->add_option("input", torus.input, "coloring file (product:<2a>x<2b>)");
  CLI::Option* torus_a = torus_cmd->add_option("--a", torus.a, "half width (random torus)");
  CLI::Option* torus_b = torus_cmd->add_option("--b", torus.b, "half height (random torus)");
  torus_cmd->add_option("--p", torus.p, "red probability (random torus)");
  torus_cmd->add_option("--seed", torus.seed, "random seed");
  torus_cmd->add_option("-o,--output", torus.output, "report JSON to write");

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "adversarial search over colorings");
  verify_cmd->add_option("--graph", verify.graph, "graph spec")->required();
  verify_cmd->add_flag("--exhaustive", verify.exhaustive, "all 2^m colorings");
  verify_cmd->add_flag("--simple", verify.simple, "all simple colorings (hypercube)");
  verify_cmd->add_option("--samples", verify.samples, "number of random colorings");
  verify_cmd->add_option("--seed", verify.seed, "random seed");
  verify_cmd->add_option("--workers", verify.workers, "worker threads");
  CLI::Option* verify_bound =
      verify_cmd->add_option("--bound", verify.bound, "flag worst cases above this");
  verify_cmd->add_option("--automorphism", verify.automorphism,
                         "pairing map (antipodal|farthest|identity)");
  verify_cmd->add_option("-o,--output", verify.output, "report JSON to write");

  ExperimentOptions exp;
  CLI::App* exp_cmd = app.add_subcommand("experiment", "trend experiments, CSV output");
  exp_cmd->add_option("--kind", exp.kind,
                      "tree-fraction|connectivity|average-switch")->required();
  exp_cmd->add_option("--n", exp.ns, "graph size(s), repeatable")->required();
  exp_cmd->add_option("--family", exp.family, "coloring family (average-switch)");
  exp_cmd->add_option("--samples", exp.samples, "samples per size");
  exp_cmd->add_option("--seed", exp.seed, "random seed");
  exp_cmd->add_option("--workers", exp.workers, "worker threads");
  exp_cmd->add_option("--p", exp.p, "edge keep probability (connectivity)");
  exp_cmd->add_flag("--exhaustive", exp.exhaustive, "exact enumeration (tree-fraction)");
  exp_cmd->add_option("-o,--output", exp.output, "CSV file to write");

  int code = kExitOk;
  gen_cmd->callback([&] { code = run_gen(gen); });
  comp_cmd->callback([&] { code = run_comp(comp); });
  sw_cmd->callback([&] {
    sw.has_u = sw_u->count() > 0;
    sw.has_v = sw_v->count() > 0;
    code = run_switch(sw);
  });
  wit_cmd->callback([&] { code = run_witness(wit); });
  torus_cmd->callback([&] {
    torus.has_a = torus_a->count() > 0;
    torus.has_b = torus_b->count() > 0;
    code = run_torus_pair(torus);
  });
  verify_cmd->callback([&] {
    verify.has_bound = verify_bound->count() > 0;
    code = run_verify(verify);
  });
  exp_cmd->callback([&] { code = run_experiment(exp); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int parse_code = app.exit(e);
    return parse_code == 0 ? kExitOk : kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return code;
}

}  // namespace swg
