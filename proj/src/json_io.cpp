#include "swg/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swg {

namespace {

int parse_positive_int(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    int value = std::stoi(text, &pos);
    if (pos != text.size() || value <= 0) throw std::invalid_argument(what);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("graph spec: bad " + what + " '" + text + "'");
  }
}

std::string kind_name(GraphSpec::Kind kind) {
  switch (kind) {
    case GraphSpec::Kind::Hypercube: return "hypercube";
    case GraphSpec::Kind::Cycle: return "cycle";
    case GraphSpec::Kind::Product: return "product";
    case GraphSpec::Kind::Explicit: return "explicit";
  }
  throw std::logic_error("unknown graph kind");
}

}  // namespace

GraphSpec parse_graph_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph spec: expected '<kind>:<params>', got '" + text + "'");
  std::string kind = text.substr(0, colon), params = text.substr(colon + 1);
  GraphSpec spec;
  if (kind == "hypercube") {
    spec.kind = GraphSpec::Kind::Hypercube;
    spec.n = parse_positive_int(params, "hypercube dimension");
  } else if (kind == "cycle") {
    spec.kind = GraphSpec::Kind::Cycle;
    spec.m = parse_positive_int(params, "cycle length");
  } else if (kind == "product") {
    spec.kind = GraphSpec::Kind::Product;
    if (!params.empty() && params.back() == 'x')  // getline would eat a trailing delimiter
      throw std::invalid_argument("graph spec: dangling 'x' in product '" + params + "'");
    std::stringstream ss(params);
    std::string part;
    while (std::getline(ss, part, 'x'))
      spec.cycles.push_back(parse_positive_int(part, "product factor"));
    if (spec.cycles.empty())
      throw std::invalid_argument("graph spec: product needs at least one factor");
  } else {
    throw std::invalid_argument("graph spec: unknown kind '" + kind + "'");
  }
  return spec;
}

std::string graph_spec_string(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::Hypercube:
      return "hypercube:" + std::to_string(spec.n);
    case GraphSpec::Kind::Cycle:
      return "cycle:" + std::to_string(spec.m);
    case GraphSpec::Kind::Product: {
      std::string out = "product:";
      for (size_t i = 0; i < spec.cycles.size(); ++i) {
        if (i) out += 'x';
        out += std::to_string(spec.cycles[i]);
      }
      return out;
    }
    case GraphSpec::Kind::Explicit:
      return "explicit(n=" + std::to_string(spec.n) +
             ",m=" + std::to_string(spec.edges.size()) + ")";
  }
  throw std::logic_error("unknown graph kind");
}

Graph build_graph(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::Hypercube:
      return hypercube(spec.n);
    case GraphSpec::Kind::Cycle:
      return cycle(spec.m);
    case GraphSpec::Kind::Product:
      return product_of_cycles({spec.cycles});
    case GraphSpec::Kind::Explicit:
      return Graph::from_edges(spec.n, spec.edges);
  }
  throw std::logic_error("unknown graph kind");
}

nlohmann::json graph_spec_to_json(const GraphSpec& spec) {
  nlohmann::json j;
  j["kind"] = kind_name(spec.kind);
  switch (spec.kind) {
    case GraphSpec::Kind::Hypercube:
      j["n"] = spec.n;
      break;
    case GraphSpec::Kind::Cycle:
      j["m"] = spec.m;
      break;
    case GraphSpec::Kind::Product:
      j["cycles"] = spec.cycles;
      break;
    case GraphSpec::Kind::Explicit: {
      j["n"] = spec.n;
      auto edges = nlohmann::json::array();
      for (auto [u, v] : spec.edges) edges.push_back({u, v});
      j["edges"] = std::move(edges);
      break;
    }
  }
  return j;
}

GraphSpec graph_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("graph spec: expected object with \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  GraphSpec spec;
  if (kind == "hypercube") {
    spec.kind = GraphSpec::Kind::Hypercube;
    spec.n = j.at("n").get<int>();
  } else if (kind == "cycle") {
    spec.kind = GraphSpec::Kind::Cycle;
    spec.m = j.at("m").get<int>();
  } else if (kind == "product") {
    spec.kind = GraphSpec::Kind::Product;
    spec.cycles = j.at("cycles").get<std::vector<int>>();
  } else if (kind == "explicit") {
    spec.kind = GraphSpec::Kind::Explicit;
    spec.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("graph spec: explicit edge must be a pair");
      spec.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    // the colors contract depends on canonical edge order, so require it
    Graph g = Graph::from_edges(spec.n, spec.edges);
    if (g.edges() != spec.edges)
      throw std::invalid_argument(
          "graph spec: explicit edges must be listed in canonical order "
          "(each u < v, sorted lexicographically)");
  } else {
    throw std::invalid_argument("graph spec: unknown kind '" + kind + "'");
  }
  return spec;
}

nlohmann::json coloring_file_to_json(const GraphSpec& spec, const EdgeColoring& coloring) {
  nlohmann::json j;
  j["graph"] = graph_spec_to_json(spec);
  j["colors"] = coloring.to_string();
  return j;
}

ColoringFile coloring_file_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("colors"))
    throw std::invalid_argument("coloring file: expected {\"graph\":..., \"colors\":...}");
  ColoringFile file;
  file.spec = graph_spec_from_json(j["graph"]);
  Graph g = build_graph(file.spec);
  EdgeColoring coloring;
  const auto& colors = j["colors"];
  if (colors.is_string()) {
    coloring = EdgeColoring::from_string(colors.get<std::string>());
  } else if (colors.is_array()) {
    for (const auto& bit : colors) {
      int b = bit.get<int>();
      if (b != 0 && b != 1)
        throw std::invalid_argument("coloring file: color entries must be 0 or 1");
      coloring.colors.push_back(b == 0 ? Color::Red : Color::Blue);
    }
  } else {
    throw std::invalid_argument("coloring file: colors must be a string or an array");
  }
  check_coloring(g, coloring);
  file.colored = ColoredGraph{std::move(g), std::move(coloring)};
  return file;
}

ColoringFile load_coloring_file(const std::string& path) {
  return coloring_file_from_json(load_json(path));
}

nlohmann::json path_to_json(int u, int phi_u, const SwitchPath& path) {
  nlohmann::json j;
  j["u"] = u;
  j["phi_u"] = phi_u;
  j["switches"] = path.switches;
  j["vertices"] = path.vertices;
  std::string colors;
  for (Color c : path.colors) colors += color_char(c);
  j["colors"] = colors;
  return j;
}

nlohmann::json component_graph_to_json(const ComponentGraph& cg) {
  nlohmann::json j;
  auto vertices = nlohmann::json::array();
  for (const MetaVertex& mv : cg.vertices) {
    nlohmann::json v;
    v["id"] = mv.id;
    v["color"] = std::string(1, color_char(mv.color));
    v["members"] = mv.members;
    vertices.push_back(std::move(v));
  }
  j["vertices"] = std::move(vertices);
  auto edges = nlohmann::json::array();
  for (auto [x, y] : cg.edges) edges.push_back({x, y});
  j["edges"] = std::move(edges);
  return j;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["instance"] = report.instance;
  j["mode"] = report.mode;
  j["cases_checked"] = report.cases_checked;
  j["cases_relevant"] = report.cases_relevant;
  j["worst_case_switches"] = report.worst_case_switches;
  j["worst_case_coloring"] = report.worst_case_coloring;
  j["violations"] = report.violations;
  j["runtime_seconds"] = report.runtime_seconds;
  return j;
}

nlohmann::json witness_result_to_json(const TheoremWitnessResult& result) {
  nlohmann::json j;
  if (const auto* w = std::get_if<Witness>(&result)) {
    j["status"] = "witness";
    j["path"] = path_to_json(w->u, w->path.vertices.back(), w->path);
  } else if (const auto* h = std::get_if<HypothesisViolated>(&result)) {
    j["status"] = "hypothesis_violated";
    j["meta_cycle"] = h->meta_cycle;
  } else {
    const auto& f = std::get<WitnessFailure>(result);
    j["status"] = "failure";
    j["reason"] = f.reason;
    auto trace = nlohmann::json::array();
    for (const WitnessStep& s : f.trace) {
      nlohmann::json step;
      step["center"] = s.a;
      step["ball_size"] = s.ball_size;
      step["image_size"] = s.image_size;
      step["region_size"] = s.region_size;
      step["frontier_size"] = s.frontier_size;
      step["cut_vertex"] = s.cut_vertex;
      trace.push_back(std::move(step));
    }
    j["trace"] = std::move(trace);
  }
  return j;
}

nlohmann::json torus_pair_to_json(const TorusColoring& tc, const TorusPairResult& result) {
  nlohmann::json j;
  j["torus"] = {{"a", tc.a}, {"b", tc.b}};
  j["u"] = {tc.coords(result.u).first, tc.coords(result.u).second};
  j["v"] = {tc.coords(result.v).first, tc.coords(result.v).second};
  j["all_cycles_proper"] = result.all_cycles_proper;
  j["start_row"] = result.start_row;
  auto table = nlohmann::json::array();
  for (const Diagonal& d : result.diagonals) {
    nlohmann::json row;
    row["start"] = d.start_x;
    row["kind"] = d.kind == DiagonalKind::Ascending ? "ascending" : "descending";
    row["switches"] = d.switches;
    table.push_back(std::move(row));
  }
  j["diagonals"] = std::move(table);
  j["chosen"] = result.chosen;
  j["path"] = path_to_json(result.u, result.v, result.path);
  return j;
}

void save_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return nlohmann::json::parse(in);
}

std::string format_double(double x) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::string experiment_csv(const std::vector<CsvRow>& rows) {
  std::string out = "n,samples,value\n";
  for (const CsvRow& row : rows)
    out += std::to_string(row.n) + "," + std::to_string(row.samples) + "," +
           format_double(row.value) + "\n";
  return out;
}

void save_text(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace swg
