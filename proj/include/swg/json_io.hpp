#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "swg/coloring.hpp"
#include "swg/component_graph.hpp"
#include "swg/graph.hpp"
#include "swg/harness.hpp"
#include "swg/switch_paths.hpp"
#include "swg/torus.hpp"

namespace swg {

// Named recipe for a graph. Serializes as {"kind":"hypercube","n":4} style
// objects and parses from compact strings like "hypercube:4", "cycle:6",
// "product:4x6".
struct GraphSpec {
  enum class Kind { Hypercube, Cycle, Product, Explicit };
  Kind kind = Kind::Hypercube;
  int n = 0;                                // hypercube dimension / explicit vertex count
  int m = 0;                                // cycle length
  std::vector<int> cycles;                  // product factors
  std::vector<std::pair<int, int>> edges;   // explicit edges, canonical order
};

GraphSpec parse_graph_spec(const std::string& text);
std::string graph_spec_string(const GraphSpec& spec);
Graph build_graph(const GraphSpec& spec);

nlohmann::json graph_spec_to_json(const GraphSpec& spec);
GraphSpec graph_spec_from_json(const nlohmann::json& j);

// Coloring file: {"graph": <graph spec>, "colors": "RBRRB..."}. The colors
// string follows canonical edge order; an array of 0/1 is accepted on input.
struct ColoringFile {
  GraphSpec spec;
  ColoredGraph colored;
};

nlohmann::json coloring_file_to_json(const GraphSpec& spec, const EdgeColoring& coloring);
ColoringFile coloring_file_from_json(const nlohmann::json& j);
ColoringFile load_coloring_file(const std::string& path);

nlohmann::json path_to_json(int u, int phi_u, const SwitchPath& path);
nlohmann::json component_graph_to_json(const ComponentGraph& cg);
nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json witness_result_to_json(const TheoremWitnessResult& result);
nlohmann::json torus_pair_to_json(const TorusColoring& tc, const TorusPairResult& result);

// Writes with a stable layout (2-space indent, sorted keys, trailing newline)
// so reruns with identical inputs produce byte-identical files.
void save_json(const nlohmann::json& j, const std::string& path);
nlohmann::json load_json(const std::string& path);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double x);

struct CsvRow {
  int n = 0;
  std::int64_t samples = 0;
  double value = 0.0;
};

std::string experiment_csv(const std::vector<CsvRow>& rows);
void save_text(const std::string& text, const std::string& path);

}  // namespace swg
