#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swg/coloring.hpp"
#include "swg/graph.hpp"

namespace swg {

struct MetaVertex {
  int id;
  Color color;
  std::vector<int> members;  // sorted base vertex ids
};

// The graph of monochromatic components: one meta-vertex per component of the
// red subgraph and per component of the blue subgraph (isolated vertices
// count as singleton components of both colors, so every base vertex lies in
// exactly one red and one blue component).  Two components are adjacent when
// they share a base vertex, which forces opposite colors: the meta-graph is
// simple and bipartite, and it is connected iff the base graph is.
//
// Meta-vertex ids are canonical: red components sorted by smallest member
// first, then blue components likewise.
struct ComponentGraph {
  int base_vertex_count = 0;
  std::vector<MetaVertex> vertices;
  std::vector<std::pair<int, int>> edges;  // sorted, deduplicated
  std::vector<std::vector<int>> adj;       // meta adjacency, sorted

  // per base vertex: (red component id, blue component id)
  std::vector<std::pair<int, int>> vertex_to_components;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int red_count() const;
  int component_of(int base_vertex, Color c) const;
};

ComponentGraph build_component_graph(const Graph& g, const EdgeColoring& c);

// Components that contain the image under phi of at least one member of
// component a (both colors), sorted.  The image of a connected component is
// connected, so this set always spans a connected subgraph of the meta-graph.
std::vector<int> image_component_set(const ComponentGraph& cg, const Automorphism& phi,
                                     int a);

bool is_tree(const ComponentGraph& cg);

// meta BFS distances from component a; -1 = unreachable
std::vector<int> meta_distances(const ComponentGraph& cg, int a);

// distance between meta-vertices; nullopt when disconnected
std::optional<int> meta_distance(const ComponentGraph& cg, int a, int b);

struct LongestCycleResult {
  enum class Kind { Acyclic, Exact, LowerBound } kind = Kind::Acyclic;
  int length = 0;          // 0 when acyclic
  std::vector<int> cycle;  // a cycle realizing `length` (empty when acyclic)
};

// Longest (not necessarily induced) cycle by exhaustive path search.  The
// search is exponential; `node_budget` bounds expanded search nodes.  If the
// search finishes the result is Exact (or Acyclic); if the budget runs out it
// degrades to LowerBound with the best cycle found so far.
LongestCycleResult longest_cycle_length(const ComponentGraph& cg,
                                        std::int64_t node_budget);

struct InducedCycleResult {
  enum class Kind { Found, NotFound, BudgetExhausted } kind = Kind::NotFound;
  std::vector<int> cycle;  // Found: length >= min_len; BudgetExhausted: best so far
};

// Searches for an induced (chordless) cycle of length >= min_len (min_len >=
// 4) by backtracking over chordless paths; stops at the first hit.  NotFound
// is exhaustive; BudgetExhausted reports the longest induced cycle seen.
InducedCycleResult longest_induced_cycle(const ComponentGraph& cg, int min_len,
                                         std::int64_t node_budget);

// Deterministic Graphviz rendering; meta-vertex labels are R<i>(size) and
// B<j>(size) with i, j the per-color component index.
std::string export_dot(const ComponentGraph& cg);

}  // namespace swg
