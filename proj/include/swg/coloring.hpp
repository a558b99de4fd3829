#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swg/graph.hpp"

namespace swg {

// The two edge colors.  The numeric values are part of the file format
// (coloring files may list colors as 0/1 integers), so they are fixed.
enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

// Total assignment of a color to every edge of some graph, indexed by edge id.
struct EdgeColoring {
  std::vector<Color> colors;

  Color at(int edge_id) const { return colors[edge_id]; }
  int size() const { return static_cast<int>(colors.size()); }

  std::string to_string() const;                       // "RBRRB..."
  static EdgeColoring from_string(const std::string&); // accepts 'R'/'B'
};

// Throws std::invalid_argument unless c colors exactly the edges of g.
void check_coloring(const Graph& g, const EdgeColoring& c);

struct ColoredGraph {
  Graph graph;
  EdgeColoring coloring;
};

// --- generators -------------------------------------------------------------

// Q_{2k} with edges in the first k directions red, the rest blue.  Every
// monochromatic component is a k-subcube.
ColoredGraph directional_coloring(int k);

// Q_{m+k} (m even) built around two monochromatic m-subcubes: one red where
// the last k coordinates are all zeros, one blue where they are all ones.
// Edge rules, with directions 0..m-1 the "cube" block and m..m+k-1 the "tail":
//   - first m/2 directions: red unless the tail coordinates are all ones;
//   - next m/2 directions: red only when the tail coordinates are all zeros;
//   - tail directions: red iff the endpoint with that coordinate set to one
//     has an even number of ones among the tail coordinates;
//   - everything else blue.
ColoredGraph two_cube_coloring(int m, int k);

// Q_{2k} (k >= 2) whose components each span two consecutive coordinate-sum
// levels of one half of the coordinates; the component graph is grid-like.
// An edge flipping a coordinate in the first (resp. last) k is red iff the
// endpoint with that coordinate equal to one has odd coordinate sum over the
// first (resp. last) k coordinates.
ColoredGraph double_level_coloring(int k);

// Q_n with the edges between levels i and i+1 red exactly when i is even.
ColoredGraph level_alternating_coloring(int n);

// Properly edge-colored even cycle: colors alternate around the cycle,
// starting red on edge {0,1}.
ColoredGraph proper_cycle_coloring(int m);

// Each edge independently red with probability p, from a SplitMix64 stream.
EdgeColoring random_coloring(const Graph& g, double p, std::uint64_t seed);

EdgeColoring monochromatic_coloring(const Graph& g, Color c);

// Coloring number `bits` in the canonical enumeration of all 2^m colorings:
// bit e of `bits` is the color of edge e (0 = red, 1 = blue).
EdgeColoring coloring_from_bits(const Graph& g, std::uint64_t bits);

// --- predicates -------------------------------------------------------------

// quad lists the cycle in traversal order v0-v1-v2-v3-v0; throws
// std::invalid_argument unless it is a genuine 4-cycle.  True iff the colors
// alternate around it.
bool is_properly_colored_4cycle(const Graph& g, const EdgeColoring& c,
                                const std::array<int, 4>& quad);

// Scans all 4-cycles of a hypercube (one per direction pair and co-dimension-2
// subcube); returns one properly colored 4-cycle in traversal order, or
// nullopt if there is none.  Requires g to be a hypercube.
std::optional<std::array<int, 4>> find_properly_colored_4cycle(const Graph& g,
                                                               const EdgeColoring& c);

// A coloring is simple when no 4-cycle is properly colored.  Hypercubes only.
bool is_simple(const Graph& g, const EdgeColoring& c);

// True iff every pair of antipodal edges {u,v}, {u^mask,v^mask} receives two
// different colors.  Hypercubes only.
bool is_antipodal_coloring(const Graph& g, const EdgeColoring& c);

}  // namespace swg
