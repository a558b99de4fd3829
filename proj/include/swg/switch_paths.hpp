#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swg/component_graph.hpp"

namespace swg {

// A walk in the base graph together with its edge colors.  `switches` counts
// positions where consecutive edges have different colors.
struct SwitchPath {
  std::vector<int> vertices;  // size = colors.size() + 1; a single vertex for empty walks
  std::vector<Color> colors;  // color of each traversed edge
  int switches = 0;
};

int count_switches(const std::vector<Color>& colors);

// Consistency check used by tests and internal assertions: consecutive
// vertices adjacent, colors match the traversed edges, switches recounted.
bool is_valid_switch_path(const Graph& g, const EdgeColoring& c, const SwitchPath& p);

// Fewest color changes over all u-v walks, realized by a concrete walk.
// Computed by 0/1 BFS over (vertex, color of last edge) states, with both
// colors of u as free starts.  u == v yields the empty walk.  nullopt when v
// is unreachable from u.
std::optional<SwitchPath> min_switches(const Graph& g, const EdgeColoring& c, int u,
                                       int v);

struct OrbitObjectiveResult {
  int best_switches = 0;
  int witness_vertex = 0;  // u minimizing min_switches(u, phi(u))
  SwitchPath path;         // a best path u -> phi(u)
};

// min over u of min_switches(u, phi(u)); nullopt when no pair (u, phi(u)) is
// connected.  Ties broken toward the smallest u.
std::optional<OrbitObjectiveResult> orbit_objective(const Graph& g,
                                                    const EdgeColoring& c,
                                                    const Automorphism& phi);

// --- constructive theorem witness -------------------------------------------

struct Witness {
  int u = 0;
  SwitchPath path;  // u -> phi(u), at most k switches
};

struct HypothesisViolated {
  std::vector<int> meta_cycle;  // a meta-cycle of length >= 2k+3
};

struct WitnessStep {  // one iteration of the search, for failure diagnostics
  int a;              // current center meta-vertex
  int ball_size;      // |B_k(a)|
  int image_size;     // |S(a)|
  int region_size;    // |X|, the region the image set lives in
  int frontier_size;  // |H|, neighbors of the ball inside X
  int cut_vertex;     // Menger cut vertex (-1 if not reached)
};

struct WitnessFailure {
  std::string reason;
  std::vector<WitnessStep> trace;
};

using TheoremWitnessResult = std::variant<Witness, HypothesisViolated, WitnessFailure>;

// Realizes the guarantee: when the component graph has no cycle longer than
// 2k+2, some vertex u admits a path to phi(u) with at most k color changes.
//
// The longest-cycle precondition is established exactly first (cycle_budget
// exhaustion is a WitnessFailure, never a silent pass); a meta-cycle of
// length >= 2k+3 is reported as HypothesisViolated.  Otherwise the search
// iterates: from center a_i, either the ball B_k(a_i) meets the image set
// S(a_i) -- success, and the witness path is stitched along a shortest
// meta-path -- or the frontier H_i (neighbors of the ball inside the region
// X_i of the complement containing S(a_i)) is separated from a_i by a single
// cut vertex s_i (unit-vertex-capacity max-flow, asserted to be exactly 1),
// and the center moves one step toward s_i.  The region X_i shrinks strictly,
// which bounds the iteration count.  WitnessFailure indicates a bug or an
// unverified hypothesis, never normal operation.
TheoremWitnessResult theorem_witness(const Graph& g, const EdgeColoring& c,
                                     const Automorphism& phi, int k,
                                     std::int64_t cycle_budget = 50'000'000);

// Fewest color changes over coordinate-monotone (shortest) paths from u to
// its antipode in a hypercube; 0/1 BFS over (flipped-direction set, color)
// states.  Never smaller than the unrestricted minimum.
SwitchPath geodesic_min_switches(const Graph& g, const EdgeColoring& c, int u);

}  // namespace swg
