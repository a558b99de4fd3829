#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swg/coloring.hpp"
#include "swg/graph.hpp"
#include "swg/switch_paths.hpp"

namespace swg {

// Colored torus C_{2a} x C_{2b} with 1 <= a <= b and b >= 2.  Coordinates
// (x,y) use the product vertex numbering with the x-cycle least significant:
// id = x + 2a*y.  A factor of length 2 (a == 1) is a single edge.
struct TorusColoring {
  int a = 0, b = 0;
  Graph graph;
  EdgeColoring coloring;

  int width() const { return 2 * a; }
  int height() const { return 2 * b; }
  int vertex(int x, int y) const;               // wraps coordinates
  std::pair<int, int> coords(int v) const;
  Color edge_color(int x1, int y1, int x2, int y2) const;
};

TorusColoring make_torus_coloring(int a, int b, EdgeColoring coloring);

enum class DiagonalKind { Ascending, Descending };

// Staircase path of 2j edges visiting (x,y),(x+1,y+1),...,(x+j,y+j) (or x-i
// descending).  Each step crosses one 4-cycle via one of its two corners:
// horizontal edge first or vertical edge first.
struct Diagonal {
  DiagonalKind kind = DiagonalKind::Ascending;
  int start_x = 0, start_y = 0;
  int length = 0;                     // j
  std::vector<bool> horizontal_first; // corner choice per step
  std::vector<int> vertices;          // 2j+1 vertex ids
  std::vector<Color> colors;          // 2j edge colors
  int switches = 0;
};

// The lazy j-diagonal: fewest color changes among all 2^j corner-choice
// sequences of its kind from (x,y), with every prefix also minimal.  Built by
// dynamic programming over (step, last color) with a feasibility pass that
// keeps only prefix-minimal states; among feasible corners the horizontal-
// first one is preferred, which makes the result deterministic.
Diagonal lazy_diagonal(const TorusColoring& tc, int x, int y, DiagonalKind kind, int j);

// The 4a lazy a-diagonals (ascending then descending, by start column) from
// one row, with the color-change accounting that powers the averaging bound:
// every change is attributed to the 4-cycle it happens at, each 4-cycle is
// visited by exactly one ascending and one descending diagonal of the family,
// and a 4-cycle where one kind changes twice costs the other kind nothing.
struct DiagonalFamily {
  std::vector<Diagonal> diagonals;  // 4a entries
  // charges[i][x]: (ascending, descending) changes at the 4-cycle with lower
  // left corner (x, start_row + i)
  std::vector<std::vector<std::pair<int, int>>> charges;
  bool per_cycle_bound_ok = false;  // ascending + descending <= 2 everywhere
  double mean_switches = 0.0;
  int min_switches = 0;
};

DiagonalFamily diagonal_family(const TorusColoring& tc, int start_row);

// True iff the 4-cycle with lower left corner (x,y) is properly colored.
bool is_proper_torus_cycle(const TorusColoring& tc, int x, int y);

// A pair of vertices at maximal distance a+b joined by a path with at most
// b-1 color changes.  If every 4-cycle is properly colored the coloring is
// horizontal-vs-vertical uniform and an L-shaped path changes color once;
// otherwise the diagonals start from the row of the first non-proper 4-cycle
// (scanning rows then columns), where one of the 4a lazy a-diagonals is
// guaranteed at most a-1 changes, and a vertical climb of b-a edges finishes.
struct TorusPairResult {
  int u = 0, v = 0;  // offset (a, b) apart, distance a+b
  SwitchPath path;
  bool all_cycles_proper = false;
  int start_row = 0;                // row the diagonals were built from
  std::vector<Diagonal> diagonals;  // the 4a-row table (empty in the proper case)
  int chosen = -1;                  // index of the selected diagonal
};

TorusPairResult find_pair(const TorusColoring& tc);

std::string describe_diagonal_table(const std::vector<Diagonal>& diagonals);

}  // namespace swg
