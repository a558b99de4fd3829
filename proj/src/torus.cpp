#include "swg/torus.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace swg {

namespace {
constexpr int kInf = std::numeric_limits<int>::max() / 2;

int wrap(int v, int m) {
  v %= m;
  return v < 0 ? v + m : v;
}
}  // namespace

int TorusColoring::vertex(int x, int y) const {
  return wrap(x, width()) + width() * wrap(y, height());
}

std::pair<int, int> TorusColoring::coords(int v) const {
  return {v % width(), v / width()};
}

Color TorusColoring::edge_color(int x1, int y1, int x2, int y2) const {
  return coloring.at(graph.edge_id(vertex(x1, y1), vertex(x2, y2)));
}

TorusColoring make_torus_coloring(int a, int b, EdgeColoring coloring) {
  if (a < 1 || b < a || b < 2)
    throw std::invalid_argument("torus: need 1 <= a <= b and b >= 2");
  TorusColoring tc;
  tc.a = a;
  tc.b = b;
  tc.graph = product_of_cycles({{2 * a, 2 * b}});
  check_coloring(tc.graph, coloring);
  tc.coloring = std::move(coloring);
  return tc;
}

Diagonal lazy_diagonal(const TorusColoring& tc, int x, int y, DiagonalKind kind, int j) {
  if (j < 1) throw std::invalid_argument("lazy diagonal: length must be >= 1");
  int dx = kind == DiagonalKind::Ascending ? 1 : -1;

  // color pair of each step's two corners: [step][0]=horizontal first
  struct Corner {
    Color first, second;
  };
  std::vector<std::array<Corner, 2>> corner(j);
  {
    int cx = x, cy = y;
    for (int i = 0; i < j; ++i) {
      int nx = cx + dx, ny = cy + 1;
      corner[i][0] = {tc.edge_color(cx, cy, nx, cy), tc.edge_color(nx, cy, nx, ny)};
      corner[i][1] = {tc.edge_color(cx, cy, cx, ny), tc.edge_color(cx, ny, nx, ny)};
      cx = nx;
      cy = ny;
    }
  }
  auto cost_from = [](int arrival, const Corner& c) {  // arrival -1 = no edge yet
    int changes = c.first != c.second ? 1 : 0;
    if (arrival >= 0 && static_cast<Color>(arrival) != c.first) ++changes;
    return changes;
  };

  // f[i][c]: fewest changes over i-step prefixes whose last edge has color c
  std::vector<std::array<int, 2>> f(j + 1, {kInf, kInf});
  std::vector<int> g(j + 1, 0);
  for (int o = 0; o < 2; ++o) {
    int& slot = f[1][static_cast<int>(corner[0][o].second)];
    slot = std::min(slot, cost_from(-1, corner[0][o]));
  }
  g[1] = std::min(f[1][0], f[1][1]);
  for (int i = 2; i <= j; ++i) {
    for (int m = 0; m < 2; ++m) {
      if (f[i - 1][m] >= kInf) continue;
      for (int o = 0; o < 2; ++o) {
        const Corner& c = corner[i - 1][o];
        int& slot = f[i][static_cast<int>(c.second)];
        slot = std::min(slot, f[i - 1][m] + cost_from(m, c));
      }
    }
    g[i] = std::min(f[i][0], f[i][1]);
  }

  // reach[i][c]: c can end an i-prefix that is minimal at every index <= i.
  // A minimal-everywhere diagonal exists, so reach (and the backward-pruned
  // alive) sets are never empty.
  std::vector<std::array<bool, 2>> reach(j + 1, {false, false});
  for (int c = 0; c < 2; ++c) reach[1][c] = f[1][c] == g[1];
  for (int i = 2; i <= j; ++i)
    for (int m = 0; m < 2; ++m) {
      if (!reach[i - 1][m]) continue;
      for (int o = 0; o < 2; ++o) {
        const Corner& c = corner[i - 1][o];
        if (g[i - 1] + cost_from(m, c) == g[i]) reach[i][static_cast<int>(c.second)] = true;
      }
    }
  std::vector<std::array<bool, 2>> alive(j + 1, {false, false});
  alive[j] = reach[j];
  for (int i = j - 1; i >= 1; --i)
    for (int m = 0; m < 2; ++m) {
      if (!reach[i][m]) continue;
      for (int o = 0; o < 2; ++o) {
        const Corner& c = corner[i][o];
        if (g[i] + cost_from(m, c) == g[i + 1] && alive[i + 1][static_cast<int>(c.second)])
          alive[i][m] = true;
      }
    }

  Diagonal d;
  d.kind = kind;
  d.start_x = wrap(x, tc.width());
  d.start_y = wrap(y, tc.height());
  d.length = j;
  d.vertices.push_back(tc.vertex(x, y));

  int arrival = -1;
  int cx = x, cy = y;
  for (int i = 0; i < j; ++i) {
    int nx = cx + dx, ny = cy + 1;
    int chosen = -1;
    for (int o = 0; o < 2; ++o) {  // horizontal first on ties
      const Corner& c = corner[i][o];
      int value = (i == 0 ? 0 : g[i]) + cost_from(arrival, c);
      if (value == g[i + 1] && alive[i + 1][static_cast<int>(c.second)]) {
        chosen = o;
        break;
      }
    }
    if (chosen < 0) throw std::logic_error("lazy diagonal: no feasible corner");
    const Corner& c = corner[i][chosen];
    d.horizontal_first.push_back(chosen == 0);
    if (chosen == 0) {
      d.vertices.push_back(tc.vertex(nx, cy));
    } else {
      d.vertices.push_back(tc.vertex(cx, ny));
    }
    d.vertices.push_back(tc.vertex(nx, ny));
    d.colors.push_back(c.first);
    d.colors.push_back(c.second);
    arrival = static_cast<int>(c.second);
    cx = nx;
    cy = ny;
  }
  d.switches = count_switches(d.colors);
  if (d.switches != g[j]) throw std::logic_error("lazy diagonal: switch count mismatch");
  return d;
}

bool is_proper_torus_cycle(const TorusColoring& tc, int x, int y) {
  Color bottom = tc.edge_color(x, y, x + 1, y);
  Color right = tc.edge_color(x + 1, y, x + 1, y + 1);
  Color top = tc.edge_color(x, y + 1, x + 1, y + 1);
  Color left = tc.edge_color(x, y, x, y + 1);
  return bottom != right && right != top && top != left;
}

DiagonalFamily diagonal_family(const TorusColoring& tc, int start_row) {
  DiagonalFamily fam;
  for (int x = 0; x < tc.width(); ++x)
    fam.diagonals.push_back(lazy_diagonal(tc, x, start_row, DiagonalKind::Ascending, tc.a));
  for (int x = 0; x < tc.width(); ++x)
    fam.diagonals.push_back(lazy_diagonal(tc, x, start_row, DiagonalKind::Descending, tc.a));

  fam.charges.assign(tc.a, std::vector<std::pair<int, int>>(tc.width(), {0, 0}));
  long long total = 0;
  fam.min_switches = kInf;
  for (const Diagonal& d : fam.diagonals) {
    total += d.switches;
    fam.min_switches = std::min(fam.min_switches, d.switches);
    for (std::size_t t = 1; t < d.colors.size(); ++t) {
      if (d.colors[t] == d.colors[t - 1]) continue;
      int corner = static_cast<int>(t) / 2;
      // 4-cycle the change happens at, keyed by its lower left corner
      int slot_x = d.kind == DiagonalKind::Ascending
                       ? wrap(d.start_x + corner, tc.width())
                       : wrap(d.start_x - corner - 1, tc.width());
      auto& entry = fam.charges[corner][slot_x];
      if (d.kind == DiagonalKind::Ascending)
        entry.first += 1;
      else
        entry.second += 1;
    }
  }
  fam.per_cycle_bound_ok = true;
  for (const auto& row : fam.charges)
    for (auto [asc, desc] : row)
      if (asc + desc > 2) fam.per_cycle_bound_ok = false;
  fam.mean_switches = static_cast<double>(total) / static_cast<double>(fam.diagonals.size());
  return fam;
}

std::string describe_diagonal_table(const std::vector<Diagonal>& diagonals) {
  std::ostringstream out;
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    const Diagonal& d = diagonals[i];
    out << i << ": " << (d.kind == DiagonalKind::Ascending ? "asc" : "desc") << " from ("
        << d.start_x << "," << d.start_y << ") switches=" << d.switches << "\n";
  }
  return out.str();
}

TorusPairResult find_pair(const TorusColoring& tc) {
  TorusPairResult res;

  // locate the first row holding a non-proper 4-cycle; the diagonal family
  // fans out from every start column of that row, so the column is irrelevant
  int bad_y = -1;
  for (int y = 0; y < tc.height() && bad_y < 0; ++y)
    for (int x = 0; x < tc.width(); ++x)
      if (!is_proper_torus_cycle(tc, x, y)) {
        bad_y = y;
        break;
      }

  if (bad_y < 0) {
    // Every 4-cycle proper: horizontal edges all share one color, vertical
    // edges the other, so an L-shaped path changes color exactly once.
    res.all_cycles_proper = true;
    res.u = tc.vertex(0, 0);
    res.v = tc.vertex(tc.a, tc.b);
    SwitchPath p;
    p.vertices.push_back(tc.vertex(0, 0));
    for (int x = 1; x <= tc.a; ++x) {
      p.colors.push_back(tc.edge_color(x - 1, 0, x, 0));
      p.vertices.push_back(tc.vertex(x, 0));
    }
    for (int y = 1; y <= tc.b; ++y) {
      p.colors.push_back(tc.edge_color(tc.a, y - 1, tc.a, y));
      p.vertices.push_back(tc.vertex(tc.a, y));
    }
    p.switches = count_switches(p.colors);
    if (p.switches > 1)
      throw std::logic_error("torus pair: proper coloring is not horizontal/vertical");
    res.path = std::move(p);
    return res;
  }

  res.start_row = bad_y;
  DiagonalFamily fam = diagonal_family(tc, bad_y);
  res.diagonals = std::move(fam.diagonals);
  res.chosen = 0;
  for (std::size_t i = 1; i < res.diagonals.size(); ++i)
    if (res.diagonals[i].switches < res.diagonals[res.chosen].switches)
      res.chosen = static_cast<int>(i);
  const Diagonal& d = res.diagonals[res.chosen];
  if (d.switches > tc.a - 1)
    throw std::logic_error("torus pair: no diagonal with at most a-1 changes\n" +
                           describe_diagonal_table(res.diagonals));

  // climb the remaining b-a rows vertically
  SwitchPath p;
  p.vertices = d.vertices;
  p.colors = d.colors;
  int end_x = d.kind == DiagonalKind::Ascending ? d.start_x + tc.a : d.start_x - tc.a;
  for (int s = 1; s <= tc.b - tc.a; ++s) {
    int y0 = bad_y + tc.a + s;
    p.colors.push_back(tc.edge_color(end_x, y0 - 1, end_x, y0));
    p.vertices.push_back(tc.vertex(end_x, y0));
  }
  p.switches = count_switches(p.colors);
  if (p.switches > tc.b - 1)
    throw std::logic_error("torus pair: path exceeded b-1 changes");
  res.u = tc.vertex(d.start_x, d.start_y);
  res.v = p.vertices.back();
  res.path = std::move(p);
  return res;
}

}  // namespace swg
