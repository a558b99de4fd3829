#include "swg/coloring.hpp"

#include <bit>
#include <stdexcept>

#include "swg/rng.hpp"

namespace swg {

std::string EdgeColoring::to_string() const {
  std::string s;
  s.reserve(colors.size());
  for (Color c : colors) s.push_back(color_char(c));
  return s;
}

EdgeColoring EdgeColoring::from_string(const std::string& s) {
  EdgeColoring c;
  c.colors.reserve(s.size());
  for (char ch : s) {
    if (ch == 'R')
      c.colors.push_back(Color::Red);
    else if (ch == 'B')
      c.colors.push_back(Color::Blue);
    else
      throw std::invalid_argument(std::string("coloring: bad color character '") + ch + "'");
  }
  return c;
}

void check_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.edge_count())
    throw std::invalid_argument("coloring: colors " + std::to_string(c.size()) +
                                " edges, graph has " + std::to_string(g.edge_count()));
}

static int require_hypercube(const Graph& g) {
  auto n = hypercube_dimension(g);
  if (!n) throw std::invalid_argument("coloring: operation requires a hypercube");
  return *n;
}

ColoredGraph directional_coloring(int k) {
  if (k < 1) throw std::invalid_argument("directional coloring: k must be >= 1");
  Graph g = hypercube(2 * k);
  EdgeColoring c;
  c.colors.reserve(g.edge_count());
  for (auto [u, v] : g.edges())
    c.colors.push_back(edge_direction(u, v) < k ? Color::Red : Color::Blue);
  return {std::move(g), std::move(c)};
}

ColoredGraph two_cube_coloring(int m, int k) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("two-cube coloring: m must be even and >= 2");
  if (k < 1) throw std::invalid_argument("two-cube coloring: k must be >= 1");
  Graph g = hypercube(m + k);
  int tail_mask = ((1 << k) - 1) << m;
  EdgeColoring c;
  c.colors.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    int d = edge_direction(u, v);
    int tail = u & tail_mask;  // shared by both endpoints when d < m
    Color col;
    if (d < m / 2) {
      col = (tail == tail_mask) ? Color::Blue : Color::Red;
    } else if (d < m) {
      col = (tail == 0) ? Color::Red : Color::Blue;
    } else {
      int hi = (u | (1 << d));  // endpoint with the flipped coordinate equal to one
      int ones = std::popcount(static_cast<unsigned>(hi & tail_mask));
      col = (ones % 2 == 0) ? Color::Red : Color::Blue;
    }
    c.colors.push_back(col);
  }
  return {std::move(g), std::move(c)};
}

ColoredGraph double_level_coloring(int k) {
  if (k < 2) throw std::invalid_argument("double-level coloring: k must be >= 2");
  Graph g = hypercube(2 * k);
  int first_mask = (1 << k) - 1;
  int second_mask = first_mask << k;
  EdgeColoring c;
  c.colors.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    int d = edge_direction(u, v);
    int hi = u | (1 << d);  // endpoint with the flipped coordinate equal to one
    int block = (d < k) ? first_mask : second_mask;
    int sum = std::popcount(static_cast<unsigned>(hi & block));
    c.colors.push_back(sum % 2 == 1 ? Color::Red : Color::Blue);
  }
  return {std::move(g), std::move(c)};
}

ColoredGraph level_alternating_coloring(int n) {
  Graph g = hypercube(n);
  EdgeColoring c;
  c.colors.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    (void)v;
    int lower_level = std::popcount(static_cast<unsigned>(u));  // u < v, so u is the 0 side
    c.colors.push_back(lower_level % 2 == 0 ? Color::Red : Color::Blue);
  }
  return {std::move(g), std::move(c)};
}

ColoredGraph proper_cycle_coloring(int m) {
  if (m < 4 || m % 2 != 0)
    throw std::invalid_argument("proper cycle coloring: m must be even and >= 4");
  Graph g = cycle(m);
  EdgeColoring c;
  c.colors.assign(g.edge_count(), Color::Red);
  for (int i = 0; i < m; ++i) {
    int u = i, v = (i + 1) % m;
    c.colors[g.edge_id(u, v)] = (i % 2 == 0) ? Color::Red : Color::Blue;
  }
  return {std::move(g), std::move(c)};
}

EdgeColoring random_coloring(const Graph& g, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random coloring: p outside [0,1]");
  SplitMix64 rng(seed);
  EdgeColoring c;
  c.colors.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    c.colors.push_back(rng.next_bool(p) ? Color::Red : Color::Blue);
  return c;
}

EdgeColoring monochromatic_coloring(const Graph& g, Color col) {
  EdgeColoring c;
  c.colors.assign(g.edge_count(), col);
  return c;
}

EdgeColoring coloring_from_bits(const Graph& g, std::uint64_t bits) {
  if (g.edge_count() > 63) throw std::invalid_argument("coloring enumeration: too many edges");
  EdgeColoring c;
  c.colors.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    c.colors.push_back((bits >> e) & 1 ? Color::Blue : Color::Red);
  return c;
}

bool is_properly_colored_4cycle(const Graph& g, const EdgeColoring& c,
                                const std::array<int, 4>& quad) {
  check_coloring(g, c);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (quad[i] == quad[j])
        throw std::invalid_argument("4-cycle check: repeated vertex");
  std::array<Color, 4> col;
  for (int i = 0; i < 4; ++i) {
    auto e = g.find_edge(quad[i], quad[(i + 1) % 4]);
    if (!e) throw std::invalid_argument("4-cycle check: vertices do not form a 4-cycle");
    col[i] = c.at(*e);
  }
  return col[0] != col[1] && col[1] != col[2] && col[2] != col[3] && col[3] != col[0];
}

std::optional<std::array<int, 4>> find_properly_colored_4cycle(const Graph& g,
                                                               const EdgeColoring& c) {
  int n = require_hypercube(g);
  check_coloring(g, c);
  // Every 4-cycle of Q_n spans two directions i < j over a base vertex with
  // both coordinates zero: u, u+2^i, u+2^i+2^j, u+2^j.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int bi = 1 << i, bj = 1 << j;
      for (int u = 0; u < g.vertex_count(); ++u) {
        if (u & (bi | bj)) continue;
        std::array<int, 4> quad{u, u | bi, u | bi | bj, u | bj};
        if (is_properly_colored_4cycle(g, c, quad)) return quad;
      }
    }
  return std::nullopt;
}

bool is_simple(const Graph& g, const EdgeColoring& c) {
  return !find_properly_colored_4cycle(g, c).has_value();
}

bool is_antipodal_coloring(const Graph& g, const EdgeColoring& c) {
  int n = require_hypercube(g);
  check_coloring(g, c);
  int mask = (1 << n) - 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    int anti = g.edge_id(u ^ mask, v ^ mask);
    if (c.at(e) == c.at(anti)) return false;
  }
  return true;
}

}  // namespace swg
