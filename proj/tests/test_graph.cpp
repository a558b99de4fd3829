#include "swg/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"

using namespace swg;

TEST_CASE("from_edges canonicalizes and validates") {
  Graph g = Graph::from_edges(4, {{2, 1}, {3, 0}, {0, 1}});
  CHECK_EQ(g.edge_count(), 3);
  std::vector<std::pair<int, int>> want{{0, 1}, {0, 3}, {1, 2}};
  CHECK_EQ(g.edges(), want);
  CHECK_EQ(g.edge_id(1, 2), 2);
  CHECK_EQ(g.edge_id(2, 1), 2);
  CHECK_FALSE(g.find_edge(1, 3).has_value());
  CHECK_THROWS_AS(g.edge_id(1, 3), std::invalid_argument);

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);  // loop
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);  // out of range
}

TEST_CASE("adjacency lists are sorted and consistent") {
  Graph g = cycle(5);
  for (int u = 0; u < 5; ++u) {
    CHECK_EQ(g.degree(u), 2);
    auto adj = g.adjacent(u);
    CHECK(std::is_sorted(adj.begin(), adj.end()));
    for (auto [v, e] : adj) {
      auto [a, b] = g.edge(e);
      CHECK_EQ(std::minmax(u, v), std::minmax(a, b));
    }
  }
}

TEST_CASE("cycle graphs") {
  Graph k2 = cycle(2);
  CHECK_EQ(k2.vertex_count(), 2);
  CHECK_EQ(k2.edge_count(), 1);

  Graph c4 = cycle(4);
  std::vector<std::pair<int, int>> want{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  CHECK_EQ(c4.edges(), want);

  CHECK_THROWS_AS(cycle(1), std::invalid_argument);
}

TEST_CASE("hypercube structure") {
  Graph q1 = hypercube(1);
  CHECK_EQ(q1.edges(), std::vector<std::pair<int, int>>{{0, 1}});

  Graph q3 = hypercube(3);
  CHECK_EQ(q3.vertex_count(), 8);
  CHECK_EQ(q3.edge_count(), 12);
  for (auto [u, v] : q3.edges()) {
    CHECK_LT(u, v);
    int diff = u ^ v;
    CHECK_EQ(diff & (diff - 1), 0);  // single bit
  }
  CHECK_EQ(edge_direction(5, 7), 1);
  CHECK_THROWS_AS(edge_direction(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(hypercube(0), std::invalid_argument);
}

TEST_CASE("hypercube recognizer accepts only the canonical labeling") {
  for (int n = 1; n <= 4; ++n) {
    auto d = hypercube_dimension(hypercube(n));
    REQUIRE(d.has_value());
    CHECK_EQ(*d, n);
  }
  // C_4 is isomorphic to Q_2 but cyclically labeled: edge {1,2} flips two bits
  CHECK_FALSE(hypercube_dimension(cycle(4)).has_value());
  CHECK_FALSE(hypercube_dimension(cycle(8)).has_value());
  CHECK_FALSE(hypercube_dimension(Graph::from_edges(2, {})).has_value());
}

TEST_CASE("product of cycles matches the hypercube on 2-factors") {
  Graph p = product_of_cycles(ProductSpec{{2, 2, 2}});
  CHECK_EQ(p.edges(), hypercube(3).edges());
}

TEST_CASE("product coordinates round-trip") {
  ProductSpec spec{{4, 6}};
  Graph g = product_of_cycles(spec);
  CHECK_EQ(g.vertex_count(), 24);
  CHECK_EQ(g.edge_count(), 48);  // 4-regular
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto coords = vertex_to_coords(spec, v);
    REQUIRE_EQ(coords.size(), 2);
    CHECK_GE(coords[0], 0);
    CHECK_LT(coords[0], 4);
    CHECK_GE(coords[1], 0);
    CHECK_LT(coords[1], 6);
    CHECK_EQ(coords_to_vertex(spec, coords), v);
  }
  // neighbors differ by one step in exactly one coordinate
  for (auto [u, v] : g.edges()) {
    auto cu = vertex_to_coords(spec, u), cv = vertex_to_coords(spec, v);
    int changed = 0;
    for (size_t i = 0; i < cu.size(); ++i) {
      if (cu[i] == cv[i]) continue;
      ++changed;
      int m = spec.cycle_lengths[i];
      int diff = (cv[i] - cu[i] + m) % m;
      CHECK((diff == 1 || diff == m - 1));
    }
    CHECK_EQ(changed, 1);
  }
}

TEST_CASE("product with a 2-factor has no parallel edges") {
  Graph p = product_of_cycles(ProductSpec{{2, 4}});
  CHECK_EQ(p.vertex_count(), 8);
  CHECK_EQ(p.edge_count(), 12);  // 3-regular: one K_2 step + two C_4 steps
}

TEST_CASE("farthest point automorphism is an involution at diameter distance") {
  ProductSpec spec{{4, 6}};
  Graph g = product_of_cycles(spec);
  Automorphism phi = farthest_point_automorphism(spec);
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK_EQ(phi(phi(v)), v);
    auto d = distance(g, v, phi(v));
    REQUIRE(d.has_value());
    CHECK_EQ(*d, 5);  // (4+6)/2
  }
  CHECK_THROWS_AS(farthest_point_automorphism(ProductSpec{{3}}), std::invalid_argument);
  CHECK_THROWS_AS(farthest_point_automorphism(ProductSpec{{4, 5}}), std::invalid_argument);
}

TEST_CASE("antipodal map complements coordinates") {
  Graph q3 = hypercube(3);
  Automorphism phi = antipodal_map(3);
  for (int v = 0; v < 8; ++v) {
    CHECK_EQ(phi(v), v ^ 7);
    CHECK_EQ(phi(phi(v)), v);
    auto d = distance(q3, v, phi(v));
    REQUIRE(d.has_value());
    CHECK_EQ(*d, 3);
  }
}

TEST_CASE("automorphism validation reports a violating edge") {
  Graph c4 = cycle(4);
  CHECK_FALSE(automorphism_violation(c4, {0, 1, 2, 3}).has_value());
  CHECK_FALSE(automorphism_violation(c4, {1, 2, 3, 0}).has_value());  // rotation

  std::vector<int> bad{1, 0, 2, 3};  // swaps 0,1 only; sends edge {1,2} to non-edge {0,2}
  auto violation = automorphism_violation(c4, bad);
  REQUIRE(violation.has_value());
  auto [u, v] = *violation;
  CHECK(c4.has_edge(u, v));
  CHECK_FALSE(c4.has_edge(bad[u], bad[v]));
  CHECK_THROWS_AS(validate_automorphism(c4, bad), std::invalid_argument);
  CHECK_THROWS_AS(validate_automorphism(c4, {0, 0, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(validate_automorphism(c4, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("distances and connectivity") {
  Graph c6 = cycle(6);
  CHECK_EQ(distance(c6, 0, 3), 3);
  CHECK_EQ(distance(c6, 0, 5), 1);
  CHECK(is_connected(c6));

  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(distance(two, 0, 2).has_value());
  CHECK_FALSE(is_connected(two));
  auto d = bfs_distances(two, 0);
  CHECK_EQ(d[1], 1);
  CHECK_EQ(d[2], -1);
  CHECK_EQ(d[3], -1);
}
