#include "swg/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swg {

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edge_list) {
  if (vertex_count < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop edge " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
    throw std::invalid_argument("graph: parallel edge");

  Graph g;
  g.n_ = vertex_count;
  g.edges_ = std::move(edge_list);
  g.adj_.assign(vertex_count, {});
  for (int id = 0; id < static_cast<int>(g.edges_.size()); ++id) {
    auto [u, v] = g.edges_[id];
    g.adj_[u].push_back({v, id});
    g.adj_[v].push_back({u, id});
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

std::optional<int> Graph::find_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
  if (it == edges_.end() || *it != std::pair{u, v}) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

int Graph::edge_id(int u, int v) const {
  auto id = find_edge(u, v);
  if (!id)
    throw std::invalid_argument("graph: no edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  return *id;
}

static void check_product_spec(const ProductSpec& spec) {
  if (spec.cycle_lengths.empty())
    throw std::invalid_argument("product: needs at least one factor");
  for (int a : spec.cycle_lengths)
    if (a < 2) throw std::invalid_argument("product: factor length < 2");
}

std::vector<int> vertex_to_coords(const ProductSpec& spec, int v) {
  check_product_spec(spec);
  std::vector<int> coords(spec.cycle_lengths.size());
  for (std::size_t i = 0; i < spec.cycle_lengths.size(); ++i) {
    coords[i] = v % spec.cycle_lengths[i];
    v /= spec.cycle_lengths[i];
  }
  if (v != 0) throw std::invalid_argument("product: vertex id out of range");
  return coords;
}

int coords_to_vertex(const ProductSpec& spec, const std::vector<int>& coords) {
  check_product_spec(spec);
  if (coords.size() != spec.cycle_lengths.size())
    throw std::invalid_argument("product: coordinate count mismatch");
  int v = 0;
  for (std::size_t i = spec.cycle_lengths.size(); i-- > 0;) {
    int a = spec.cycle_lengths[i];
    int x = coords[i];
    if (x < 0 || x >= a) throw std::invalid_argument("product: coordinate out of range");
    v = v * a + x;
  }
  return v;
}

Graph cycle(int m) {
  if (m < 2) throw std::invalid_argument("cycle: length must be >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
  if (m > 2) edges.push_back({0, m - 1});
  return Graph::from_edges(m, std::move(edges));
}

Graph hypercube(int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("hypercube: dimension out of [1,24]");
  int size = 1 << n;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) << (n - 1));
  for (int u = 0; u < size; ++u)
    for (int d = 0; d < n; ++d)
      if (!(u & (1 << d))) edges.push_back({u, u | (1 << d)});
  return Graph::from_edges(size, std::move(edges));
}

Graph product_of_cycles(const ProductSpec& spec) {
  check_product_spec(spec);
  long long size = 1;
  for (int a : spec.cycle_lengths) {
    size *= a;
    if (size > (1 << 24)) throw std::invalid_argument("product: too many vertices");
  }
  int n = static_cast<int>(size);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    auto coords = vertex_to_coords(spec, v);
    for (std::size_t i = 0; i < spec.cycle_lengths.size(); ++i) {
      int a = spec.cycle_lengths[i];
      for (int step : {1, a - 1}) {  // +1 and -1 mod a; identical when a == 2
        auto c = coords;
        c[i] = (c[i] + step) % a;
        int w = coords_to_vertex(spec, c);
        if (v < w) edges.push_back({v, w});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(n, std::move(edges));
}

Automorphism farthest_point_automorphism(const ProductSpec& spec) {
  check_product_spec(spec);
  for (int a : spec.cycle_lengths)
    if (a % 2 != 0)
      throw std::invalid_argument(
          "farthest point map: odd cycle length " + std::to_string(a) +
          " has no unique farthest vertex");
  int n = 1;
  for (int a : spec.cycle_lengths) n *= a;
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) {
    auto coords = vertex_to_coords(spec, v);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      int a = spec.cycle_lengths[i];
      coords[i] = (coords[i] + a / 2) % a;
    }
    perm[v] = coords_to_vertex(spec, coords);
  }
  return validate_automorphism(product_of_cycles(spec), std::move(perm));
}

Automorphism antipodal_map(int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("antipodal map: dimension out of [1,24]");
  int size = 1 << n;
  std::vector<int> perm(size);
  for (int v = 0; v < size; ++v) perm[v] = v ^ (size - 1);
  return validate_automorphism(hypercube(n), std::move(perm));
}

std::optional<std::pair<int, int>> automorphism_violation(const Graph& g,
                                                          const std::vector<int>& perm) {
  for (auto [u, v] : g.edges())
    if (!g.has_edge(perm[u], perm[v])) return std::pair{u, v};
  return std::nullopt;
}

Automorphism validate_automorphism(const Graph& g, std::vector<int> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("automorphism: size mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (int x : perm) {
    if (x < 0 || x >= g.vertex_count() || seen[x])
      throw std::invalid_argument("automorphism: not a permutation");
    seen[x] = 1;
  }
  if (auto bad = automorphism_violation(g, perm))
    throw std::invalid_argument("automorphism: edge {" + std::to_string(bad->first) +
                                "," + std::to_string(bad->second) +
                                "} is not preserved");
  return Automorphism(std::move(perm));
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.vertex_count())
    throw std::invalid_argument("bfs: source out of range");
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [w, id] : g.adjacent(u)) {
      (void)id;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("distance: vertex out of range");
  int d = bfs_distances(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> hypercube_dimension(const Graph& g) {
  int size = g.vertex_count();
  if (size < 2 || !std::has_single_bit(static_cast<unsigned>(size))) return std::nullopt;
  int n = std::countr_zero(static_cast<unsigned>(size));
  if (g.edge_count() != n * (size / 2)) return std::nullopt;
  for (auto [u, v] : g.edges())
    if (std::popcount(static_cast<unsigned>(u ^ v)) != 1) return std::nullopt;
  return n;
}

int edge_direction(int u, int v) {
  unsigned diff = static_cast<unsigned>(u ^ v);
  if (std::popcount(diff) != 1)
    throw std::invalid_argument("edge direction: endpoints differ in more than one bit");
  return std::countr_zero(diff);
}

}  // namespace swg
