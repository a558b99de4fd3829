#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace swg {

// Undirected simple graph with a fixed edge numbering.  Edges are stored as
// (min,max) pairs sorted lexicographically and numbered 0..m-1.  Coloring
// files are plain arrays indexed by this numbering, so it is part of the
// on-disk contract and must never change.
class Graph {
 public:
  Graph() = default;

  // Canonicalizes, validates (no loops, no parallel edges, endpoints in range).
  static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::pair<int, int>& edge(int id) const { return edges_[id]; }

  // id of edge {u,v}; nullopt if not present
  std::optional<int> find_edge(int u, int v) const;
  // as above but throws std::invalid_argument when absent
  int edge_id(int u, int v) const;

  bool has_edge(int u, int v) const { return find_edge(u, v).has_value(); }

  // neighbors of u as (vertex, edge id), sorted by vertex
  const std::vector<std::pair<int, int>>& adjacent(int u) const { return adj_[u]; }

  int degree(int u) const { return static_cast<int>(adj_[u].size()); }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Cartesian product of cycles.  Vertex ids are mixed-radix with the first
// factor least significant: id = x1 + a1*(x2 + a2*(x3 + ...)).  A factor of
// length 2 degenerates to a single edge (K_2).
struct ProductSpec {
  std::vector<int> cycle_lengths;  // each >= 2
};

std::vector<int> vertex_to_coords(const ProductSpec& spec, int v);
int coords_to_vertex(const ProductSpec& spec, const std::vector<int>& coords);

// A vertex permutation known to preserve the edge set of the graph it was
// validated against.  Construct via validate_automorphism.
class Automorphism {
 public:
  int operator()(int v) const { return perm_[v]; }
  const std::vector<int>& perm() const { return perm_; }
  int size() const { return static_cast<int>(perm_.size()); }

 private:
  friend Automorphism validate_automorphism(const Graph& g, std::vector<int> perm);
  explicit Automorphism(std::vector<int> perm) : perm_(std::move(perm)) {}
  std::vector<int> perm_;
};

// --- constructors ---------------------------------------------------------

Graph cycle(int m);              // m >= 2; m == 2 is K_2
Graph hypercube(int n);          // 1 <= n <= 24; vertex id = coordinate bitmask
Graph product_of_cycles(const ProductSpec& spec);

// Maps every coordinate x_i to x_i + a_i/2 (mod a_i).  Requires all cycle
// lengths even (otherwise the farthest point is not unique); involution; the
// image is at distance sum(a_i)/2, the diameter.
Automorphism farthest_point_automorphism(const ProductSpec& spec);

// Bitwise complement x -> x ^ (2^n - 1) on the n-cube.
Automorphism antipodal_map(int n);

// --- queries ---------------------------------------------------------------

// nullopt if perm preserves all edges, otherwise one violating edge
std::optional<std::pair<int, int>> automorphism_violation(const Graph& g,
                                                          const std::vector<int>& perm);

// Throws std::invalid_argument (naming a violating edge) if perm is not a
// permutation or not edge-preserving.
Automorphism validate_automorphism(const Graph& g, std::vector<int> perm);

// BFS distance; nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, int u, int v);

// all BFS distances from source; -1 for unreachable
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

// Dimension n if g is exactly the n-cube produced by hypercube(n) (same ids,
// same edges); nullopt otherwise.
std::optional<int> hypercube_dimension(const Graph& g);

// Direction (bit index) of a hypercube edge; endpoints must differ in one bit.
int edge_direction(int u, int v);

}  // namespace swg
