#include "swg/component_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace swg {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

int ComponentGraph::red_count() const {
  int r = 0;
  while (r < vertex_count() && vertices[r].color == Color::Red) ++r;
  return r;
}

int ComponentGraph::component_of(int base_vertex, Color c) const {
  const auto& pair = vertex_to_components.at(base_vertex);
  return c == Color::Red ? pair.first : pair.second;
}

ComponentGraph build_component_graph(const Graph& g, const EdgeColoring& c) {
  check_coloring(g, c);
  int n = g.vertex_count();

  ComponentGraph cg;
  cg.base_vertex_count = n;
  cg.vertex_to_components.assign(n, {-1, -1});

  for (Color color : {Color::Red, Color::Blue}) {
    UnionFind uf(n);
    for (int e = 0; e < g.edge_count(); ++e)
      if (c.at(e) == color) uf.unite(g.edge(e).first, g.edge(e).second);

    // components in order of smallest member (find() roots are minimal)
    std::vector<int> comp_id(n, -1);
    for (int v = 0; v < n; ++v) {
      int root = uf.find(v);
      if (comp_id[root] < 0) {
        comp_id[root] = cg.vertex_count();
        cg.vertices.push_back({comp_id[root], color, {}});
      }
      cg.vertices[comp_id[root]].members.push_back(v);
      if (color == Color::Red)
        cg.vertex_to_components[v].first = comp_id[root];
      else
        cg.vertex_to_components[v].second = comp_id[root];
    }
  }

  // every base vertex witnesses the adjacency of its red and blue component
  for (int v = 0; v < n; ++v) cg.edges.push_back(cg.vertex_to_components[v]);
  std::sort(cg.edges.begin(), cg.edges.end());
  cg.edges.erase(std::unique(cg.edges.begin(), cg.edges.end()), cg.edges.end());

  cg.adj.assign(cg.vertex_count(), {});
  for (auto [a, b] : cg.edges) {
    cg.adj[a].push_back(b);
    cg.adj[b].push_back(a);
  }
  for (auto& nb : cg.adj) std::sort(nb.begin(), nb.end());
  return cg;
}

std::vector<int> image_component_set(const ComponentGraph& cg, const Automorphism& phi,
                                     int a) {
  if (a < 0 || a >= cg.vertex_count())
    throw std::invalid_argument("image component set: meta-vertex out of range");
  if (phi.size() != cg.base_vertex_count)
    throw std::invalid_argument("image component set: automorphism size mismatch");
  std::vector<int> out;
  for (int x : cg.vertices[a].members) {
    int y = phi(x);
    out.push_back(cg.vertex_to_components[y].first);
    out.push_back(cg.vertex_to_components[y].second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> meta_distances(const ComponentGraph& cg, int a) {
  if (a < 0 || a >= cg.vertex_count())
    throw std::invalid_argument("meta distance: vertex out of range");
  std::vector<int> dist(cg.vertex_count(), -1);
  std::deque<int> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : cg.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::optional<int> meta_distance(const ComponentGraph& cg, int a, int b) {
  if (b < 0 || b >= cg.vertex_count())
    throw std::invalid_argument("meta distance: vertex out of range");
  int d = meta_distances(cg, a)[b];
  if (d < 0) return std::nullopt;
  return d;
}

bool is_tree(const ComponentGraph& cg) {
  if (cg.vertex_count() == 0) return true;
  auto dist = meta_distances(cg, 0);
  bool connected = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
  return connected && cg.edge_count() == cg.vertex_count() - 1;
}

namespace {

// Exhaustive longest-cycle search: simple paths whose smallest vertex is the
// start, recording closures back to the start.
struct CycleSearch {
  const ComponentGraph& cg;
  std::int64_t budget;
  bool exhausted = false;
  std::vector<char> in_path;
  std::vector<int> path;
  std::vector<int> best;

  explicit CycleSearch(const ComponentGraph& g, std::int64_t b)
      : cg(g), budget(b), in_path(g.vertex_count(), 0) {}

  void dfs(int u, int start) {
    if (--budget < 0) {
      exhausted = true;
      return;
    }
    for (int w : cg.adj[u]) {
      if (exhausted) return;
      if (w == start && path.size() >= 3 && path.size() > best.size()) best = path;
      if (w <= start || in_path[w]) continue;
      in_path[w] = 1;
      path.push_back(w);
      dfs(w, start);
      path.pop_back();
      in_path[w] = 0;
    }
  }

  void run() {
    for (int s = 0; s < cg.vertex_count() && !exhausted; ++s) {
      in_path[s] = 1;
      path = {s};
      dfs(s, s);
      in_path[s] = 0;
    }
  }
};

bool has_any_cycle(const ComponentGraph& cg) {
  UnionFind uf(cg.vertex_count());
  for (auto [a, b] : cg.edges) {
    if (uf.find(a) == uf.find(b)) return true;
    uf.unite(a, b);
  }
  return false;
}

}  // namespace

LongestCycleResult longest_cycle_length(const ComponentGraph& cg,
                                        std::int64_t node_budget) {
  if (!has_any_cycle(cg)) return {LongestCycleResult::Kind::Acyclic, 0, {}};
  CycleSearch search(cg, node_budget);
  search.run();
  LongestCycleResult res;
  res.kind = search.exhausted ? LongestCycleResult::Kind::LowerBound
                              : LongestCycleResult::Kind::Exact;
  res.length = static_cast<int>(search.best.size());
  res.cycle = std::move(search.best);
  return res;
}

namespace {

// Backtracking over chordless paths rooted at their minimum vertex.  A path
// v0..vt extends with w > v0 adjacent to vt and to no other path vertex; if w
// is also adjacent to v0 (and to nothing else on the path), v0..vt,w closes
// an induced cycle.
struct InducedSearch {
  const ComponentGraph& cg;
  int min_len;
  std::int64_t budget;
  bool exhausted = false;
  bool found = false;
  std::vector<char> in_path;
  std::vector<int> path;
  std::vector<int> best;

  InducedSearch(const ComponentGraph& g, int target, std::int64_t b)
      : cg(g), min_len(target), budget(b), in_path(g.vertex_count(), 0) {}

  bool adjacent(int u, int v) const {
    const auto& nb = cg.adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  void dfs() {
    if (--budget < 0) {
      exhausted = true;
      return;
    }
    int tail = path.back();
    int start = path.front();
    for (int w : cg.adj[tail]) {
      if (exhausted || found) return;
      if (w < start || in_path[w]) continue;
      if (path.size() == 1) {  // no chord possible yet
        extend(w);
        continue;
      }
      bool internal_chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !internal_chord; ++i)
        internal_chord = adjacent(w, path[i]);
      if (internal_chord) continue;
      if (adjacent(w, start)) {
        // closes v0..vt,w; an induced cycle when it has >= 4 vertices
        if (path.size() >= 3) {
          if (path.size() + 1 > best.size()) {
            best = path;
            best.push_back(w);
          }
          if (static_cast<int>(path.size()) + 1 >= min_len) {
            found = true;
            return;
          }
        }
        continue;  // extending past w would keep the chord to start
      }
      extend(w);
    }
  }

  void extend(int w) {
    in_path[w] = 1;
    path.push_back(w);
    dfs();
    path.pop_back();
    in_path[w] = 0;
  }

  void run() {
    for (int s = 0; s < cg.vertex_count() && !exhausted && !found; ++s) {
      in_path[s] = 1;
      path = {s};
      dfs();
      in_path[s] = 0;
    }
  }
};

}  // namespace

InducedCycleResult longest_induced_cycle(const ComponentGraph& cg, int min_len,
                                         std::int64_t node_budget) {
  if (min_len < 4)
    throw std::invalid_argument("induced cycle search: minimum length is 4");
  InducedSearch search(cg, min_len, node_budget);
  search.run();
  InducedCycleResult res;
  if (search.found) {
    res.kind = InducedCycleResult::Kind::Found;
    res.cycle = std::move(search.best);
  } else if (search.exhausted) {
    res.kind = InducedCycleResult::Kind::BudgetExhausted;
    res.cycle = std::move(search.best);
  } else {
    res.kind = InducedCycleResult::Kind::NotFound;
  }
  return res;
}

std::string export_dot(const ComponentGraph& cg) {
  std::ostringstream out;
  out << "graph components {\n";
  int reds = cg.red_count();
  for (const auto& mv : cg.vertices) {
    int per_color_index = mv.color == Color::Red ? mv.id : mv.id - reds;
    out << "  n" << mv.id << " [label=\"" << color_char(mv.color) << per_color_index
        << "(" << mv.members.size() << ")\"];\n";
  }
  for (auto [a, b] : cg.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace swg
