#include "swg/switch_paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace swg {

int count_switches(const std::vector<Color>& colors) {
  int s = 0;
  for (std::size_t i = 1; i < colors.size(); ++i)
    if (colors[i] != colors[i - 1]) ++s;
  return s;
}

bool is_valid_switch_path(const Graph& g, const EdgeColoring& c, const SwitchPath& p) {
  if (p.vertices.empty()) return false;
  if (p.colors.size() + 1 != p.vertices.size()) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    auto e = g.find_edge(p.vertices[i], p.vertices[i + 1]);
    if (!e || c.at(*e) != p.colors[i]) return false;
  }
  return p.switches == count_switches(p.colors);
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// 0/1 BFS over (vertex, last edge color) states; both colors of the source
// are free starts, so the first edge never counts as a change.
struct ZeroOneBfs {
  std::vector<int> dist;
  std::vector<int> parent;    // previous state, -1 at the source
  std::vector<int> via_edge;  // edge taken into this state

  ZeroOneBfs(const Graph& g, const EdgeColoring& c, int source) {
    int states = 2 * g.vertex_count();
    dist.assign(states, kInf);
    parent.assign(states, -1);
    via_edge.assign(states, -1);
    std::vector<char> done(states, 0);
    std::deque<int> queue;
    for (int col = 0; col < 2; ++col) {
      dist[2 * source + col] = 0;
      queue.push_back(2 * source + col);
    }
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      if (done[s]) continue;
      done[s] = 1;
      int v = s / 2;
      Color last = static_cast<Color>(s % 2);
      for (auto [w, e] : g.adjacent(v)) {
        Color ec = c.at(e);
        int cost = ec != last ? 1 : 0;
        int ns = 2 * w + static_cast<int>(ec);
        if (dist[s] + cost < dist[ns]) {
          dist[ns] = dist[s] + cost;
          parent[ns] = s;
          via_edge[ns] = e;
          if (cost == 0)
            queue.push_front(ns);
          else
            queue.push_back(ns);
        }
      }
    }
  }

  // best state at vertex v (ties toward red) or -1 if unreachable
  int best_state(int v) const {
    int r = 2 * v, b = 2 * v + 1;
    if (dist[r] >= kInf && dist[b] >= kInf) return -1;
    return dist[b] < dist[r] ? b : r;
  }

  SwitchPath extract(const Graph& g, const EdgeColoring& c, int state) const {
    SwitchPath p;
    std::vector<int> edges;
    while (via_edge[state] >= 0) {
      edges.push_back(via_edge[state]);
      state = parent[state];
    }
    std::reverse(edges.begin(), edges.end());
    p.vertices.push_back(state / 2);
    for (int e : edges) {
      auto [a, b] = g.edge(e);
      p.vertices.push_back(p.vertices.back() == a ? b : a);
      p.colors.push_back(c.at(e));
    }
    p.switches = count_switches(p.colors);
    return p;
  }
};

}  // namespace

std::optional<SwitchPath> min_switches(const Graph& g, const EdgeColoring& c, int u,
                                       int v) {
  check_coloring(g, c);
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("min switches: vertex out of range");
  if (u == v) return SwitchPath{{u}, {}, 0};
  ZeroOneBfs bfs(g, c, u);
  int state = bfs.best_state(v);
  if (state < 0) return std::nullopt;
  return bfs.extract(g, c, state);
}

std::optional<OrbitObjectiveResult> orbit_objective(const Graph& g,
                                                    const EdgeColoring& c,
                                                    const Automorphism& phi) {
  check_coloring(g, c);
  if (phi.size() != g.vertex_count())
    throw std::invalid_argument("orbit objective: automorphism size mismatch");
  std::optional<OrbitObjectiveResult> best;
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto p = min_switches(g, c, u, phi(u));
    if (!p) continue;
    if (!best || p->switches < best->best_switches) {
      best = OrbitObjectiveResult{p->switches, u, std::move(*p)};
      if (best->best_switches == 0) break;
    }
  }
  return best;
}

namespace {

// path of base vertices from s to t inside one monochromatic component
std::optional<std::vector<int>> mono_path(const Graph& g, const EdgeColoring& c,
                                          Color col, int s, int t) {
  std::vector<int> parent(g.vertex_count(), -2);
  parent[s] = -1;
  std::deque<int> queue{s};
  while (!queue.empty() && parent[t] == -2) {
    int u = queue.front();
    queue.pop_front();
    for (auto [w, e] : g.adjacent(u))
      if (c.at(e) == col && parent[w] == -2) {
        parent[w] = u;
        queue.push_back(w);
      }
  }
  if (parent[t] == -2) return std::nullopt;
  std::vector<int> path;
  for (int x = t; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// meta BFS with parent tracking (deterministic: ascending neighbor order)
struct MetaBfs {
  std::vector<int> dist, parent;

  MetaBfs(const ComponentGraph& cg, int source)
      : dist(cg.vertex_count(), -1), parent(cg.vertex_count(), -1) {
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : cg.adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
    }
  }
};

// Unit-capacity max-flow, just enough for the one-vs-two disjoint path
// question: vertices split into in/out halves, BFS augmentation.
struct SplitFlow {
  struct Edge {
    int to, cap, rev;
  };
  std::vector<std::vector<Edge>> adj;

  explicit SplitFlow(int nodes) : adj(nodes) {}

  void add_edge(int from, int to, int cap) {
    adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
    adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
  }

  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> pred(adj.size(), {-1, -1});  // node, edge index
    pred[s] = {s, -1};
    std::deque<int> queue{s};
    while (!queue.empty() && pred[t].first < 0) {
      int u = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < adj[u].size(); ++i) {
        const Edge& e = adj[u][i];
        if (e.cap > 0 && pred[e.to].first < 0) {
          pred[e.to] = {u, static_cast<int>(i)};
          queue.push_back(e.to);
        }
      }
    }
    if (pred[t].first < 0) return false;
    for (int v = t; v != s;) {
      auto [u, i] = pred[v];
      adj[u][i].cap -= 1;
      adj[adj[u][i].to][adj[u][i].rev].cap += 1;
      v = u;
    }
    return true;
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(adj.size(), 0);
    seen[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const Edge& e : adj[u])
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          queue.push_back(e.to);
        }
    }
    return seen;
  }
};

std::vector<int> shared_members(const MetaVertex& a, const MetaVertex& b) {
  std::vector<int> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(out));
  return out;
}

// witness path along the meta-path: hop between junction vertices, walking
// monochromatically inside each component
std::optional<SwitchPath> stitch_path(const Graph& g, const EdgeColoring& c,
                                      const ComponentGraph& cg,
                                      const std::vector<int>& meta_path, int u,
                                      int target) {
  SwitchPath out;
  out.vertices.push_back(u);
  int at = u;
  for (std::size_t j = 0; j < meta_path.size(); ++j) {
    const MetaVertex& comp = cg.vertices[meta_path[j]];
    int goal;
    if (j + 1 < meta_path.size()) {
      auto junction = shared_members(comp, cg.vertices[meta_path[j + 1]]);
      if (junction.empty()) return std::nullopt;
      goal = junction.front();
    } else {
      goal = target;
    }
    auto seg = mono_path(g, c, comp.color, at, goal);
    if (!seg) return std::nullopt;
    for (std::size_t i = 1; i < seg->size(); ++i) {
      out.vertices.push_back((*seg)[i]);
      out.colors.push_back(comp.color);
    }
    at = goal;
  }
  out.switches = count_switches(out.colors);
  return out;
}

}  // namespace

TheoremWitnessResult theorem_witness(const Graph& g, const EdgeColoring& c,
                                     const Automorphism& phi, int k,
                                     std::int64_t cycle_budget) {
  check_coloring(g, c);
  if (k < 0) throw std::invalid_argument("theorem witness: k must be >= 0");
  if (phi.size() != g.vertex_count())
    throw std::invalid_argument("theorem witness: automorphism size mismatch");
  if (!is_connected(g))
    throw std::invalid_argument("theorem witness: graph must be connected");

  ComponentGraph cg = build_component_graph(g, c);

  auto longest = longest_cycle_length(cg, cycle_budget);
  if (longest.length >= 2 * k + 3)  // even a lower bound proves the violation
    return HypothesisViolated{std::move(longest.cycle)};
  if (longest.kind == LongestCycleResult::Kind::LowerBound)
    return WitnessFailure{"cycle search budget exhausted before the hypothesis "
                          "could be established",
                          {}};

  // start from the component with the most members (ties: lowest id)
  int a = 0;
  for (int i = 1; i < cg.vertex_count(); ++i)
    if (cg.vertices[i].members.size() > cg.vertices[a].members.size()) a = i;

  std::vector<WitnessStep> trace;
  std::vector<char> prev_region;
  // X shrinks strictly each round, so vertex_count rounds always suffice
  for (int round = 0; round <= cg.vertex_count(); ++round) {
    MetaBfs bfs(cg, a);
    auto image = image_component_set(cg, phi, a);

    WitnessStep step{a, 0, static_cast<int>(image.size()), 0, 0, -1};
    for (int d : bfs.dist)
      if (d >= 0 && d <= k) ++step.ball_size;

    // success: ball meets image set
    int target_comp = -1;
    for (int b : image) {
      if (bfs.dist[b] < 0 || bfs.dist[b] > k) continue;
      if (target_comp < 0 || bfs.dist[b] < bfs.dist[target_comp]) target_comp = b;
    }
    if (target_comp >= 0) {
      std::vector<int> meta_path;
      for (int x = target_comp; x != -1; x = bfs.parent[x]) meta_path.push_back(x);
      std::reverse(meta_path.begin(), meta_path.end());

      int u = -1;
      for (int x : cg.vertices[a].members) {
        int y = phi(x);
        if (cg.vertex_to_components[y].first == target_comp ||
            cg.vertex_to_components[y].second == target_comp) {
          u = x;
          break;
        }
      }
      trace.push_back(step);
      if (u < 0)
        return WitnessFailure{"image member missing from target component", trace};
      auto path = stitch_path(g, c, cg, meta_path, u, phi(u));
      if (!path || !is_valid_switch_path(g, c, *path) || path->switches > k ||
          path->vertices.front() != u || path->vertices.back() != phi(u))
        return WitnessFailure{"stitched path failed validation", trace};
      return Witness{u, std::move(*path)};
    }

    // region X: component of the ball complement containing the image set
    std::vector<char> region(cg.vertex_count(), 0);
    {
      std::deque<int> queue{image.front()};
      region[image.front()] = 1;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int w : cg.adj[x])
          if (!region[w] && (bfs.dist[w] < 0 || bfs.dist[w] > k)) {
            region[w] = 1;
            queue.push_back(w);
          }
      }
    }
    for (int s : image)
      if (!region[s]) {
        trace.push_back(step);
        return WitnessFailure{"image set split across regions", trace};
      }
    step.region_size = static_cast<int>(std::count(region.begin(), region.end(), 1));

    if (!prev_region.empty()) {
      bool subset = true, strict = false;
      for (int x = 0; x < cg.vertex_count(); ++x) {
        if (region[x] && !prev_region[x]) subset = false;
        if (!region[x] && prev_region[x]) strict = true;
      }
      if (!subset || !strict) {
        trace.push_back(step);
        return WitnessFailure{"region failed to shrink", trace};
      }
    }
    prev_region = region;

    // frontier H: region vertices adjacent to the ball
    std::vector<int> frontier;
    for (int x = 0; x < cg.vertex_count(); ++x)
      if (region[x] && bfs.dist[x] == k + 1) frontier.push_back(x);
    step.frontier_size = static_cast<int>(frontier.size());
    if (frontier.empty()) {
      trace.push_back(step);
      return WitnessFailure{"empty frontier", trace};
    }

    // Menger: a single vertex must separate a from the frontier.  Flow network
    // on the meta-graph restricted to the (k+1)-ball, unit vertex capacities.
    std::vector<int> node_index(cg.vertex_count(), -1);
    std::vector<int> nodes;
    for (int x = 0; x < cg.vertex_count(); ++x)
      if (bfs.dist[x] >= 0 && bfs.dist[x] <= k + 1) {
        node_index[x] = static_cast<int>(nodes.size());
        nodes.push_back(x);
      }
    int count = static_cast<int>(nodes.size());
    SplitFlow flow(2 * count + 1);
    int sink = 2 * count;
    auto in_node = [&](int x) { return 2 * node_index[x]; };
    auto out_node = [&](int x) { return 2 * node_index[x] + 1; };
    for (int x : nodes) flow.add_edge(in_node(x), out_node(x), x == a ? kInf : 1);
    for (int x : nodes)
      for (int w : cg.adj[x])
        if (node_index[w] >= 0) flow.add_edge(out_node(x), in_node(w), kInf);
    for (int h : frontier) flow.add_edge(out_node(h), sink, kInf);

    if (!flow.augment(out_node(a), sink)) {
      trace.push_back(step);
      return WitnessFailure{"frontier unreachable in flow network", trace};
    }
    if (flow.augment(out_node(a), sink)) {
      trace.push_back(step);
      return WitnessFailure{"two vertex-disjoint paths to the frontier exist "
                            "(cycle hypothesis should have excluded this)",
                            trace};
    }
    auto reach = flow.residual_reachable(out_node(a));
    int cut = -1;
    for (int x : nodes)
      if (reach[in_node(x)] && !reach[out_node(x)]) {
        if (cut >= 0) {
          trace.push_back(step);
          return WitnessFailure{"min cut is not a single vertex", trace};
        }
        cut = x;
      }
    if (cut < 0) {
      trace.push_back(step);
      return WitnessFailure{"no cut vertex found despite unit max-flow", trace};
    }
    step.cut_vertex = cut;
    trace.push_back(step);

    // move the center one step toward the cut vertex
    int next = cut;
    while (bfs.parent[next] != a) next = bfs.parent[next];
    a = next;
  }
  return WitnessFailure{"iteration limit exceeded", trace};
}

SwitchPath geodesic_min_switches(const Graph& g, const EdgeColoring& c, int u) {
  check_coloring(g, c);
  auto dim = hypercube_dimension(g);
  if (!dim) throw std::invalid_argument("geodesic switches: graph is not a hypercube");
  int n = *dim;
  if (n > 20) throw std::invalid_argument("geodesic switches: dimension > 20");
  if (u < 0 || u >= g.vertex_count())
    throw std::invalid_argument("geodesic switches: vertex out of range");

  // 0/1 BFS over (set of flipped directions, last color); masks only grow, so
  // every accepted walk is a shortest u -> antipode path.
  int full = (1 << n) - 1;
  int states = 2 * (1 << n);
  std::vector<int> dist(states, kInf), parent(states, -1), via_dir(states, -1);
  std::vector<char> done(states, 0);
  std::deque<int> queue;
  for (int col = 0; col < 2; ++col) {
    dist[col] = 0;  // mask 0
    queue.push_back(col);
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    if (done[s]) continue;
    done[s] = 1;
    int mask = s / 2;
    Color last = static_cast<Color>(s % 2);
    int at = u ^ mask;
    for (int d = 0; d < n; ++d) {
      if (mask & (1 << d)) continue;
      Color ec = c.at(g.edge_id(at, at ^ (1 << d)));
      int cost = ec != last ? 1 : 0;
      int ns = 2 * (mask | (1 << d)) + static_cast<int>(ec);
      if (dist[s] + cost < dist[ns]) {
        dist[ns] = dist[s] + cost;
        parent[ns] = s;
        via_dir[ns] = d;
        if (cost == 0)
          queue.push_front(ns);
        else
          queue.push_back(ns);
      }
    }
  }
  int state = dist[2 * full + 1] < dist[2 * full] ? 2 * full + 1 : 2 * full;
  std::vector<int> dirs;
  for (int s = state; via_dir[s] >= 0; s = parent[s]) dirs.push_back(via_dir[s]);
  std::reverse(dirs.begin(), dirs.end());

  SwitchPath p;
  p.vertices.push_back(u);
  for (int d : dirs) {
    int at = p.vertices.back();
    p.vertices.push_back(at ^ (1 << d));
    p.colors.push_back(c.at(g.edge_id(at, at ^ (1 << d))));
  }
  p.switches = count_switches(p.colors);
  return p;
}

}  // namespace swg
