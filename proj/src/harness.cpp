#include "swg/harness.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "swg/component_graph.hpp"
#include "swg/rng.hpp"

namespace swg {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Deterministic map-reduce over sample indices [0, total): workers process
// contiguous chunks, results merge in chunk order, and every per-sample
// computation derives its randomness from mix_seed, so the outcome does not
// depend on the worker count.
template <class State, class PerSample, class Merge>
State parallel_samples(std::int64_t total, int workers, const PerSample& per_sample,
                       const Merge& merge) {
  workers = static_cast<int>(
      std::max<std::int64_t>(1, std::min<std::int64_t>(workers, std::max<std::int64_t>(total, 1))));
  std::vector<State> partial(workers);
  std::vector<std::thread> threads;
  std::int64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::int64_t lo = w * chunk, hi = std::min(total, (w + 1) * chunk);
    threads.emplace_back([&, w, lo, hi] {
      for (std::int64_t i = lo; i < hi; ++i) per_sample(i, partial[w]);
    });
  }
  for (auto& t : threads) t.join();
  State out;
  for (State& p : partial) merge(out, p);
  return out;
}

}  // namespace

ExhaustiveDResult exhaustive_d(const Graph& g, const Automorphism& phi) {
  if (g.edge_count() > 24)
    throw std::invalid_argument("exhaustive search: more than 24 edges");
  if (!is_connected(g))
    throw std::invalid_argument("exhaustive search: graph must be connected");
  ExhaustiveDResult res;
  res.colorings = std::int64_t{1} << g.edge_count();
  res.extremal = coloring_from_bits(g, 0);
  res.d = -1;
  for (std::int64_t bits = 0; bits < res.colorings; ++bits) {
    EdgeColoring c = coloring_from_bits(g, static_cast<std::uint64_t>(bits));
    auto obj = orbit_objective(g, c, phi);
    if (obj && obj->best_switches > res.d) {
      res.d = obj->best_switches;
      res.extremal = std::move(c);
    }
  }
  return res;
}

VerificationReport sampled_d(const Graph& g, const Automorphism& phi,
                             std::int64_t samples, std::uint64_t seed,
                             std::optional<int> bound, int workers) {
  if (samples < 1) throw std::invalid_argument("sampled search: need at least one sample");
  auto t0 = std::chrono::steady_clock::now();

  struct State {
    int worst = -1;
    std::string worst_coloring;
    std::vector<std::string> violations;
    std::int64_t checked = 0;
  };
  auto per_sample = [&](std::int64_t i, State& st) {
    EdgeColoring c = i == 0 ? monochromatic_coloring(g, Color::Red)
                            : random_coloring(g, 0.5, mix_seed(seed, static_cast<std::uint64_t>(i)));
    auto obj = orbit_objective(g, c, phi);
    st.checked += 1;
    if (!obj) return;
    if (obj->best_switches > st.worst) {
      st.worst = obj->best_switches;
      st.worst_coloring = c.to_string();
    }
    if (bound && obj->best_switches > *bound)
      st.violations.push_back("sample " + std::to_string(i) + ": objective " +
                              std::to_string(obj->best_switches) + " > bound " +
                              std::to_string(*bound) + " coloring " + c.to_string());
  };
  auto merge = [](State& out, State& p) {
    if (p.worst > out.worst) {
      out.worst = p.worst;
      out.worst_coloring = std::move(p.worst_coloring);
    }
    out.checked += p.checked;
    out.violations.insert(out.violations.end(), p.violations.begin(), p.violations.end());
  };
  State st = parallel_samples<State>(samples, workers, per_sample, merge);

  VerificationReport rep;
  rep.instance = "graph(n=" + std::to_string(g.vertex_count()) +
                 ",m=" + std::to_string(g.edge_count()) + ")";
  rep.mode = "sampled(samples=" + std::to_string(samples) + ", seed=" + std::to_string(seed) + ")";
  rep.cases_checked = st.checked;
  rep.cases_relevant = st.checked;
  rep.worst_case_switches = st.worst;
  rep.worst_case_coloring = std::move(st.worst_coloring);
  rep.violations = std::move(st.violations);
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

double exhaustive_tree_fraction(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("exhaustive tree fraction: n must be in [1,3]");
  Graph g = hypercube(n);
  std::int64_t total = std::int64_t{1} << g.edge_count();
  std::int64_t trees = 0;
  for (std::int64_t bits = 0; bits < total; ++bits)
    if (is_tree(build_component_graph(g, coloring_from_bits(g, static_cast<std::uint64_t>(bits)))))
      ++trees;
  return static_cast<double>(trees) / static_cast<double>(total);
}

double tree_fraction_experiment(int n, std::int64_t samples, std::uint64_t seed,
                                int workers) {
  if (n < 1 || n > 14) throw std::invalid_argument("tree fraction: n must be in [1,14]");
  if (samples < 1) throw std::invalid_argument("tree fraction: need at least one sample");
  Graph g = hypercube(n);
  struct State {
    std::int64_t trees = 0;
  };
  auto st = parallel_samples<State>(
      samples, workers,
      [&](std::int64_t i, State& s) {
        EdgeColoring c = random_coloring(g, 0.5, mix_seed(seed, static_cast<std::uint64_t>(i)));
        if (is_tree(build_component_graph(g, c))) s.trees += 1;
      },
      [](State& out, State& p) { out.trees += p.trees; });
  return static_cast<double>(st.trees) / static_cast<double>(samples);
}

double connectivity_experiment(int n, double p, std::int64_t samples,
                               std::uint64_t seed, int workers) {
  if (n < 1 || n > 16) throw std::invalid_argument("connectivity: n must be in [1,16]");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("connectivity: p outside [0,1]");
  if (samples < 1) throw std::invalid_argument("connectivity: need at least one sample");
  Graph g = hypercube(n);

  struct State {
    std::int64_t connected = 0;
  };
  auto st = parallel_samples<State>(
      samples, workers,
      [&](std::int64_t i, State& s) {
        SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        // union-find over kept edges; connected iff one class remains
        std::vector<int> parent(g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
          while (parent[x] != x) x = parent[x] = parent[parent[x]];
          return x;
        };
        int classes = g.vertex_count();
        for (auto [u, v] : g.edges())
          if (rng.next_bool(p)) {
            int ru = find(u), rv = find(v);
            if (ru != rv) {
              parent[std::max(ru, rv)] = std::min(ru, rv);
              --classes;
            }
          }
        if (classes == 1) s.connected += 1;
      },
      [](State& out, State& p2) { out.connected += p2.connected; });
  return static_cast<double>(st.connected) / static_cast<double>(samples);
}

AverageSwitchReport average_switch_experiment(const Graph& g, const EdgeColoring& c,
                                              const Automorphism& phi) {
  check_coloring(g, c);
  if (phi.size() != g.vertex_count())
    throw std::invalid_argument("average switches: automorphism size mismatch");
  AverageSwitchReport rep;
  std::int64_t sum = 0, counted = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto p = min_switches(g, c, u, phi(u));
    if (!p) {
      rep.disconnected_pairs += 1;
      continue;
    }
    rep.histogram[p->switches] += 1;
    sum += p->switches;
    counted += 1;
  }
  rep.mean = counted == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(counted);
  return rep;
}

VerificationReport simple_coloring_suite(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("simple coloring suite: n must be in [1,3]");
  auto t0 = std::chrono::steady_clock::now();
  Graph g = hypercube(n);
  Automorphism phi = antipodal_map(n);

  VerificationReport rep;
  rep.instance = "Q_" + std::to_string(n) + ", antipodal map, simple colorings";
  rep.mode = "exhaustive";
  std::int64_t total = std::int64_t{1} << g.edge_count();
  for (std::int64_t bits = 0; bits < total; ++bits) {
    EdgeColoring c = coloring_from_bits(g, static_cast<std::uint64_t>(bits));
    rep.cases_checked += 1;
    if (!is_simple(g, c)) continue;
    rep.cases_relevant += 1;
    auto obj = orbit_objective(g, c, phi);
    if (!obj || obj->best_switches != 0)
      rep.violations.push_back("coloring " + c.to_string() +
                               ": no monochromatic antipodal pair");
    else if (obj->best_switches > rep.worst_case_switches) {
      rep.worst_case_switches = obj->best_switches;
      rep.worst_case_coloring = c.to_string();
    }
    if (!is_tree(build_component_graph(g, c)))
      rep.violations.push_back("coloring " + c.to_string() +
                               ": component graph is not a tree");
  }
  rep.runtime_seconds = seconds_since(t0);
  return rep;
}

}  // namespace swg
