#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swg/coloring.hpp"
#include "swg/graph.hpp"
#include "swg/switch_paths.hpp"

namespace swg {

struct VerificationReport {
  std::string instance;  // human description of graph + map
  std::string mode;      // "exhaustive" or "sampled(samples=..., seed=...)"
  std::int64_t cases_checked = 0;
  std::int64_t cases_relevant = 0;  // cases the property applied to
  int worst_case_switches = -1;
  std::string worst_case_coloring;  // color string of an extremal coloring
  std::vector<std::string> violations;
  double runtime_seconds = 0.0;
};

// max over all 2^m colorings (enumerated in canonical edge order) of the best
// switch count over the orbit pairs (u, phi(u)); also returns one extremal
// coloring.  Requires edge_count <= 24 and a connected graph.
struct ExhaustiveDResult {
  int d = 0;
  EdgeColoring extremal;
  std::int64_t colorings = 0;
};

ExhaustiveDResult exhaustive_d(const Graph& g, const Automorphism& phi);

// Random-coloring estimate of the same maximum.  Sample 0 is the all-red
// coloring (worst case at least 0); sample i > 0 uses mix_seed(seed, i), so
// the outcome is independent of the worker count.  When `bound` is given,
// every sampled coloring with objective > bound is recorded as a violation.
VerificationReport sampled_d(const Graph& g, const Automorphism& phi,
                             std::int64_t samples, std::uint64_t seed,
                             std::optional<int> bound = std::nullopt, int workers = 1);

// fraction of all 2^m colorings of Q_n whose component graph is a tree (n <= 3)
double exhaustive_tree_fraction(int n);

// sampled fraction of p=1/2 colorings of Q_n with tree component graph (n <= 14)
double tree_fraction_experiment(int n, std::int64_t samples, std::uint64_t seed,
                                int workers = 1);

// Monte Carlo estimate of P(random subgraph of Q_n with edge probability p is
// connected), counting all 2^n vertices (n <= 16).
double connectivity_experiment(int n, double p, std::int64_t samples,
                               std::uint64_t seed, int workers = 1);

struct AverageSwitchReport {
  double mean = 0.0;                         // over connected orbit pairs
  std::map<int, std::int64_t> histogram;     // switch count -> vertices
  std::int64_t disconnected_pairs = 0;
};

// exact distribution of min_switches(u, phi(u)) over all vertices u
AverageSwitchReport average_switch_experiment(const Graph& g, const EdgeColoring& c,
                                              const Automorphism& phi);

// Enumerates every coloring of Q_n (n <= 3), filters the simple ones (no
// properly colored 4-cycle), and checks each: some antipodal pair joined
// monochromatically, and the component graph is a tree.
VerificationReport simple_coloring_suite(int n);

}  // namespace swg
