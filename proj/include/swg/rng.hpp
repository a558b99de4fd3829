#pragma once

#include <cstdint>

namespace swg {

// SplitMix64.  Tiny, fast, and fully specified, so every sampled result in
// this project depends only on the seeds that appear in reports -- never on
// the standard library's distribution internals or on the platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1), 53 random bits
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [0,n), n > 0 (multiply-shift, no modulo bias worth caring about here)
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // uniform in [lo,hi] inclusive
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool next_bool(double p) { return next_double() < p; }
};

// Sub-seed for sample i of a seeded experiment.  Each sample derives its own
// generator from mix_seed(seed, i), which makes results independent of how
// samples are partitioned across worker threads.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  SplitMix64 g(seed ^ ((i + 1) * 0x9e3779b97f4a7c15ULL));
  return g.next();
}

}  // namespace swg
