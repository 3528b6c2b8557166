// rng.hpp -- seeded pseudorandom streams and the ensemble seed-splitting rule.
#pragma once

#include <cstdint>
#include <random>

namespace qclock {

/// The i-th output (i >= 0) of the SplitMix64 sequence started at `seed`.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i);

/// Seed for the child stream of trajectory `index` under `master_seed`.
///
/// Splitting rule: child i uses splitmix64_at(master_seed, i). Two
/// trajectories of the same ensemble therefore never share a stream, and the
/// assignment depends only on (master_seed, index), never on scheduling.
std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t index);

/// A self-contained uniform/normal generator. We own the variate
/// transformations so that a given seed reproduces the same draws regardless
/// of the standard library in use.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform();

  /// Standard normal via the Marsaglia polar method (caches the spare).
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qclock
