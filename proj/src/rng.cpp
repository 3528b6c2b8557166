#include "qclock/rng.hpp"

#include <cmath>

namespace qclock {

namespace {
constexpr std::uint64_t kSplitMixIncrement = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += kSplitMixIncrement);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t state = seed + i * kSplitMixIncrement;
  return splitmix64_next(state);
}

std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t index) {
  return splitmix64_at(master_seed, index);
}

double RandomStream::uniform() {
  // 53-bit mantissa, offset by half an ulp so the result stays inside (0, 1).
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * factor;
  has_spare_ = true;
  return u * factor;
}

}  // namespace qclock
