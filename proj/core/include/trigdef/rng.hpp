#pragma once

#include <cstdint>

namespace trigdef {

// SplitMix64 (Steele-Lea-Flood). Frozen: generated witnesses are part of the
// reproducible output of this project, so the algorithm must never change.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], rejection sampled (no modulo bias).
  long uniform_int(long lo, long hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = range * (~std::uint64_t{0} / range);
    std::uint64_t u;
    do {
      u = next();
    } while (u >= limit);
    return lo + static_cast<long>(u % range);
  }

 private:
  std::uint64_t state_;
};

// Independent deterministic substream: seed XOR tag pushed through the
// SplitMix64 finalizer once.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t tag) {
  SplitMix64 g(seed ^ (tag * 0xA24BAED4963EE407ull));
  return SplitMix64(g.next());
}

}  // namespace trigdef
