#pragma once

#include <cstdint>

namespace topomon {

/// SplitMix64 (Steele, Lea, Flood). Chosen because the whole sequence is a
/// pure function of the 64-bit state, so independent per-index streams can be
/// derived without consuming a shared generator: results never depend on
/// evaluation order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 bits of mantissa.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Seed for the index-th derived stream of a master seed. Defined as the
/// SplitMix64 output at state seed + index * gamma, i.e. the (index+1)-th
/// value of the master stream, computed directly so derivation is O(1) and
/// order-independent.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed + index * 0x9e3779b97f4a7c15ULL);
  return g.next();
}

}  // namespace topomon
