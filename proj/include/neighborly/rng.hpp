#pragma once

#include <cstdint>

namespace neighborly {

/// SplitMix64. Deterministic across platforms; used for every sampled mode so
/// that a (seed, index) pair always reproduces the same draw regardless of
/// thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). Rejection-free modulo bias is acceptable only for
  /// tiny bounds; we use Lemire-style multiply-shift which is exact enough for
  /// desk-scale bounds (< 2^32).
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  bool coin() { return (next() >> 63) != 0; }

  /// Stateless stream: the i-th draw of a seeded sequence, independent of any
  /// generator object. Workers use this to stay deterministic under
  /// parallel scheduling.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed + index * 0x9e3779b97f4a7c15ULL);
    return g.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace neighborly
