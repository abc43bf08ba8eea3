#pragma once

#include <cstdint>
#include <vector>

namespace fastia {

/// Counter-based splittable pseudo-random generator.
///
/// Output i of stream (seed, stream) is mix(key(seed, stream) ^ phi*i), so
/// identical (seed, stream) pairs give identical sequences on every platform
/// and distinct stream ids give statistically independent streams. Streams are
/// cheap to construct; sweeps use stream = replication index.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : seed_(seed), stream_(stream), key_(derive_key(seed, stream)) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next_u64() noexcept {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return mix64(counter_ ^ key_);
  }

  /// Uniform double in [0, 1).
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    // Lemire's multiply-shift with rejection; exact uniformity.
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  std::size_t next_index(std::size_t bound) noexcept {
    return static_cast<std::size_t>(next_below(static_cast<std::uint64_t>(bound)));
  }

  bool next_bernoulli(double p) noexcept { return next_double() < p; }

 private:
  static std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) noexcept {
    const std::uint64_t a = mix64(seed + 0x9e3779b97f4a7c15ULL);
    const std::uint64_t b = mix64(stream + 0x6a09e667f3bcc909ULL);
    return mix64(a ^ (b + 0xbb67ae8584caa73bULL));
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniformly random permutation of {0, ..., n-1} (Fisher-Yates).
std::vector<std::uint32_t> sample_flip_order(std::size_t n, RandomSource& rng);

}  // namespace fastia
