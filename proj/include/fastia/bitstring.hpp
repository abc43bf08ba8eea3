#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fastia/random.hpp"

namespace fastia {

/// Fixed-length binary genotype. Position 0 is the first (leftmost) character
/// in the string form. Length never changes after construction.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitString random(std::size_t n, RandomSource& rng);
  static BitString from_string(std::string_view s);
  static BitString all_ones(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) noexcept {
    const std::uint64_t mask = 1ULL << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= 1ULL << (i & 63); }

  std::size_t count_ones() const noexcept;
  std::size_t count_zeros() const noexcept { return n_ - count_ones(); }

  /// Length of the maximal all-ones prefix.
  std::size_t leading_ones() const noexcept;

  BitString complemented() const;

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const BitString& a, const BitString& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BitString& a, const BitString& b) noexcept { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Copy of x with position i toggled. Throws std::out_of_range for bad i.
BitString flip_bit(const BitString& x, std::size_t i);

/// Number of differing positions. Throws std::invalid_argument on length mismatch.
std::size_t hamming(const BitString& x, const BitString& y);

}  // namespace fastia
