#include "fastia/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace fastia {

BitString BitString::random(std::size_t n, RandomSource& rng) {
  BitString x(n);
  for (auto& w : x.words_) w = rng.next_u64();
  if (n & 63) x.words_.back() &= (1ULL << (n & 63)) - 1;
  return x;
}

BitString BitString::from_string(std::string_view s) {
  BitString x(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      x.set(i, true);
    else if (s[i] != '0')
      throw std::invalid_argument("bit string may contain only '0' and '1'");
  }
  return x;
}

BitString BitString::all_ones(std::size_t n) {
  BitString x(n);
  for (auto& w : x.words_) w = ~0ULL;
  if (n & 63) x.words_.back() &= (1ULL << (n & 63)) - 1;
  return x;
}

std::size_t BitString::count_ones() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitString::leading_ones() const noexcept {
  std::size_t c = 0;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    const std::size_t valid = (wi + 1) * 64 <= n_ ? 64 : (n_ & 63);
    const std::uint64_t mask = valid == 64 ? ~0ULL : (1ULL << valid) - 1;
    const std::uint64_t w = words_[wi] & mask;
    if (w == mask) {
      c += valid;
    } else {
      c += static_cast<std::size_t>(std::countr_one(w));
      break;
    }
  }
  return c;
}

BitString BitString::complemented() const {
  BitString x(n_);
  for (std::size_t wi = 0; wi < words_.size(); ++wi) x.words_[wi] = ~words_[wi];
  if (n_ & 63) x.words_.back() &= (1ULL << (n_ & 63)) - 1;
  return x;
}

std::string BitString::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

BitString flip_bit(const BitString& x, std::size_t i) {
  if (i >= x.size()) throw std::out_of_range("flip_bit: position out of range");
  BitString y = x;
  y.flip(i);
  return y;
}

std::size_t hamming(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) throw std::invalid_argument("hamming: length mismatch");
  std::size_t d = 0;
  for (std::size_t wi = 0; wi < x.words().size(); ++wi)
    d += static_cast<std::size_t>(std::popcount(x.words()[wi] ^ y.words()[wi]));
  return d;
}

}  // namespace fastia
