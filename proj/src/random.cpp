#include "fastia/random.hpp"

#include <numeric>

namespace fastia {

std::vector<std::uint32_t> sample_flip_order(std::size_t n, RandomSource& rng) {
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t j = i + rng.next_index(n - i);
    std::swap(order[i], order[j]);
  }
  return order;
}

}  // namespace fastia
