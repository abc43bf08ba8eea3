#pragma once

#include <cstdint>
#include <limits>

#include "fastia/bitstring.hpp"

namespace fastia {

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

/// Receives every counted objective evaluation, in order.
class EvaluationObserver {
 public:
  virtual ~EvaluationObserver() = default;
  virtual void on_evaluation(const BitString& x, double fitness, std::uint64_t index) = 0;
};

/// Counts objective calls against an optional budget. Every evaluation,
/// including initialisation and mid-hypermutation samples, increments count
/// by exactly one; count never exceeds budget.
struct EvaluationLedger {
  std::uint64_t count = 0;
  std::uint64_t budget = kUnlimitedBudget;
  EvaluationObserver* observer = nullptr;  // not owned, may be null

  bool exhausted() const noexcept { return count >= budget; }
};

/// Genotype plus cached fitness and age. The cache is kept coherent by
/// construction: fitness is always the objective value of genotype.
struct Individual {
  BitString genotype;
  double fitness = 0.0;
  std::uint64_t age = 0;
};

}  // namespace fastia
