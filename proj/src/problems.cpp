#include "fastia/problems.hpp"

#include <bit>

namespace fastia {

double evaluate_counted(const Problem& problem, const BitString& x, EvaluationLedger& ledger) {
  if (ledger.count >= ledger.budget) throw BudgetExhausted(ledger.budget);
  const double fitness = problem.evaluate(x);
  ++ledger.count;
  if (ledger.observer) ledger.observer->on_evaluation(x, fitness, ledger.count);
  return fitness;
}

Individual make_random_individual(const Problem& problem, RandomSource& rng,
                                  EvaluationLedger& ledger) {
  return make_individual(problem, BitString::random(problem.dimension(), rng), ledger);
}

Individual make_individual(const Problem& problem, BitString genotype, EvaluationLedger& ledger) {
  const double fitness = evaluate_counted(problem, genotype, ledger);
  return Individual{std::move(genotype), fitness, 0};
}

Jump::Jump(std::size_t n, std::size_t d) : n_(n), d_(d) {
  if (d < 1 || d >= n) throw ConfigError("jump: gap size d must satisfy 1 <= d < n");
}

Cliff::Cliff(std::size_t n, std::size_t d) : n_(n), d_(d) {
  if (d < 1 || d >= n) throw ConfigError("cliff: gap size d must satisfy 1 <= d < n");
}

HiddenPath::HiddenPath(std::size_t n, double eps) : n_(n), eps_(eps) {
  if (!std::has_single_bit(n)) throw ConfigError("hiddenpath: n must be a power of two");
  log2n_ = static_cast<std::size_t>(std::bit_width(n) - 1);
  if (log2n_ < 5) throw ConfigError("hiddenpath: n must be at least 32");
  if (eps <= 0.0 || eps >= 1.0) throw ConfigError("hiddenpath: eps must lie in (0,1)");
}

bool HiddenPath::is_suffix_zero_point(const BitString& x, std::size_t k) const {
  // x already has exactly k zeros; enough to check the suffix is all zeros.
  for (std::size_t i = n_ - k; i < n_; ++i)
    if (x.test(i)) return false;
  return true;
}

double HiddenPath::evaluate(const BitString& x) const {
  const std::size_t zeros = x.count_zeros();
  if (zeros < 5 || zeros == n_) return 0.0;
  if (zeros >= 5 && zeros <= log2n_ + 1 && is_suffix_zero_point(x, zeros)) {
    // Path point 1^{n-k}0^k.
    return static_cast<double>(n_) - eps_ +
           eps_ * static_cast<double>(zeros) / static_cast<double>(log2n_);
  }
  if (zeros == 5) {
    std::size_t trailing = 0;
    for (std::size_t i = n_ - 5; i < n_; ++i)
      if (!x.test(i)) ++trailing;
    return static_cast<double>(n_) - eps_ +
           static_cast<double>(trailing) / static_cast<double>(n_);
  }
  if (zeros == n_ - 1) return static_cast<double>(n_);
  return static_cast<double>(zeros);
}

bool HiddenPath::is_target(const BitString& x, double) const {
  const std::size_t k = log2n_ + 1;
  if (x.count_zeros() != k) return false;
  return is_suffix_zero_point(x, k);
}

BitString HiddenPath::optimum() const {
  BitString x = BitString::all_ones(n_);
  for (std::size_t i = n_ - (log2n_ + 1); i < n_; ++i) x.set(i, false);
  return x;
}

}  // namespace fastia
