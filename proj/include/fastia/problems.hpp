#pragma once

#include <memory>
#include <string>

#include "fastia/bitstring.hpp"
#include "fastia/errors.hpp"
#include "fastia/ledger.hpp"

namespace fastia {

enum class Direction { maximise, minimise };

/// Strictly better in the problem's direction.
inline bool fitness_better(double candidate, double reference, Direction d) noexcept {
  return d == Direction::maximise ? candidate > reference : candidate < reference;
}

/// At least as good in the problem's direction.
inline bool fitness_no_worse(double candidate, double reference, Direction d) noexcept {
  return d == Direction::maximise ? candidate >= reference : candidate <= reference;
}

/// Objective interface. evaluate() is pure and deterministic; implementations
/// are immutable after construction and safe for concurrent evaluation.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::size_t dimension() const = 0;
  virtual Direction direction() const { return Direction::maximise; }
  virtual double evaluate(const BitString& x) const = 0;
  virtual bool is_target(const BitString& x, double fitness) const = 0;
  virtual std::string descriptor() const = 0;
};

/// Evaluates x against the ledger: throws BudgetExhausted instead of exceeding
/// the budget, increments count by exactly one and notifies the observer.
double evaluate_counted(const Problem& problem, const BitString& x, EvaluationLedger& ledger);

/// Evaluates a fresh uniformly random individual with age 0.
Individual make_random_individual(const Problem& problem, RandomSource& rng,
                                  EvaluationLedger& ledger);

/// Evaluates a given genotype into an individual with age 0.
Individual make_individual(const Problem& problem, BitString genotype, EvaluationLedger& ledger);

// --- unitation / prefix benchmarks -----------------------------------------

class OneMax final : public Problem {
 public:
  explicit OneMax(std::size_t n) : n_(n) {}
  std::size_t dimension() const override { return n_; }
  double evaluate(const BitString& x) const override {
    return static_cast<double>(x.count_ones());
  }
  bool is_target(const BitString&, double fitness) const override {
    return fitness >= static_cast<double>(n_);
  }
  std::string descriptor() const override { return "onemax-" + std::to_string(n_); }

 private:
  std::size_t n_;
};

class LeadingOnes final : public Problem {
 public:
  explicit LeadingOnes(std::size_t n) : n_(n) {}
  std::size_t dimension() const override { return n_; }
  double evaluate(const BitString& x) const override {
    return static_cast<double>(x.leading_ones());
  }
  bool is_target(const BitString&, double fitness) const override {
    return fitness >= static_cast<double>(n_);
  }
  std::string descriptor() const override { return "leadingones-" + std::to_string(n_); }

 private:
  std::size_t n_;
};

/// OneMax everywhere except that the optimum sits at 0^n with value n+1.
class Trap final : public Problem {
 public:
  explicit Trap(std::size_t n) : n_(n) {}
  std::size_t dimension() const override { return n_; }
  double evaluate(const BitString& x) const override {
    const std::size_t ones = x.count_ones();
    if (ones == 0) return static_cast<double>(n_ + 1);
    return static_cast<double>(ones);
  }
  bool is_target(const BitString&, double fitness) const override {
    return fitness >= static_cast<double>(n_ + 1);
  }
  std::string descriptor() const override { return "trap-" + std::to_string(n_); }

 private:
  std::size_t n_;
};

/// d + |x|_1 outside the gap, n - |x|_1 inside it; unique optimum at 1^n.
class Jump final : public Problem {
 public:
  Jump(std::size_t n, std::size_t d);
  std::size_t dimension() const override { return n_; }
  double evaluate(const BitString& x) const override {
    const std::size_t ones = x.count_ones();
    if (ones <= n_ - d_ || ones == n_) return static_cast<double>(d_ + ones);
    return static_cast<double>(n_ - ones);
  }
  bool is_target(const BitString&, double fitness) const override {
    return fitness >= static_cast<double>(n_ + d_);
  }
  std::string descriptor() const override {
    return "jump-" + std::to_string(n_) + "-d" + std::to_string(d_);
  }

 private:
  std::size_t n_, d_;
};

/// |x|_1 up to the cliff edge; past it, |x|_1 - d + 1/2. Unique optimum at 1^n.
class Cliff final : public Problem {
 public:
  Cliff(std::size_t n, std::size_t d);
  std::size_t dimension() const override { return n_; }
  double evaluate(const BitString& x) const override {
    const std::size_t ones = x.count_ones();
    if (ones <= n_ - d_) return static_cast<double>(ones);
    return static_cast<double>(ones) - static_cast<double>(d_) + 0.5;
  }
  bool is_target(const BitString&, double fitness) const override {
    return fitness >= static_cast<double>(n_) - static_cast<double>(d_) + 0.5;
  }
  std::string descriptor() const override {
    return "cliff-" + std::to_string(n_) + "-d" + std::to_string(d_);
  }

 private:
  std::size_t n_, d_;
};

/// ZeroMax gradient to the n-1 zeros plateau, a hidden path of suffix-zero
/// points 1^{n-k}0^k for 5 <= k <= log2(n)+1, and a secondary gradient on the
/// five-zeros level rewarding zeros among the last five positions.
/// Requires n a power of two with log2(n) >= 5.
class HiddenPath final : public Problem {
 public:
  explicit HiddenPath(std::size_t n, double eps = 0.5);
  std::size_t dimension() const override { return n_; }
  double evaluate(const BitString& x) const override;
  bool is_target(const BitString& x, double fitness) const override;
  std::string descriptor() const override { return "hiddenpath-" + std::to_string(n_); }

  std::size_t log2n() const { return log2n_; }
  /// The path end 1^{n-(log2 n + 1)} 0^{log2 n + 1}, the unique optimum.
  BitString optimum() const;

 private:
  /// True for 1^{n-k}0^k given that x has exactly k zeros.
  bool is_suffix_zero_point(const BitString& x, std::size_t k) const;

  std::size_t n_;
  std::size_t log2n_;
  double eps_;
};

}  // namespace fastia
