#pragma once

#include <cstdint>
#include <vector>

#include "fastia/errors.hpp"
#include "fastia/random.hpp"

namespace fastia {

/// Discrete distribution over sizes 0..K with a precomputed cumulative table;
/// sampling is a binary search. Immutable after construction.
class DiscreteSizeTable {
 public:
  DiscreteSizeTable() = default;
  explicit DiscreteSizeTable(std::vector<double> probabilities);

  const std::vector<double>& probabilities() const { return prob_; }
  double probability(std::size_t size) const { return prob_[size]; }
  std::size_t max_size() const { return prob_.size() - 1; }

  std::size_t sample(RandomSource& rng) const;

 private:
  std::vector<double> prob_;
  std::vector<double> cum_;
};

std::size_t sample_size(const DiscreteSizeTable& table, RandomSource& rng);

/// Per-step evaluation probabilities of the parabolic scheme:
/// p_1 = p_n = 1/e and p_i = gamma / min(i, n-i) in between. Not a
/// distribution over sizes; the entries are independent coin biases.
struct ParabolicEvalDist {
  std::size_t n = 0;
  double gamma = 0.0;
  std::vector<double> step_prob;  // step_prob[i-1] is the bias after flip i

  double prob_at_step(std::size_t step) const { return step_prob[step - 1]; }
};

ParabolicEvalDist build_parabolic(std::size_t n, double gamma);

/// Symmetric power law over mutation sizes 0..n:
/// p_i proportional to (min(i+1, n-i+1))^-beta.
struct SymmetricPowerLawDist {
  std::size_t n = 0;
  double beta = 1.0;
  DiscreteSizeTable table;

  double probability(std::size_t size) const { return table.probability(size); }
  std::size_t sample(RandomSource& rng) const { return table.sample(rng); }
};

SymmetricPowerLawDist build_symmetric_powerlaw(std::size_t n, double beta);

/// Power law over mutation rates 1..upper, p(chi) proportional to chi^-beta;
/// upper is n/2 for the original operator and n for the extended one.
struct PowerLawRateDist {
  std::size_t n = 0;
  double beta = 1.5;
  std::size_t upper = 0;
  DiscreteSizeTable table;  // index 0 carries zero mass

  double probability(std::size_t size) const { return table.probability(size); }
  std::size_t sample(RandomSource& rng) const { return table.sample(rng); }
};

PowerLawRateDist build_powerlaw_rate(std::size_t n, double beta, bool extended);

/// Constant mass p1 on single-bit flips, uniform tail over 2..n.
struct UniformHeavyTailDist {
  std::size_t n = 0;
  double p1 = 0.0;
  DiscreteSizeTable table;  // index 0 carries zero mass

  double probability(std::size_t size) const { return table.probability(size); }
  std::size_t sample(RandomSource& rng) const { return table.sample(rng); }
};

UniformHeavyTailDist build_uniform_heavy_tail(std::size_t n, double p1);

/// Recommended defaults.
double default_gamma(std::size_t n);            // 1 / ln n
inline constexpr double kDefaultBeta = 1.5;
double default_uniform_tail_p1();               // 1 / e

}  // namespace fastia
