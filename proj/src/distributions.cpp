#include "fastia/distributions.hpp"

#include <algorithm>
#include <cmath>

namespace fastia {

DiscreteSizeTable::DiscreteSizeTable(std::vector<double> probabilities)
    : prob_(std::move(probabilities)), cum_(prob_.size()) {
  double acc = 0.0;
  for (std::size_t i = 0; i < prob_.size(); ++i) {
    acc += prob_[i];
    cum_[i] = acc;
  }
  cum_.back() = 1.0;  // guard against rounding at the top end
}

std::size_t DiscreteSizeTable::sample(RandomSource& rng) const {
  const double u = rng.next_double();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  return static_cast<std::size_t>(it - cum_.begin());
}

std::size_t sample_size(const DiscreteSizeTable& table, RandomSource& rng) {
  return table.sample(rng);
}

ParabolicEvalDist build_parabolic(std::size_t n, double gamma) {
  if (n < 1) throw ConfigError("parabolic distribution: n must be at least 1");
  if (!(gamma > 0.0) || gamma > 1.0)
    throw ConfigError("parabolic distribution: gamma must lie in (0, 1]");
  ParabolicEvalDist dist;
  dist.n = n;
  dist.gamma = gamma;
  dist.step_prob.resize(n);
  const double inv_e = 1.0 / std::exp(1.0);
  dist.step_prob[0] = inv_e;
  dist.step_prob[n - 1] = inv_e;  // steps 1 and n coincide when n == 1
  for (std::size_t i = 2; i < n; ++i)
    dist.step_prob[i - 1] = gamma / static_cast<double>(std::min(i, n - i));
  return dist;
}

SymmetricPowerLawDist build_symmetric_powerlaw(std::size_t n, double beta) {
  if (n < 1) throw ConfigError("symmetric power law: n must be at least 1");
  if (beta < 1.0) throw ConfigError("symmetric power law: beta must be at least 1");
  std::vector<double> weight(n + 1);
  double norm = 0.0;
  // Fill symmetrically so p[i] == p[n-i] holds exactly.
  for (std::size_t i = 0; i <= n - i; ++i) {
    const double w = std::pow(static_cast<double>(i + 1), -beta);
    weight[i] = w;
    weight[n - i] = w;
  }
  for (double w : weight) norm += w;
  for (double& w : weight) w /= norm;
  SymmetricPowerLawDist dist;
  dist.n = n;
  dist.beta = beta;
  dist.table = DiscreteSizeTable(std::move(weight));
  return dist;
}

PowerLawRateDist build_powerlaw_rate(std::size_t n, double beta, bool extended) {
  if (n < 2) throw ConfigError("power law rate: n must be at least 2");
  if (!(beta > 1.0)) throw ConfigError("power law rate: beta must be greater than 1");
  const std::size_t upper = extended ? n : n / 2;
  std::vector<double> weight(upper + 1, 0.0);
  double norm = 0.0;
  for (std::size_t chi = 1; chi <= upper; ++chi) {
    weight[chi] = std::pow(static_cast<double>(chi), -beta);
    norm += weight[chi];
  }
  for (double& w : weight) w /= norm;
  PowerLawRateDist dist;
  dist.n = n;
  dist.beta = beta;
  dist.upper = upper;
  dist.table = DiscreteSizeTable(std::move(weight));
  return dist;
}

UniformHeavyTailDist build_uniform_heavy_tail(std::size_t n, double p1) {
  if (n < 2) throw ConfigError("uniform heavy tail: n must be at least 2");
  if (!(p1 > 0.0) || !(p1 < 1.0))
    throw ConfigError("uniform heavy tail: p1 must lie in (0, 1)");
  std::vector<double> weight(n + 1, 0.0);
  weight[1] = p1;
  const double tail = (1.0 - p1) / static_cast<double>(n - 1);
  for (std::size_t i = 2; i <= n; ++i) weight[i] = tail;
  UniformHeavyTailDist dist;
  dist.n = n;
  dist.p1 = p1;
  dist.table = DiscreteSizeTable(std::move(weight));
  return dist;
}

double default_gamma(std::size_t n) {
  if (n < 1) throw ConfigError("default gamma needs n >= 1");
  // 1/ln n exceeds 1 below n = 3; clamp so tiny dimensions stay a valid bias.
  if (n < 3) return 1.0;
  return 1.0 / std::log(static_cast<double>(n));
}

double default_uniform_tail_p1() { return 1.0 / std::exp(1.0); }

}  // namespace fastia
