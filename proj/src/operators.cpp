#include "fastia/operators.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace fastia {

namespace {

/// Shared walk of the sequential hypermutation operators: flips a uniformly
/// random order of all n positions, evaluating after flip i with probability
/// step_prob(i). First strict improvement over the parent stops the walk;
/// otherwise the last evaluated point is returned, or the unevaluated parent
/// when no evaluation happened. Flips toggle in place over a Fisher-Yates
/// prefix and are unwound to the last evaluated step, so one call costs O(n)
/// regardless of how many evaluations occur.
template <typename StepProb>
MutationOutcome sequential_hypermutation(const Individual& parent, const Problem& problem,
                                         StepProb&& step_prob, RandomSource& rng,
                                         EvaluationLedger& ledger) {
  const std::size_t n = parent.genotype.size();
  const Direction dir = problem.direction();

  static thread_local std::vector<std::uint32_t> order;
  order.resize(n);
  std::iota(order.begin(), order.end(), 0u);

  BitString point = parent.genotype;
  std::uint64_t evals = 0;
  std::size_t last_eval_step = 0;
  double last_eval_fitness = 0.0;
  bool improved = false;

  std::size_t step = 1;
  for (; step <= n; ++step) {
    const std::size_t j = (step - 1) + rng.next_index(n - step + 1);
    std::swap(order[step - 1], order[j]);
    point.flip(order[step - 1]);
    const double p = step_prob(step);
    if (p < 1.0 && !rng.next_bernoulli(p)) continue;
    const double fitness = evaluate_counted(problem, point, ledger);
    ++evals;
    last_eval_step = step;
    last_eval_fitness = fitness;
    if (fitness_better(fitness, parent.fitness, dir)) {
      improved = true;
      break;
    }
  }

  if (last_eval_step == 0)
    return MutationOutcome{Individual{parent.genotype, parent.fitness, parent.age}, 0, false,
                           false};

  for (std::size_t s = std::min(step, n); s > last_eval_step; --s) point.flip(order[s - 1]);
  return MutationOutcome{Individual{std::move(point), last_eval_fitness, parent.age}, evals,
                         improved, true};
}

/// Copy of x with k distinct uniformly random positions flipped.
BitString flip_k_distinct(const BitString& x, std::size_t k, RandomSource& rng) {
  const std::size_t n = x.size();
  BitString y = x;
  if (k == 0) return y;
  if (k == 1) {
    y.flip(rng.next_index(n));
    return y;
  }
  static thread_local std::vector<std::uint32_t> order;
  order.resize(n);
  std::iota(order.begin(), order.end(), 0u);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.next_index(n - i);
    std::swap(order[i], order[j]);
    y.flip(order[i]);
  }
  return y;
}

/// Copy of x where each position flips independently with the given rate,
/// via geometric gap sampling.
BitString flip_each_with_rate(const BitString& x, double rate, RandomSource& rng) {
  const std::size_t n = x.size();
  BitString y = x;
  if (rate <= 0.0) return y;
  if (rate >= 1.0) return x.complemented();
  const double log_keep = std::log1p(-rate);
  std::size_t i = 0;
  while (i < n) {
    const double u = 1.0 - rng.next_double();  // (0, 1]
    const double gap = std::floor(std::log(u) / log_keep);
    if (gap >= static_cast<double>(n - i)) break;
    i += static_cast<std::size_t>(gap);
    y.flip(i);
    ++i;
  }
  return y;
}

/// Evaluates a fully built offspring genotype: the single-evaluation tail
/// shared by all one-shot operators.
MutationOutcome evaluate_offspring(const Individual& parent, const Problem& problem,
                                   BitString offspring, EvaluationLedger& ledger) {
  const double fitness = evaluate_counted(problem, offspring, ledger);
  const bool improved = fitness_better(fitness, parent.fitness, problem.direction());
  return MutationOutcome{Individual{std::move(offspring), fitness, parent.age}, 1, improved,
                         true};
}

void check_dimension(const Individual& parent, std::size_t dist_n, const char* op) {
  if (parent.genotype.size() != dist_n)
    throw ConfigError(std::string(op) + ": distribution dimension does not match genotype");
}

}  // namespace

MutationOutcome fcm_gamma(const Individual& parent, const Problem& problem,
                          const ParabolicEvalDist& dist, RandomSource& rng,
                          EvaluationLedger& ledger) {
  check_dimension(parent, dist.n, "fcm_gamma");
  return sequential_hypermutation(
      parent, problem, [&dist](std::size_t step) { return dist.step_prob[step - 1]; }, rng,
      ledger);
}

MutationOutcome fcm_beta(const Individual& parent, const Problem& problem,
                         const SymmetricPowerLawDist& dist, RandomSource& rng,
                         EvaluationLedger& ledger) {
  check_dimension(parent, dist.n, "fcm_beta");
  const auto& p = dist.table.probabilities();
  return sequential_hypermutation(
      parent, problem, [&p](std::size_t step) { return p[step]; }, rng, ledger);
}

MutationOutcome hmp_beta(const Individual& parent, const Problem& problem,
                         const SymmetricPowerLawDist& dist, RandomSource& rng,
                         EvaluationLedger& ledger) {
  check_dimension(parent, dist.n, "hmp_beta");
  const std::size_t k = dist.sample(rng);
  return evaluate_offspring(parent, problem, flip_k_distinct(parent.genotype, k, rng), ledger);
}

MutationOutcome static_hmp_fcm(const Individual& parent, const Problem& problem,
                               RandomSource& rng, EvaluationLedger& ledger) {
  return sequential_hypermutation(
      parent, problem, [](std::size_t) { return 1.0; }, rng, ledger);
}

MutationOutcome static_hmp_plain(const Individual& parent, const Problem& problem,
                                 RandomSource& rng, EvaluationLedger& ledger) {
  (void)rng;
  return evaluate_offspring(parent, problem, parent.genotype.complemented(), ledger);
}

MutationOutcome sbm(const Individual& parent, const Problem& problem, double rate,
                    RandomSource& rng, EvaluationLedger& ledger) {
  if (rate < 0.0 || rate > 1.0) throw ConfigError("sbm: rate must lie in [0, 1]");
  return evaluate_offspring(parent, problem, flip_each_with_rate(parent.genotype, rate, rng),
                            ledger);
}

MutationOutcome rls_flip(const Individual& parent, const Problem& problem, RandomSource& rng,
                         EvaluationLedger& ledger) {
  return evaluate_offspring(parent, problem, flip_k_distinct(parent.genotype, 1, rng), ledger);
}

MutationOutcome ea_beta_mutation(const Individual& parent, const Problem& problem,
                                 const PowerLawRateDist& dist, EaBetaMode mode,
                                 RandomSource& rng, EvaluationLedger& ledger) {
  check_dimension(parent, dist.n, "ea_beta_mutation");
  const std::size_t chi = dist.sample(rng);
  BitString offspring =
      mode == EaBetaMode::rate
          ? flip_each_with_rate(parent.genotype,
                                static_cast<double>(chi) / static_cast<double>(dist.n), rng)
          : flip_k_distinct(parent.genotype, chi, rng);
  return evaluate_offspring(parent, problem, std::move(offspring), ledger);
}

MutationOutcome ea_unif_mutation(const Individual& parent, const Problem& problem,
                                 const UniformHeavyTailDist& dist, RandomSource& rng,
                                 EvaluationLedger& ledger) {
  check_dimension(parent, dist.n, "ea_unif_mutation");
  const std::size_t k = dist.sample(rng);
  return evaluate_offspring(parent, problem, flip_k_distinct(parent.genotype, k, rng), ledger);
}

const char* operator_kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::fcm_gamma: return "fcm-gamma";
    case OperatorKind::fcm_beta: return "fcm-beta";
    case OperatorKind::hmp_beta: return "hmp-beta";
    case OperatorKind::static_hmp_fcm: return "static-hmp-fcm";
    case OperatorKind::static_hmp_plain: return "static-hmp-plain";
    case OperatorKind::sbm: return "sbm";
    case OperatorKind::rls_flip: return "rls";
    case OperatorKind::ea_beta: return "ea-beta";
    case OperatorKind::ea_unif: return "ea-unif";
  }
  return "unknown";
}

MutationOperator::MutationOperator(const OperatorConfig& config, std::size_t n)
    : config_(config), n_(n) {
  if (n == 0) throw ConfigError("operator: dimension must be positive");
  switch (config_.kind) {
    case OperatorKind::fcm_gamma:
      gamma_ = config_.gamma.value_or(default_gamma(n));
      parabolic_ = build_parabolic(n, gamma_);
      break;
    case OperatorKind::fcm_beta:
    case OperatorKind::hmp_beta:
      beta_ = config_.beta.value_or(kDefaultBeta);
      symmetric_ = build_symmetric_powerlaw(n, beta_);
      break;
    case OperatorKind::ea_beta:
      beta_ = config_.beta.value_or(kDefaultBeta);
      rate_dist_ = build_powerlaw_rate(n, beta_, config_.ea_extended);
      break;
    case OperatorKind::ea_unif:
      p1_ = config_.p1.value_or(default_uniform_tail_p1());
      unif_dist_ = build_uniform_heavy_tail(n, p1_);
      break;
    case OperatorKind::sbm:
      rate_ = config_.sbm_rate.value_or(1.0 / static_cast<double>(n));
      if (rate_ < 0.0 || rate_ > 1.0) throw ConfigError("sbm: rate must lie in [0, 1]");
      break;
    case OperatorKind::static_hmp_fcm:
    case OperatorKind::static_hmp_plain:
    case OperatorKind::rls_flip:
      break;
  }
}

MutationOutcome MutationOperator::apply(const Individual& parent, const Problem& problem,
                                        RandomSource& rng, EvaluationLedger& ledger) const {
  switch (config_.kind) {
    case OperatorKind::fcm_gamma:
      return fcm_gamma(parent, problem, parabolic_, rng, ledger);
    case OperatorKind::fcm_beta:
      return fcm_beta(parent, problem, symmetric_, rng, ledger);
    case OperatorKind::hmp_beta:
      return hmp_beta(parent, problem, symmetric_, rng, ledger);
    case OperatorKind::static_hmp_fcm:
      return static_hmp_fcm(parent, problem, rng, ledger);
    case OperatorKind::static_hmp_plain:
      return static_hmp_plain(parent, problem, rng, ledger);
    case OperatorKind::sbm:
      return sbm(parent, problem, rate_, rng, ledger);
    case OperatorKind::rls_flip:
      return rls_flip(parent, problem, rng, ledger);
    case OperatorKind::ea_beta:
      return ea_beta_mutation(parent, problem, rate_dist_, config_.ea_mode, rng, ledger);
    case OperatorKind::ea_unif:
      return ea_unif_mutation(parent, problem, unif_dist_, rng, ledger);
  }
  throw ConfigError("operator: unknown kind");
}

}  // namespace fastia
