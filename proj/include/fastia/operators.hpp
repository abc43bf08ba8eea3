#pragma once

#include <optional>
#include <string>

#include "fastia/distributions.hpp"
#include "fastia/ledger.hpp"
#include "fastia/problems.hpp"

namespace fastia {

/// Result of one mutation operator application. evals_used is exactly the
/// ledger increment caused by the call; improved means the offspring is
/// strictly better than the parent in the problem's direction; evaluated is
/// false only when the operator returned the parent untouched.
struct MutationOutcome {
  Individual offspring;
  std::uint64_t evals_used = 0;
  bool improved = false;
  bool evaluated = true;
};

enum class OperatorKind {
  fcm_gamma,        // parabolic stochastic-evaluation hypermutation
  fcm_beta,         // symmetric power-law stochastic-evaluation hypermutation
  hmp_beta,         // symmetric power-law single-sample hypermutation
  static_hmp_fcm,   // deterministic evaluation after every flip
  static_hmp_plain, // flip all n bits, evaluate once
  sbm,              // standard bit mutation
  rls_flip,         // single uniform bit flip
  ea_beta,          // heavy-tailed power-law rate mutation
  ea_unif,          // uniform heavy-tailed mutation
};

enum class EaBetaMode { rate, exact_k };

/// Parameters for any operator kind. Unset optionals bind the recommended
/// defaults at construction time: gamma = 1/ln n, beta = 1.5, p1 = 1/e,
/// rate = 1/n. The hypermutation potential constant c is fixed at 1 (all n
/// bits may flip).
struct OperatorConfig {
  static constexpr double mutation_potential_c = 1.0;

  OperatorKind kind = OperatorKind::fcm_gamma;
  std::optional<double> gamma;
  std::optional<double> beta;
  std::optional<double> p1;
  std::optional<double> sbm_rate;
  EaBetaMode ea_mode = EaBetaMode::rate;
  bool ea_extended = false;
};

const char* operator_kind_name(OperatorKind kind);

// Individual operator contracts. Every operator draws its randomness from rng
// and routes every objective call through the ledger.

/// Walks a uniformly random flip order, evaluating after flip i with
/// probability dist.p_i; stops at the first strict improvement over the
/// parent, otherwise returns the last evaluated point, or the unevaluated
/// parent when no evaluation happened.
MutationOutcome fcm_gamma(const Individual& parent, const Problem& problem,
                          const ParabolicEvalDist& dist, RandomSource& rng,
                          EvaluationLedger& ledger);

/// Same walk as fcm_gamma with per-step evaluation probability dist.p[i].
MutationOutcome fcm_beta(const Individual& parent, const Problem& problem,
                         const SymmetricPowerLawDist& dist, RandomSource& rng,
                         EvaluationLedger& ledger);

/// Samples a mutation size from the symmetric power law, flips that many
/// distinct positions and evaluates exactly once (size 0 evaluates a copy).
MutationOutcome hmp_beta(const Individual& parent, const Problem& problem,
                         const SymmetricPowerLawDist& dist, RandomSource& rng,
                         EvaluationLedger& ledger);

/// Deterministic evaluation after every flip; returns the complement when no
/// improvement is found.
MutationOutcome static_hmp_fcm(const Individual& parent, const Problem& problem,
                               RandomSource& rng, EvaluationLedger& ledger);

/// Flips all n bits and evaluates the complement once.
MutationOutcome static_hmp_plain(const Individual& parent, const Problem& problem,
                                 RandomSource& rng, EvaluationLedger& ledger);

/// Flips each position independently with the given rate; evaluates once.
MutationOutcome sbm(const Individual& parent, const Problem& problem, double rate,
                    RandomSource& rng, EvaluationLedger& ledger);

/// Flips exactly one uniformly random position; evaluates once.
MutationOutcome rls_flip(const Individual& parent, const Problem& problem, RandomSource& rng,
                         EvaluationLedger& ledger);

/// Samples chi from the power law; flips each bit with probability chi/n
/// (rate mode) or exactly chi distinct bits (exact-k mode); evaluates once.
MutationOutcome ea_beta_mutation(const Individual& parent, const Problem& problem,
                                 const PowerLawRateDist& dist, EaBetaMode mode,
                                 RandomSource& rng, EvaluationLedger& ledger);

/// Samples a size from the uniform heavy tail and flips exactly that many
/// distinct bits; evaluates once.
MutationOutcome ea_unif_mutation(const Individual& parent, const Problem& problem,
                                 const UniformHeavyTailDist& dist, RandomSource& rng,
                                 EvaluationLedger& ledger);

/// An operator bound to a problem dimension: distribution tables are built
/// once and shared. Stateless across calls; safe for concurrent use with
/// per-worker rng and ledger.
class MutationOperator {
 public:
  MutationOperator(const OperatorConfig& config, std::size_t n);

  MutationOutcome apply(const Individual& parent, const Problem& problem, RandomSource& rng,
                        EvaluationLedger& ledger) const;

  OperatorKind kind() const { return config_.kind; }
  const OperatorConfig& config() const { return config_; }

  /// Resolved numeric parameters, for reporting.
  double gamma() const { return gamma_; }
  double beta() const { return beta_; }
  double p1() const { return p1_; }
  double rate() const { return rate_; }

 private:
  OperatorConfig config_;
  std::size_t n_;
  double gamma_ = 0.0, beta_ = 0.0, p1_ = 0.0, rate_ = 0.0;
  ParabolicEvalDist parabolic_;
  SymmetricPowerLawDist symmetric_;
  PowerLawRateDist rate_dist_;
  UniformHeavyTailDist unif_dist_;
};

}  // namespace fastia
