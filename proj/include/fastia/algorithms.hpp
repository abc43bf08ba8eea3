#pragma once

#include <optional>
#include <vector>

#include "fastia/operators.hpp"

namespace fastia {

inline constexpr std::uint64_t kNoAgeing = std::numeric_limits<std::uint64_t>::max();

/// Hybrid ageing parameters. The default removal probability follows the
/// population structure: p_die = 1 - 1/((dup+1)*mu), recomputed from the
/// current mu and dup unless explicitly overridden.
struct AgeingConfig {
  std::uint64_t tau = kNoAgeing;
  std::size_t mu = 1;
  std::size_t dup = 1;
  std::optional<double> p_die_override;

  double p_die() const {
    if (p_die_override) return *p_die_override;
    return 1.0 - 1.0 / (static_cast<double>(dup + 1) * static_cast<double>(mu));
  }
};

enum class EngineKind { one_plus_one, opt_ia };

struct RunConfig {
  OperatorConfig op;
  EngineKind engine = EngineKind::one_plus_one;
  AgeingConfig ageing;  // used by the opt_ia engine
  std::uint64_t budget = kUnlimitedBudget;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::optional<BitString> initial;  // fixed start instead of uniform random
};

/// One replication's outcome. Bests refer to evaluated points, whether or not
/// selection kept them; success means the target predicate held for some
/// evaluated point within budget.
struct RunRecord {
  std::optional<std::uint64_t> evaluations_to_target;
  std::uint64_t generations = 0;
  bool success = false;
  double best_fitness = 0.0;
  std::uint64_t best_first_hit_evaluation = 0;
  std::uint64_t evaluations_used = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Evaluation observer that maintains best-so-far and target-hit data for a
/// single run. Installed on the run's ledger by the engines.
class RunTracker final : public EvaluationObserver {
 public:
  explicit RunTracker(const Problem& problem) : problem_(&problem) {}

  void on_evaluation(const BitString& x, double fitness, std::uint64_t index) override {
    track_best(x, fitness, index);
  }

  /// Folds one evaluated point into the record-in-progress.
  void track_best(const BitString& x, double fitness, std::uint64_t index) {
    if (!any_ || fitness_better(fitness, best_fitness_, problem_->direction())) {
      any_ = true;
      best_fitness_ = fitness;
      best_first_hit_ = index;
    }
    if (!target_hit_at_ && problem_->is_target(x, fitness)) target_hit_at_ = index;
  }

  bool target_hit() const { return target_hit_at_.has_value(); }
  std::optional<std::uint64_t> target_hit_at() const { return target_hit_at_; }
  double best_fitness() const { return best_fitness_; }
  std::uint64_t best_first_hit() const { return best_first_hit_; }

 private:
  const Problem* problem_;
  bool any_ = false;
  double best_fitness_ = 0.0;
  std::uint64_t best_first_hit_ = 0;
  std::optional<std::uint64_t> target_hit_at_;
};

/// Elitist (1+1) loop: uniform random start, offspring replaces the current
/// solution when not worse. Stops on target evaluation or budget exhaustion.
RunRecord run_one_plus_one(const Problem& problem, const RunConfig& config, RandomSource& rng);

/// Generational Opt-IA loop: age increment, cloning, hypermutation of every
/// clone, merge, hybrid ageing, random fill, then truncation to the mu best.
RunRecord run_opt_ia(const Problem& problem, const RunConfig& config, RandomSource& rng);

/// Dispatches on config.engine with a RandomSource built from (seed, stream).
RunRecord run(const Problem& problem, const RunConfig& config);

/// Removes each member of age >= tau independently with probability p_die;
/// younger members always survive.
std::vector<Individual> apply_hybrid_ageing(std::vector<Individual> population,
                                            const AgeingConfig& config, RandomSource& rng);

/// One Opt-IA generation, in this exact order: age increment, cloning,
/// hypermutation of every clone (age 0 on strict improvement, else
/// inherited), merge, hybrid ageing, random fill back to mu, truncation to
/// the mu best with uniform tie-breaking.
void opt_ia_generation(std::vector<Individual>& population, const MutationOperator& op,
                       const Problem& problem, const AgeingConfig& config, RandomSource& rng,
                       EvaluationLedger& ledger);

}  // namespace fastia
