#include "fastia/algorithms.hpp"

#include <algorithm>

namespace fastia {

namespace {

RunRecord finalise(const RunTracker& tracker, const EvaluationLedger& ledger,
                   std::uint64_t generations, const RunConfig& config) {
  RunRecord record;
  record.generations = generations;
  record.success = tracker.target_hit();
  record.evaluations_to_target = tracker.target_hit_at();
  record.best_fitness = tracker.best_fitness();
  record.best_first_hit_evaluation = tracker.best_first_hit();
  record.evaluations_used = ledger.count;
  record.seed = config.seed;
  record.stream = config.stream;
  return record;
}

Individual make_initial(const Problem& problem, const RunConfig& config, RandomSource& rng,
                        EvaluationLedger& ledger) {
  if (config.initial) {
    if (config.initial->size() != problem.dimension())
      throw ConfigError("run: initial point dimension does not match problem");
    return make_individual(problem, *config.initial, ledger);
  }
  return make_random_individual(problem, rng, ledger);
}

}  // namespace

RunRecord run_one_plus_one(const Problem& problem, const RunConfig& config, RandomSource& rng) {
  const MutationOperator op(config.op, problem.dimension());
  EvaluationLedger ledger;
  ledger.budget = config.budget;
  RunTracker tracker(problem);
  ledger.observer = &tracker;

  std::uint64_t generations = 0;
  try {
    Individual current = make_initial(problem, config, rng, ledger);
    while (!tracker.target_hit()) {
      MutationOutcome outcome = op.apply(current, problem, rng, ledger);
      ++generations;
      if (outcome.evaluated &&
          fitness_no_worse(outcome.offspring.fitness, current.fitness, problem.direction()))
        current = std::move(outcome.offspring);
    }
  } catch (const BudgetExhausted&) {
    // Truncated run; the tracker has already seen every evaluation.
  }
  return finalise(tracker, ledger, generations, config);
}

std::vector<Individual> apply_hybrid_ageing(std::vector<Individual> population,
                                            const AgeingConfig& config, RandomSource& rng) {
  if (config.tau == kNoAgeing) return population;
  const double p_die = config.p_die();
  std::vector<Individual> survivors;
  survivors.reserve(population.size());
  for (auto& member : population) {
    if (member.age >= config.tau && rng.next_bernoulli(p_die)) continue;
    survivors.push_back(std::move(member));
  }
  return survivors;
}

void opt_ia_generation(std::vector<Individual>& population, const MutationOperator& op,
                       const Problem& problem, const AgeingConfig& config, RandomSource& rng,
                       EvaluationLedger& ledger) {
  // (1) age increment before cloning, so clones inherit the new age
  for (auto& member : population) ++member.age;

  // (2)+(3) clone dup times and hypermutate every clone; a mutant's age
  // resets to zero only on strict improvement over its parent
  std::vector<Individual> mutants;
  mutants.reserve(population.size() * config.dup);
  for (const auto& parent : population) {
    for (std::size_t d = 0; d < config.dup; ++d) {
      MutationOutcome outcome = op.apply(parent, problem, rng, ledger);
      outcome.offspring.age = outcome.improved ? 0 : parent.age;
      mutants.push_back(std::move(outcome.offspring));
    }
  }

  // (4) merge
  for (auto& mutant : mutants) population.push_back(std::move(mutant));

  // (5) hybrid ageing
  population = apply_hybrid_ageing(std::move(population), config, rng);

  // (6) refill with fresh random individuals of age zero
  while (population.size() < config.mu)
    population.push_back(make_random_individual(problem, rng, ledger));

  // (7) keep the mu best, ties broken uniformly at random: a uniform shuffle
  // followed by a stable sort on fitness
  if (population.size() > config.mu) {
    for (std::size_t i = 0; i + 1 < population.size(); ++i) {
      const std::size_t j = i + rng.next_index(population.size() - i);
      std::swap(population[i], population[j]);
    }
    std::stable_sort(population.begin(), population.end(),
                     [&problem](const Individual& a, const Individual& b) {
                       return fitness_better(a.fitness, b.fitness, problem.direction());
                     });
    population.resize(config.mu);
  }
}

RunRecord run_opt_ia(const Problem& problem, const RunConfig& config, RandomSource& rng) {
  const AgeingConfig& ageing = config.ageing;
  if (ageing.mu < 1 || ageing.dup < 1)
    throw ConfigError("opt-ia: mu and dup must be at least 1");
  const MutationOperator op(config.op, problem.dimension());
  EvaluationLedger ledger;
  ledger.budget = config.budget;
  RunTracker tracker(problem);
  ledger.observer = &tracker;

  std::uint64_t generations = 0;
  try {
    std::vector<Individual> population;
    population.reserve(ageing.mu * (ageing.dup + 1));
    for (std::size_t i = 0; i < ageing.mu && !tracker.target_hit(); ++i)
      population.push_back(make_initial(problem, config, rng, ledger));

    while (!tracker.target_hit()) {
      opt_ia_generation(population, op, problem, ageing, rng, ledger);
      ++generations;
    }
  } catch (const BudgetExhausted&) {
  }
  return finalise(tracker, ledger, generations, config);
}

RunRecord run(const Problem& problem, const RunConfig& config) {
  RandomSource rng(config.seed, config.stream);
  switch (config.engine) {
    case EngineKind::one_plus_one:
      return run_one_plus_one(problem, config, rng);
    case EngineKind::opt_ia:
      return run_opt_ia(problem, config, rng);
  }
  throw ConfigError("run: unknown engine");
}

}  // namespace fastia
