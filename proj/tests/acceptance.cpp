// Acceptance suite: one pass/fail line per criterion. Runs every experiment
// at its pinned tolerance and exits non-zero if any primary criterion fails.
// The final hiddenpath check is a soft (informational) criterion and does not
// affect the exit code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "fastia/graph.hpp"
#include "fastia/harness.hpp"
#include "fastia/partition.hpp"

using namespace fastia;

namespace {

int g_failures = 0;

void report(const std::string& id, bool pass, const std::string& detail, bool soft = false) {
  if (!pass && !soft) ++g_failures;
  std::printf("%-5s %s  %s\n", id.c_str(), pass ? "PASS" : (soft ? "fail" : "FAIL"),
              detail.c_str());
  std::fflush(stdout);
}

unsigned jobs() { return std::max(2u, std::thread::hardware_concurrency()); }

std::string fmt(double v, int prec = 3) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

struct Arm {
  std::vector<SummaryRow> summaries;
  std::vector<SweepRecord> records;

  double mean_at(std::size_t n) const {
    for (const auto& row : summaries)
      if (row.n == n) return row.mean;
    return std::numeric_limits<double>::quiet_NaN();
  }
  double success_rate_at(std::size_t n) const {
    for (const auto& row : summaries)
      if (row.n == n) return row.success_rate;
    return 0.0;
  }
};

Arm sweep_arm(const std::function<std::shared_ptr<const Problem>(std::size_t)>& problem_for,
              const std::function<RunConfig(std::size_t)>& config_for,
              std::vector<std::size_t> dims, std::size_t reps, std::uint64_t seed) {
  SweepConfig sweep;
  sweep.dimensions = std::move(dims);
  sweep.replications = reps;
  sweep.master_seed = seed;
  sweep.problem_for = problem_for;
  sweep.config_for = config_for;
  Arm arm;
  arm.records = run_sweep(sweep, jobs());
  arm.summaries = aggregate(arm.records);
  return arm;
}

RunConfig base_config(OperatorKind kind, std::uint64_t budget) {
  RunConfig config;
  config.op.kind = kind;
  config.budget = budget;
  return config;
}

double spread_vs(const Arm& arm, const std::string& model) {
  return fit_scaling(arm.summaries, ModelExpr::parse(model)).spread;
}

class Flat final : public Problem {
 public:
  explicit Flat(std::size_t n) : n_(n) {}
  std::size_t dimension() const override { return n_; }
  double evaluate(const BitString&) const override { return 0.0; }
  bool is_target(const BitString&, double) const override { return false; }
  std::string descriptor() const override { return "flat"; }

 private:
  std::size_t n_;
};

// --- A1: expected evaluations of one parabolic hypermutation ----------------

void a1_expected_evaluations() {
  bool pass = true;
  std::ostringstream detail;
  for (std::size_t n : {std::size_t(50), std::size_t(100)}) {
    const double gamma = default_gamma(n);
    const auto dist = build_parabolic(n, gamma);

    // Exact expectation of the per-call evaluation count: the sum of the
    // per-step biases. Closed form: 2/e + 2*gamma*sum_{i=2}^{n/2} 1/i plus
    // the boundary remainder gamma*(1 - 2/n) for even n (step n-1 has bias
    // gamma/1 while step n is pinned to 1/e).
    double harmonic = 0.0;
    for (std::size_t i = 2; i <= n / 2; ++i) harmonic += 1.0 / double(i);
    const double quoted = 2.0 / std::exp(1.0) + 2.0 * gamma * harmonic;
    const double exact = quoted + gamma * (1.0 - 2.0 / double(n));

    Flat flat(n);
    RandomSource rng(1000 + n, 0);
    EvaluationLedger ledger;
    Individual parent{BitString(n), 0.0, 0};
    const std::size_t calls = 1000000;
    for (std::size_t c = 0; c < calls; ++c) fcm_gamma(parent, flat, dist, rng, ledger);
    const double mean = double(ledger.count) / double(calls);

    const double dev = std::abs(mean - exact) / exact;
    pass = pass && dev < 0.01;
    detail << "n=" << n << " mc=" << fmt(mean, 4) << " exact=" << fmt(exact, 4) << " dev="
           << fmt(100.0 * dev, 2) << "% (quoted harmonic form " << fmt(quoted, 4)
           << " omits the step n-1 boundary bias; mc sits " << fmt(100.0 * (mean - quoted) / quoted, 1)
           << "% above it)  ";
  }
  report("A1", pass, "expected evaluations per hypermutation on a flat objective: " + detail.str());
}

// --- A2/A3: unimodal scaling -------------------------------------------------

void a2_onemax_scaling() {
  const std::vector<std::size_t> dims = {64, 128, 256, 512};
  auto problem = [](std::size_t n) -> std::shared_ptr<const Problem> {
    return std::make_shared<OneMax>(n);
  };
  const Arm fast = sweep_arm(
      problem, [](std::size_t) { return base_config(OperatorKind::fcm_gamma, 100000000); },
      dims, 100, 201);
  const Arm stat = sweep_arm(
      problem,
      [](std::size_t) { return base_config(OperatorKind::static_hmp_fcm, 100000000); }, dims,
      100, 202);
  const double fast_spread = spread_vs(fast, "n*ln(n)");
  const double stat_spread = spread_vs(stat, "n^2*ln(n)");
  const double gap64 = stat.mean_at(64) / fast.mean_at(64);
  const double gap512 = stat.mean_at(512) / fast.mean_at(512);
  const double growth = gap512 / gap64;
  const bool pass = fast_spread < 1.6 && stat_spread < 1.6 && growth >= 4.0;
  report("A2", pass,
         "onemax scaling: fast spread vs n*ln(n) = " + fmt(fast_spread) +
             " (<1.6), static spread vs n^2*ln(n) = " + fmt(stat_spread) +
             " (<1.6), static/fast gap growth 64->512 = " + fmt(growth) + " (>=4)");
}

void a3_leadingones_scaling() {
  const std::vector<std::size_t> dims = {64, 128, 256, 512};
  auto problem = [](std::size_t n) -> std::shared_ptr<const Problem> {
    return std::make_shared<LeadingOnes>(n);
  };
  const Arm fast = sweep_arm(
      problem, [](std::size_t) { return base_config(OperatorKind::fcm_gamma, 1000000000); },
      dims, 100, 203);
  const Arm stat = sweep_arm(
      problem,
      [](std::size_t) { return base_config(OperatorKind::static_hmp_fcm, 1000000000); }, dims,
      100, 204);
  const double fast_spread = spread_vs(fast, "n^2");
  const double stat_spread = spread_vs(stat, "n^3");
  const bool pass = fast_spread < 1.6 && stat_spread < 1.6;
  report("A3", pass,
         "leadingones scaling: fast spread vs n^2 = " + fmt(fast_spread) +
             " (<1.6), static spread vs n^3 = " + fmt(stat_spread) + " (<1.6)");
}

// --- A4: trap ----------------------------------------------------------------

void a4_trap() {
  const std::size_t n = 64;
  const double gamma = default_gamma(n);
  const double log_n = std::log(double(n));
  const auto budget = std::uint64_t(std::llround(20.0 * n * log_n * (1.0 + gamma * log_n)));
  auto problem = [](std::size_t nn) -> std::shared_ptr<const Problem> {
    return std::make_shared<Trap>(nn);
  };
  const Arm fast = sweep_arm(
      problem, [&](std::size_t) { return base_config(OperatorKind::fcm_gamma, budget); }, {n},
      100, 205);
  const Arm ea = sweep_arm(
      problem, [](std::size_t) { return base_config(OperatorKind::sbm, 10000000); }, {n}, 100,
      206);
  const double fast_rate = fast.success_rate_at(n);
  const double ea_rate = ea.success_rate_at(n);
  const bool pass = fast_rate >= 0.9 && ea_rate == 0.0;
  report("A4", pass,
         "trap n=64: fast-ia-gamma success " + fmt(fast_rate, 2) + " within " +
             std::to_string(budget) + " evals (>=0.9), one-plus-one-ea success " +
             fmt(ea_rate, 2) + " at 1e7 (=0)");
}

// --- A5: jump escape ----------------------------------------------------------

void a5_jump_escape() {
  const std::size_t n = 20, d = 3;
  const double gamma = default_gamma(n);
  double binom = 1.0;
  for (std::size_t i = 0; i < d; ++i) binom = binom * double(n - i) / double(i + 1);
  const double predicted = (double(d) / gamma) * binom * (1.0 + gamma * std::log(double(n)));

  BitString plateau(n);
  for (std::size_t i = 0; i < n - d; ++i) plateau.set(i, true);
  auto problem = [&](std::size_t) -> std::shared_ptr<const Problem> {
    return std::make_shared<Jump>(n, d);
  };
  const Arm arm = sweep_arm(problem,
                            [&](std::size_t) {
                              RunConfig config = base_config(OperatorKind::fcm_gamma, 1000000);
                              config.initial = plateau;
                              return config;
                            },
                            {n}, 200, 207);
  const double mean = arm.mean_at(n);
  const double ratio = mean / predicted;
  const bool pass = arm.success_rate_at(n) == 1.0 && ratio < 2.0 && ratio > 0.5;
  report("A5", pass,
         "jump n=20 d=3 from the plateau: mean " + fmt(mean, 0) +
             " vs (d/gamma)*binom(n,d)*(1+gamma*ln(n)) = " + fmt(predicted, 0) + ", ratio " +
             fmt(ratio, 2) + " (within factor 2)");
}

// --- A6: cliff with ageing ----------------------------------------------------

void a6_cliff_ageing() {
  const std::size_t n = 40, d = 10;
  const double ln_n = std::log(double(n));
  const auto tau = std::uint64_t(std::llround(2.0 * n * ln_n));
  auto problem = [&](std::size_t) -> std::shared_ptr<const Problem> {
    return std::make_shared<Cliff>(n, d);
  };
  auto opt_ia = [&](double gamma) {
    RunConfig config = base_config(OperatorKind::fcm_gamma, 10000000);
    config.op.gamma = gamma;
    config.engine = EngineKind::opt_ia;
    config.ageing.mu = 3;
    config.ageing.dup = 2;
    config.ageing.tau = tau;
    return config;
  };
  const double tiny_gamma = 1.0 / (double(n) * ln_n * ln_n);
  const Arm good =
      sweep_arm(problem, [&](std::size_t) { return opt_ia(tiny_gamma); }, {n}, 100, 208);
  const Arm bad =
      sweep_arm(problem, [&](std::size_t) { return opt_ia(default_gamma(n)); }, {n}, 100, 209);
  const Arm ea = sweep_arm(
      problem, [](std::size_t) { return base_config(OperatorKind::sbm, 10000000); }, {n}, 100,
      210);
  const double good_rate = good.success_rate_at(n);
  const double bad_rate = bad.success_rate_at(n);
  const double ea_rate = ea.success_rate_at(n);
  const bool pass = good_rate >= 0.8 && bad_rate <= 0.2 && ea_rate == 0.0;
  report("A6", pass,
         "cliff n=40 d=10 opt-ia: gamma=1/(n*ln^2(n)) success " + fmt(good_rate, 2) +
             " (>=0.8), gamma=1/ln(n) success " + fmt(bad_rate, 2) +
             " (<=0.2), one-plus-one-ea success " + fmt(ea_rate, 2) + " (=0)");
}

// --- A7: partition worst-case instance ----------------------------------------

void a7_partition() {
  const std::size_t n = 50;
  const double eps = 0.2;
  auto exact_problem = [&](std::size_t) -> std::shared_ptr<const Problem> {
    return std::make_shared<PartitionProblem>(make_w_eps(n, eps), 0.0);
  };
  const Arm fast = sweep_arm(
      exact_problem, [](std::size_t) { return base_config(OperatorKind::fcm_gamma, 1000000); },
      {n}, 100, 211);
  const Arm ea = sweep_arm(
      exact_problem, [](std::size_t) { return base_config(OperatorKind::sbm, 1000000); }, {n},
      100, 212);
  const std::size_t fast_hits = std::size_t(std::llround(fast.success_rate_at(n) * 100.0));
  const double trap_threshold = (4.0 / 3.0 - eps) * 0.5;
  std::size_t stuck = 0;
  for (const auto& record : ea.records)
    if (record.record.best_fitness >= trap_threshold - 1e-9) ++stuck;
  const bool pass = fast_hits >= 95 && stuck >= 20;
  report("A7", pass,
         "partition W_eps n=50: fast-ia-gamma optimum hits " + std::to_string(fast_hits) +
             "/100 (>=95); one-plus-one-ea stuck at >=(4/3-eps)*OPT in " +
             std::to_string(stuck) +
             "/100 runs (>=20; the trap fires at a small constant rate here: measured "
             "0.01-0.02 for n in 20..200 at 1000 reps, since multi-bit mutations can split "
             "the two large jobs while small jobs still share their machine)");
}

// --- A8/A9: vertex cover -------------------------------------------------------

void a8_vc_node() {
  const std::vector<std::size_t> dims = {64, 128, 256};
  auto star_problem = [](std::size_t n) -> std::shared_ptr<const Problem> {
    return std::make_shared<VertexCoverNodeProblem>(generate_graph(GraphKind::star, n));
  };
  const Arm fast = sweep_arm(
      star_problem, [](std::size_t) { return base_config(OperatorKind::fcm_gamma, 10000000); },
      dims, 100, 213);
  const Arm stat = sweep_arm(
      star_problem,
      [](std::size_t) { return base_config(OperatorKind::static_hmp_fcm, 10000000); }, dims,
      100, 214);
  const double fast_spread = spread_vs(fast, "n*ln(n)");
  const double stat_spread = spread_vs(stat, "n^2*ln(n)");
  const bool pass = fast_spread < 1.8 && stat_spread < 1.8;
  report("A8", pass,
         "vc node on stars, time to feasibility: fast spread vs n*ln(n) = " +
             fmt(fast_spread) + " (<1.8, means " + fmt(fast.mean_at(64), 1) + "/" +
             fmt(fast.mean_at(128), 1) + "/" + fmt(fast.mean_at(256), 1) +
             "), static spread vs n^2*ln(n) = " + fmt(stat_spread) + " (<1.8, means " +
             fmt(stat.mean_at(64), 1) + "/" + fmt(stat.mean_at(128), 1) + "/" +
             fmt(stat.mean_at(256), 1) + ")");

  // Supplementary (not a criterion): the same protocol on complete graphs,
  // where feasibility genuinely requires n-1 selected vertices.
  auto complete_problem = [](std::size_t n) -> std::shared_ptr<const Problem> {
    return std::make_shared<VertexCoverNodeProblem>(generate_graph(GraphKind::complete, n));
  };
  const std::vector<std::size_t> cdims = {16, 32, 64};
  const Arm cfast = sweep_arm(
      complete_problem,
      [](std::size_t) { return base_config(OperatorKind::fcm_gamma, 10000000); }, cdims, 50,
      215);
  const Arm cstat = sweep_arm(
      complete_problem,
      [](std::size_t) { return base_config(OperatorKind::static_hmp_fcm, 10000000); }, cdims,
      50, 216);
  std::printf(
      "      info  supplementary vc node on complete graphs: fast spread vs n*ln(n) = %s, "
      "static spread vs n^2*ln(n) = %s\n",
      fmt(spread_vs(cfast, "n*ln(n)")).c_str(), fmt(spread_vs(cstat, "n^2*ln(n)")).c_str());
}

void a9_vc_edge() {
  const std::vector<std::size_t> dims = {63, 127, 255};  // edge counts
  auto star_problem = [](std::size_t m) -> std::shared_ptr<const Problem> {
    return std::make_shared<VertexCoverEdgeProblem>(generate_graph(GraphKind::star, m + 1));
  };
  const Arm fast = sweep_arm(
      star_problem, [](std::size_t) { return base_config(OperatorKind::fcm_gamma, 10000000); },
      dims, 100, 217);
  const Arm stat = sweep_arm(
      star_problem,
      [](std::size_t) { return base_config(OperatorKind::static_hmp_fcm, 10000000); }, dims,
      100, 218);
  const double fast_spread = spread_vs(fast, "n*ln(n)");
  const double stat_spread = spread_vs(stat, "n^2*ln(n)");
  const bool pass = fast_spread < 1.8 && stat_spread < 1.8;
  report("A9", pass,
         "vc edge (2-approx) on stars: fast spread vs m*ln(m) = " + fmt(fast_spread) +
             " (<1.8), static spread vs m^2*ln(m) = " + fmt(stat_spread) + " (<1.8)");
}

// --- A10: oracle equivalence ---------------------------------------------------

void a10_rls_oracle() {
  const std::size_t n = 6;
  std::vector<double> expect_from(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;)
    expect_from[k] = double(n) / double(n - k) + expect_from[k + 1];
  double oracle = 0.0;
  double binom = 1.0;  // C(n, k), updated multiplicatively
  for (std::size_t k = 0; k <= n; ++k) {
    oracle += binom / std::pow(2.0, double(n)) * (1.0 + expect_from[k]);
    binom = binom * double(n - k) / double(k + 1);
  }

  OneMax problem(n);
  std::uint64_t total = 0;
  const std::size_t reps = 100000;
  for (std::size_t r = 0; r < reps; ++r) {
    RunConfig config = base_config(OperatorKind::rls_flip, 1000000);
    config.seed = 219;
    config.stream = r;
    const RunRecord record = run(problem, config);
    total += *record.evaluations_to_target;
  }
  const double mean = double(total) / double(reps);
  const double dev = std::abs(mean - oracle) / oracle;
  report("A10", dev < 0.02,
         "rls on onemax n=6: mc mean " + fmt(mean, 3) + " vs markov-chain oracle " +
             fmt(oracle, 3) + ", dev " + fmt(100.0 * dev, 2) + "% (<2%)");
}

// --- A11: property suites -------------------------------------------------------

bool check_normalisation_and_symmetry() {
  for (std::size_t n : {2u, 7u, 16u, 64u, 257u}) {
    for (double beta : {1.0, 1.5, 2.0, 20.0}) {
      const auto d = build_symmetric_powerlaw(n, beta);
      double sum = 0.0;
      for (std::size_t i = 0; i <= n; ++i) {
        sum += d.probability(i);
        if (d.probability(i) != d.probability(n - i)) return false;
      }
      if (std::abs(sum - 1.0) >= 1e-12) return false;
    }
    for (bool extended : {false, true}) {
      const auto d = build_powerlaw_rate(n, 1.5, extended);
      double sum = 0.0;
      for (std::size_t i = 0; i <= d.upper; ++i) sum += d.probability(i);
      if (std::abs(sum - 1.0) >= 1e-12) return false;
    }
    {
      const auto d = build_uniform_heavy_tail(n, default_uniform_tail_p1());
      double sum = 0.0;
      for (std::size_t i = 0; i <= n; ++i) sum += d.probability(i);
      if (std::abs(sum - 1.0) >= 1e-12) return false;
    }
    // Even n only: both paper branches meet at i = n/2.
    const auto p = build_parabolic(n, default_gamma(n));
    const std::size_t mid = n / 2;
    if (n % 2 == 0 && n >= 4 && p.prob_at_step(mid) != p.gamma / double(n - mid)) return false;
  }
  return true;
}

double chi2_critical(std::size_t df) {
  const double z = 3.0902;  // one-sided alpha 0.001
  const double d = double(df);
  const double t = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
  return d * t * t * t;
}

bool check_unbiasedness() {
  const std::size_t n = 12;
  OneMax problem(n);
  RandomSource setup(301, 0);
  const BitString base = BitString::random(n, setup);
  const auto sigma = sample_flip_order(n, setup);
  BitString permuted(n);
  for (std::size_t i = 0; i < n; ++i) permuted.set(sigma[i], base.test(i));

  for (OperatorKind kind :
       {OperatorKind::fcm_gamma, OperatorKind::fcm_beta, OperatorKind::hmp_beta,
        OperatorKind::static_hmp_fcm, OperatorKind::static_hmp_plain, OperatorKind::sbm,
        OperatorKind::rls_flip, OperatorKind::ea_beta, OperatorKind::ea_unif}) {
    OperatorConfig config;
    config.kind = kind;
    const MutationOperator op(config, n);
    EvaluationLedger ledger;
    RandomSource rng_a(302, 1), rng_b(302, 2);
    const Individual parent_a{base, problem.evaluate(base), 0};
    const Individual parent_b{permuted, problem.evaluate(permuted), 0};
    std::vector<double> hist_a(n + 1, 0.0), hist_b(n + 1, 0.0);
    const std::size_t samples = 100000;
    for (std::size_t s = 0; s < samples; ++s) {
      hist_a[hamming(base, op.apply(parent_a, problem, rng_a, ledger).offspring.genotype)] += 1;
      hist_b[hamming(permuted,
                     op.apply(parent_b, problem, rng_b, ledger).offspring.genotype)] += 1;
    }
    double stat = 0.0;
    std::size_t cells = 0;
    double acc_a = 0.0, acc_b = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      acc_a += hist_a[i];
      acc_b += hist_b[i];
      if (acc_a + acc_b < 10.0 && i != n) continue;
      if (acc_a + acc_b > 0.0) {
        const double expected = (acc_a + acc_b) / 2.0;
        stat += (acc_a - expected) * (acc_a - expected) / expected +
                (acc_b - expected) * (acc_b - expected) / expected;
        ++cells;
      }
      acc_a = acc_b = 0.0;
    }
    if (cells > 1 && stat >= chi2_critical(cells - 1)) return false;
  }
  return true;
}

bool check_ledger_exactness() {
  const std::size_t n = 24;
  OneMax problem(n);
  RandomSource rng(303, 0);
  EvaluationLedger ledger;
  Individual current = make_random_individual(problem, rng, ledger);
  const std::uint64_t init = ledger.count;
  std::uint64_t used = 0;
  for (OperatorKind kind :
       {OperatorKind::fcm_gamma, OperatorKind::fcm_beta, OperatorKind::hmp_beta,
        OperatorKind::static_hmp_fcm, OperatorKind::static_hmp_plain, OperatorKind::sbm,
        OperatorKind::rls_flip, OperatorKind::ea_beta, OperatorKind::ea_unif}) {
    OperatorConfig config;
    config.kind = kind;
    const MutationOperator op(config, n);
    for (int call = 0; call < 2000; ++call) {
      const auto outcome = op.apply(current, problem, rng, ledger);
      used += outcome.evals_used;
      if (outcome.evaluated && outcome.offspring.fitness >= current.fitness)
        current = outcome.offspring;
    }
  }
  return used == ledger.count - init;
}

bool check_step_order_invariants() {
  const std::size_t n = 16;
  OneMax problem(n);
  OperatorConfig op_config;
  op_config.kind = OperatorKind::rls_flip;
  const MutationOperator op(op_config, n);
  AgeingConfig ageing;
  ageing.tau = 30;
  ageing.mu = 4;
  ageing.dup = 3;
  RandomSource rng(304, 0);
  EvaluationLedger ledger;
  std::vector<Individual> population;
  for (std::size_t i = 0; i < ageing.mu; ++i)
    population.push_back(make_random_individual(problem, rng, ledger));
  for (int gen = 0; gen < 2000; ++gen) {
    std::vector<std::uint64_t> ages_before;
    for (const auto& m : population) ages_before.push_back(m.age + 1);
    opt_ia_generation(population, op, problem, ageing, rng, ledger);
    if (population.size() != ageing.mu) return false;
    for (const auto& m : population) {
      if (m.age == 0) continue;
      bool inherited = false;
      for (auto a : ages_before) inherited = inherited || a == m.age;
      if (!inherited) return false;
    }
  }
  // tau = infinity: over 10^4 generations nobody is removed, so evaluations
  // are exactly the initial mu plus mu*dup mutants per generation.
  AgeingConfig forever = ageing;
  forever.tau = kNoAgeing;
  EvaluationLedger ledger2;
  std::vector<Individual> pop2;
  for (std::size_t i = 0; i < forever.mu; ++i)
    pop2.push_back(make_random_individual(problem, rng, ledger2));
  for (int gen = 0; gen < 10000; ++gen)
    opt_ia_generation(pop2, op, problem, forever, rng, ledger2);
  return ledger2.count == forever.mu + 10000ull * forever.mu * forever.dup;
}

bool check_exhaustive_problems() {
  {
    const std::size_t n = 14, d = 4;
    Jump jump(n, d);
    double second_best = 0.0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      BitString x(n);
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) x.set(i, true);
      const std::size_t ones = x.count_ones();
      const double f = jump.evaluate(x);
      if (ones <= n - d && f != double(d + ones)) return false;
      if (ones > n - d && ones < n && f != double(n - ones)) return false;
      if (ones == n && f != double(n + d)) return false;
      if (ones != n) second_best = std::max(second_best, f);
    }
    if (second_best != double(n)) return false;
  }
  {
    const std::size_t n = 12, d = 4;
    Cliff cliff(n, d);
    std::vector<double> level(n + 1);
    for (std::size_t ones = 0; ones <= n; ++ones) {
      BitString x(n);
      for (std::size_t i = 0; i < ones; ++i) x.set(i, true);
      level[ones] = cliff.evaluate(x);
    }
    if (level[n - d] - level[n - d + 1] != double(d) - 1.5) return false;
    for (std::size_t ones = 1; ones <= n; ++ones)
      if (ones != n - d + 1 && level[ones] <= level[ones - 1]) return false;
  }
  for (const Graph& g :
       {generate_graph(GraphKind::star, 8), generate_graph(GraphKind::complete, 6),
        generate_graph(GraphKind::path, 7)}) {
    const std::size_t v = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (1ull << v); ++mask) {
      BitString x(v);
      for (std::size_t i = 0; i < v; ++i)
        if ((mask >> i) & 1u) x.set(i, true);
      if ((vc_node_fitness(x, g) <= double(v)) != vc_is_cover(x, g)) return false;
    }
  }
  for (const Graph& g :
       {generate_graph(GraphKind::star, 5), generate_graph(GraphKind::path, 6),
        generate_graph(GraphKind::complete, 5)}) {
    const std::size_t v = g.vertex_count();
    const std::size_t m = g.edge_count();
    std::size_t best = v;
    for (std::uint64_t mask = 0; mask < (1ull << v); ++mask) {
      BitString x(v);
      for (std::size_t i = 0; i < v; ++i)
        if ((mask >> i) & 1u) x.set(i, true);
      if (vc_is_cover(x, g)) best = std::min(best, x.count_ones());
    }
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      BitString x(m);
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i) & 1u) x.set(i, true);
      if (!vc_two_approx_target(x, g)) continue;
      BitString cover(v);
      for (std::size_t e = 0; e < m; ++e)
        if (x.test(e)) {
          cover.set(g.edges()[e].first, true);
          cover.set(g.edges()[e].second, true);
        }
      if (!vc_is_cover(cover, g) || cover.count_ones() > 2 * best) return false;
    }
  }
  return true;
}

bool check_hiddenpath_unique_optimum() {
  const std::size_t n = 32;
  HiddenPath hp(n, 0.5);
  const BitString optimum = hp.optimum();
  const double best = hp.evaluate(optimum);
  if (!hp.is_target(optimum, best)) return false;
  std::size_t at_or_above = 0;
  std::vector<std::size_t> zeros;
  std::function<void(std::size_t, std::size_t)> enumerate = [&](std::size_t start,
                                                                std::size_t left) {
    BitString x = BitString::all_ones(n);
    for (std::size_t pos : zeros) x.set(pos, false);
    if (hp.evaluate(x) >= best) ++at_or_above;
    if (left == 0) return;
    for (std::size_t pos = start; pos < n; ++pos) {
      zeros.push_back(pos);
      enumerate(pos + 1, left - 1);
      zeros.pop_back();
    }
  };
  enumerate(0, 6);  // exhaustive over all strings with up to log2(n)+1 zeros
  if (at_or_above != 1) return false;
  RandomSource rng(305, 0);
  for (int rep = 0; rep < 100000; ++rep) {
    const BitString x = BitString::random(n, rng);
    if (hp.evaluate(x) > best) return false;
  }
  return true;
}

bool check_deterministic_replay() {
  Cliff problem(20, 4);
  RunConfig config = base_config(OperatorKind::fcm_gamma, 30000);
  config.engine = EngineKind::opt_ia;
  config.ageing.mu = 3;
  config.ageing.dup = 2;
  config.ageing.tau = 150;
  config.seed = 306;
  SweepRecord a, b;
  a.n = b.n = 20;
  a.record = run(problem, config);
  b.record = run(problem, config);
  if (!(a.record == b.record)) return false;
  std::ostringstream ca, cb;
  write_runs_csv(ca, {a});
  write_runs_csv(cb, {b});
  return ca.str() == cb.str();
}

void a11_property_suites() {
  struct Check {
    const char* name;
    bool ok;
  };
  const Check checks[] = {
      {"distribution-normalisation", check_normalisation_and_symmetry()},
      {"operator-unbiasedness", check_unbiasedness()},
      {"ledger-exactness", check_ledger_exactness()},
      {"ageing-step-order", check_step_order_invariants()},
      {"exhaustive-problems", check_exhaustive_problems()},
      {"hiddenpath-unique-optimum", check_hiddenpath_unique_optimum()},
      {"deterministic-replay", check_deterministic_replay()},
  };
  bool pass = true;
  std::string detail = "property suites:";
  for (const auto& check : checks) {
    pass = pass && check.ok;
    detail += std::string(" ") + check.name + (check.ok ? "=ok" : "=FAIL");
  }
  report("A11", pass, detail);
}

// --- declared soft criterion -----------------------------------------------

void soft_hiddenpath() {
  const std::size_t n = 32;
  const double ln_n = std::log(double(n));
  auto problem = [](std::size_t) -> std::shared_ptr<const Problem> {
    return std::make_shared<HiddenPath>(32, 0.5);
  };
  const Arm arm = sweep_arm(
      problem,
      [&](std::size_t) {
        RunConfig config = base_config(OperatorKind::fcm_gamma, 100000000);
        config.op.gamma = 1.0 / (5.0 * ln_n);
        config.engine = EngineKind::opt_ia;
        config.ageing.mu = 5;
        config.ageing.dup = 1;
        config.ageing.tau = std::uint64_t(std::llround(4.0 * n * ln_n * ln_n * ln_n));
        return config;
      },
      {n}, 20, 220);
  const double rate = arm.success_rate_at(n);
  report("SOFT", rate >= 0.5,
         "hiddenpath n=32 opt-ia within 1e8 evals: success " + fmt(rate, 2) +
             " (>=0.5; declared soft criterion, informational only)",
         /*soft=*/true);
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto started = clock::now();
  auto timed = [&](void (*criterion)()) {
    const auto t0 = clock::now();
    criterion();
    const auto dt = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0);
    std::printf("      (%llds)\n", static_cast<long long>(dt.count()));
  };

  timed(a1_expected_evaluations);
  timed(a2_onemax_scaling);
  timed(a3_leadingones_scaling);
  timed(a4_trap);
  timed(a5_jump_escape);
  timed(a6_cliff_ageing);
  timed(a7_partition);
  timed(a8_vc_node);
  timed(a9_vc_edge);
  timed(a10_rls_oracle);
  timed(a11_property_suites);
  timed(soft_hiddenpath);

  const auto total = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - started);
  std::printf("RESULT: %s (%d primary criterion failure%s, %llds total)\n",
              g_failures == 0 ? "PASS" : "FAIL", g_failures, g_failures == 1 ? "" : "s",
              static_cast<long long>(total.count()));
  return g_failures == 0 ? 0 : 1;
}
