#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "fastia/algorithms.hpp"
#include "fastia/model_expr.hpp"

namespace fastia {

/// Names attached to every per-run CSV row.
struct SweepLabels {
  std::string algorithm;
  std::string operator_name;
  std::string problem;
};

/// A replication sweep over a list of dimensions. problem_for and config_for
/// are invoked once per dimension before any worker starts; per-run rng
/// streams are the replication indices, so results are independent of the
/// parallelism level.
struct SweepConfig {
  std::vector<std::size_t> dimensions;  // strictly increasing
  std::size_t replications = 1;
  std::uint64_t master_seed = 0;
  std::function<std::shared_ptr<const Problem>(std::size_t)> problem_for;
  std::function<RunConfig(std::size_t)> config_for;
  SweepLabels labels;
};

struct SweepRecord {
  std::size_t n = 0;
  std::uint64_t replication = 0;
  RunRecord record;
  std::string algorithm;
  std::string operator_name;
  std::string problem_descriptor;
  std::string params_json;
};

std::vector<SweepRecord> run_sweep(const SweepConfig& sweep, unsigned parallelism);

/// Per-dimension aggregate. Runtime statistics are computed over successful
/// runs only; the success rate is reported alongside, never silently folded
/// into a censored mean. mean/median/stderr are NaN when no run succeeded.
struct SummaryRow {
  std::size_t n = 0;
  std::size_t replications = 0;
  std::size_t successes = 0;
  double mean = 0.0;
  double median = 0.0;
  double stderr_mean = 0.0;
  double success_rate = 0.0;
  double success_ci_low = 0.0;   // Clopper-Pearson 95%
  double success_ci_high = 0.0;
};

std::vector<SummaryRow> aggregate(const std::vector<SweepRecord>& records);

/// Exact binomial (Clopper-Pearson) confidence bounds on a proportion.
std::pair<double, double> clopper_pearson(std::size_t successes, std::size_t total,
                                          double alpha = 0.05);

/// Constant-factor consistency of means against a model curve: per-n ratio
/// mean/model(n), the max/min ratio spread, and the log-log slope of the
/// means. Slope and R^2 need at least two dimensions with successes.
struct FitResult {
  std::string model;
  std::vector<std::pair<std::size_t, double>> ratios;
  double spread = 0.0;
  std::optional<double> slope;
  std::optional<double> r_squared;
};

FitResult fit_scaling(const std::vector<SummaryRow>& summaries, const ModelExpr& model);

/// Canonical key-sorted JSON object describing the run parameters at
/// dimension n (resolved operator parameters, engine, ageing, budget).
std::string run_params_json(const RunConfig& config, std::size_t n);

// --- CSV emission (exact schemas used by the CLI) ---------------------------

extern const char* const kRunsCsvHeader;     // run_id,seed,...,first_hit_evaluation
extern const char* const kSummaryCsvHeader;  // n,mean,median,stderr,success_rate,ratio,model

void write_runs_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& summaries,
                       const FitResult* fit = nullptr, bool with_header = true);

/// The columns cmd_fit needs back from a per-run CSV.
struct LoadedRun {
  std::size_t n = 0;
  bool success = false;
  double evaluations = 0.0;
};

std::vector<LoadedRun> read_runs_csv(std::istream& in);

/// Aggregates loaded rows exactly like aggregate() does for fresh records.
std::vector<SummaryRow> aggregate_loaded(const std::vector<LoadedRun>& runs);

}  // namespace fastia
