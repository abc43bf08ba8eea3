#include "fastia/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace fastia {

std::vector<SweepRecord> run_sweep(const SweepConfig& sweep, unsigned parallelism) {
  if (sweep.dimensions.empty()) throw ConfigError("sweep: dimension list must not be empty");
  for (std::size_t i = 1; i < sweep.dimensions.size(); ++i)
    if (sweep.dimensions[i] <= sweep.dimensions[i - 1])
      throw ConfigError("sweep: dimensions must be strictly increasing");
  if (sweep.replications < 1) throw ConfigError("sweep: replications must be at least 1");
  if (!sweep.problem_for || !sweep.config_for)
    throw ConfigError("sweep: problem and config factories are required");

  const std::size_t k = sweep.dimensions.size();
  const std::size_t reps = sweep.replications;

  // Materialise per-dimension problems and base configs up front; workers
  // only read them.
  std::vector<std::shared_ptr<const Problem>> problems(k);
  std::vector<RunConfig> base_configs(k);
  for (std::size_t d = 0; d < k; ++d) {
    problems[d] = sweep.problem_for(sweep.dimensions[d]);
    if (!problems[d]) throw ConfigError("sweep: problem factory returned null");
    base_configs[d] = sweep.config_for(sweep.dimensions[d]);
  }

  std::vector<std::string> params(k);
  for (std::size_t d = 0; d < k; ++d)
    params[d] = run_params_json(base_configs[d], sweep.dimensions[d]);

  const std::size_t total = k * reps;
  std::vector<SweepRecord> records(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= total) return;
      const std::size_t d = task / reps;
      const std::uint64_t rep = static_cast<std::uint64_t>(task % reps);
      RunConfig config = base_configs[d];
      config.seed = sweep.master_seed;
      config.stream = rep;
      SweepRecord& out = records[task];
      out.n = sweep.dimensions[d];
      out.replication = rep;
      out.record = run(*problems[d], config);
      out.algorithm = sweep.labels.algorithm;
      out.operator_name = sweep.labels.operator_name;
      out.problem_descriptor = problems[d]->descriptor();
      out.params_json = params[d];
    }
  };

  unsigned workers = std::max(1u, parallelism);
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

namespace {

SummaryRow summarise(std::size_t n, std::vector<double>& runtimes, std::size_t total) {
  SummaryRow row;
  row.n = n;
  row.replications = total;
  row.successes = runtimes.size();
  row.success_rate = total == 0 ? 0.0 : static_cast<double>(runtimes.size()) / total;
  auto [lo, hi] = clopper_pearson(runtimes.size(), total);
  row.success_ci_low = lo;
  row.success_ci_high = hi;
  if (runtimes.empty()) {
    row.mean = row.median = row.stderr_mean = std::numeric_limits<double>::quiet_NaN();
    return row;
  }
  std::sort(runtimes.begin(), runtimes.end());
  const std::size_t s = runtimes.size();
  row.median = s % 2 == 1 ? runtimes[s / 2] : 0.5 * (runtimes[s / 2 - 1] + runtimes[s / 2]);
  double sum = 0.0;
  for (double v : runtimes) sum += v;
  row.mean = sum / static_cast<double>(s);
  double ss = 0.0;
  for (double v : runtimes) ss += (v - row.mean) * (v - row.mean);
  row.stderr_mean = s > 1 ? std::sqrt(ss / static_cast<double>(s - 1)) /
                                std::sqrt(static_cast<double>(s))
                          : 0.0;
  return row;
}

}  // namespace

std::vector<SummaryRow> aggregate(const std::vector<SweepRecord>& records) {
  std::vector<SummaryRow> rows;
  std::size_t i = 0;
  while (i < records.size()) {
    const std::size_t n = records[i].n;
    std::vector<double> runtimes;
    std::size_t total = 0;
    while (i < records.size() && records[i].n == n) {
      ++total;
      if (records[i].record.success)
        runtimes.push_back(static_cast<double>(*records[i].record.evaluations_to_target));
      ++i;
    }
    rows.push_back(summarise(n, runtimes, total));
  }
  return rows;
}

std::vector<SummaryRow> aggregate_loaded(const std::vector<LoadedRun>& runs) {
  std::vector<LoadedRun> sorted = runs;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const LoadedRun& a, const LoadedRun& b) { return a.n < b.n; });
  std::vector<SummaryRow> rows;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const std::size_t n = sorted[i].n;
    std::vector<double> runtimes;
    std::size_t total = 0;
    while (i < sorted.size() && sorted[i].n == n) {
      ++total;
      if (sorted[i].success) runtimes.push_back(sorted[i].evaluations);
      ++i;
    }
    rows.push_back(summarise(n, runtimes, total));
  }
  return rows;
}

namespace {

double log_binomial_cdf_term(std::size_t n, std::size_t i, double p) {
  const double dn = static_cast<double>(n), di = static_cast<double>(i);
  return std::lgamma(dn + 1.0) - std::lgamma(di + 1.0) - std::lgamma(dn - di + 1.0) +
         di * std::log(p) + (dn - di) * std::log1p(-p);
}

/// P(X <= k) for X ~ Binomial(n, p), 0 < p < 1.
double binomial_cdf(std::size_t k, std::size_t n, double p) {
  double cdf = 0.0;
  for (std::size_t i = 0; i <= k; ++i) cdf += std::exp(log_binomial_cdf_term(n, i, p));
  return std::min(1.0, cdf);
}

}  // namespace

std::pair<double, double> clopper_pearson(std::size_t successes, std::size_t total,
                                          double alpha) {
  if (total == 0) return {0.0, 1.0};
  if (successes > total) throw ConfigError("clopper_pearson: successes exceed total");
  const double half = alpha / 2.0;
  double lo = 0.0, hi = 1.0;
  if (successes > 0) {
    // Largest p with P(X >= successes; p) <= half, via bisection on the CDF.
    double a = 0.0, b = 1.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      const double tail = 1.0 - binomial_cdf(successes - 1, total, mid);
      if (tail < half)
        a = mid;
      else
        b = mid;
    }
    lo = 0.5 * (a + b);
  }
  if (successes < total) {
    double a = 0.0, b = 1.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      const double tail = binomial_cdf(successes, total, mid);
      if (tail < half)
        b = mid;
      else
        a = mid;
    }
    hi = 0.5 * (a + b);
  }
  return {lo, hi};
}

FitResult fit_scaling(const std::vector<SummaryRow>& summaries, const ModelExpr& model) {
  FitResult fit;
  fit.model = model.text();
  std::vector<double> log_n, log_mean;
  for (const auto& row : summaries) {
    if (row.successes == 0 || !(row.mean > 0.0)) continue;
    const double m = model.eval(static_cast<double>(row.n));
    if (!(m > 0.0))
      throw ConfigError("fit: model evaluates to a non-positive value at n = " +
                        std::to_string(row.n));
    fit.ratios.emplace_back(row.n, row.mean / m);
    log_n.push_back(std::log(static_cast<double>(row.n)));
    log_mean.push_back(std::log(row.mean));
  }
  if (!fit.ratios.empty()) {
    double lo = fit.ratios.front().second, hi = lo;
    for (const auto& [n, r] : fit.ratios) {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    fit.spread = hi / lo;
  }
  if (log_n.size() >= 2) {
    const std::size_t k = log_n.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      mx += log_n[i];
      my += log_mean[i];
    }
    mx /= static_cast<double>(k);
    my /= static_cast<double>(k);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      sxx += (log_n[i] - mx) * (log_n[i] - mx);
      sxy += (log_n[i] - mx) * (log_mean[i] - my);
      syy += (log_mean[i] - my) * (log_mean[i] - my);
    }
    fit.slope = sxy / sxx;
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  }
  return fit;
}

}  // namespace fastia
