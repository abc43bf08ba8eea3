// Command-line front end: single runs, replication sweeps, scaling fits and
// instance generation. Exit codes: 0 success, 1 usage/config error, 2 budget
// exhausted, 3 I/O error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fastia/graph.hpp"
#include "fastia/harness.hpp"
#include "fastia/partition.hpp"

namespace {

using namespace fastia;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBudget = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter that may be a number, "auto", or an expression over n.
struct Binding {
  std::string text;

  bool set() const { return !text.empty(); }
  bool is_auto() const { return text == "auto"; }

  double eval(std::size_t n) const {
    return ModelExpr::parse(text).eval(static_cast<double>(n));
  }
};

struct AlgorithmSpec {
  OperatorConfig op;
  EngineKind default_engine = EngineKind::one_plus_one;
};

AlgorithmSpec algorithm_spec(const std::string& name) {
  AlgorithmSpec spec;
  auto kind = [&](OperatorKind k) { spec.op.kind = k; };
  if (name == "rls") {
    kind(OperatorKind::rls_flip);
  } else if (name == "one-plus-one-ea") {
    kind(OperatorKind::sbm);
  } else if (name == "one-plus-one-ia") {
    kind(OperatorKind::static_hmp_fcm);
  } else if (name == "one-plus-one-ia-plain") {
    kind(OperatorKind::static_hmp_plain);
  } else if (name == "fast-ia-gamma") {
    kind(OperatorKind::fcm_gamma);
  } else if (name == "fast-ia-beta-fcm") {
    kind(OperatorKind::fcm_beta);
  } else if (name == "fast-ia-beta-hmp") {
    kind(OperatorKind::hmp_beta);
  } else if (name == "fast-ea-beta") {
    kind(OperatorKind::ea_beta);
  } else if (name == "fast-ea-unif") {
    kind(OperatorKind::ea_unif);
  } else if (name == "opt-ia-gamma") {
    kind(OperatorKind::fcm_gamma);
    spec.default_engine = EngineKind::opt_ia;
  } else if (name == "opt-ia-beta") {
    kind(OperatorKind::fcm_beta);
    spec.default_engine = EngineKind::opt_ia;
  } else {
    throw ConfigError(
        "unknown algorithm '" + name +
        "' (expected one of: rls, one-plus-one-ea, one-plus-one-ia, one-plus-one-ia-plain, "
        "fast-ia-gamma, fast-ia-beta-fcm, fast-ia-beta-hmp, fast-ea-beta, fast-ea-unif, "
        "opt-ia-gamma, opt-ia-beta)");
  }
  return spec;
}

/// Everything shared between `run` and `sweep`.
struct ExperimentOptions {
  // problem
  std::string problem;
  std::size_t n = 0;
  Binding d;
  double eps = 0.5;
  double eps_approx = 0.0;
  std::string graph_kind = "star";
  std::string graph_file;
  std::string instance_file;
  // operator / algorithm
  std::string algo;
  Binding gamma, beta, p1, rate;
  bool extended = false;
  bool exact_k = false;
  // engine
  Binding budget{"1e9"};
  Binding tau;
  std::size_t mu = 1;
  std::size_t dup = 1;
  Binding pdie;
  Binding start_ones;
  std::uint64_t seed = 1;
};

void add_experiment_options(CLI::App& cmd, ExperimentOptions& opt, bool sweep) {
  static std::string config_path_doc;
  cmd.add_option("--config", config_path_doc,
                 "Sectioned key=value file ([problem], [operator], [engine], [sweep]); "
                 "explicit flags override file values");
  cmd.add_option("--problem,--problem.name", opt.problem,
                 "Objective: onemax, leadingones, trap, jump, cliff, hiddenpath, "
                 "partition-weps, partition-file, vc-node, vc-edge")
      ->required();
  auto* n_opt = cmd.add_option("--n,--problem.n", opt.n,
                               "Problem dimension (vertex count for vc-node, edge count for "
                               "generated vc-edge instances)");
  if (!sweep) n_opt->required();
  cmd.add_option("--d,--problem.d", opt.d.text,
                 "Gap size for jump/cliff; a number or an expression over n such as n/4");
  cmd.add_option("--eps,--problem.eps", opt.eps,
                 "hiddenpath path bonus / partition-weps instance parameter");
  cmd.add_option("--eps-approx,--problem.eps-approx", opt.eps_approx,
                 "Partition approximation target: accept makespan <= (1+eps)*OPT bound");
  cmd.add_option("--graph-kind,--problem.graph-kind", opt.graph_kind,
                 "Generated graph family for vc problems: star, complete, path");
  cmd.add_option("--graph-file,--problem.graph-file", opt.graph_file,
                 "DIMACS edge file for vc problems (overrides --graph-kind)");
  cmd.add_option("--instance-file,--problem.instance-file", opt.instance_file,
                 "Partition weights file, one weight per line");

  cmd.add_option("--algo,--operator.algo", opt.algo,
                 "Algorithm: rls, one-plus-one-ea, one-plus-one-ia, one-plus-one-ia-plain, "
                 "fast-ia-gamma, fast-ia-beta-fcm, fast-ia-beta-hmp, fast-ea-beta, "
                 "fast-ea-unif, opt-ia-gamma, opt-ia-beta; adding --tau attaches ageing "
                 "to any of them")
      ->required();
  cmd.add_option("--gamma,--operator.gamma", opt.gamma.text,
                 "Parabolic evaluation parameter in (0,1]; 'auto' binds 1/ln(n); "
                 "expressions over n are accepted");
  cmd.add_option("--beta,--operator.beta", opt.beta.text,
                 "Power-law exponent (default 1.5)");
  cmd.add_option("--p1,--operator.p1", opt.p1.text,
                 "Single-bit mass of the uniform heavy tail (default 1/e)");
  cmd.add_option("--rate,--operator.rate", opt.rate.text,
                 "Bit-flip rate for one-plus-one-ea (default 1/n)");
  cmd.add_flag("--extended,--operator.extended", opt.extended,
               "Extend the fast-ea-beta rate range from n/2 to n");
  cmd.add_flag("--exact-k,--operator.exact-k", opt.exact_k,
               "fast-ea-beta flips exactly chi bits instead of rate chi/n");

  cmd.add_option("--budget,--engine.budget", opt.budget.text,
                 "Evaluation budget (default 1e9); expressions over n are accepted");
  cmd.add_option("--tau,--engine.tau", opt.tau.text,
                 "Ageing threshold; 'auto' binds 2*n*ln(n); setting it switches any "
                 "algorithm to the generational engine");
  cmd.add_option("--mu,--engine.mu", opt.mu, "Population size for the generational engine");
  cmd.add_option("--dup,--engine.dup", opt.dup, "Clones per individual");
  cmd.add_option("--pdie,--engine.pdie", opt.pdie.text,
                 "Ageing removal probability; 'auto' binds 1 - 1/((dup+1)*mu)");
  cmd.add_option("--start-ones,--engine.start-ones", opt.start_ones.text,
                 "Start from the point with this many leading ones instead of a uniform "
                 "random one; expressions over n are accepted, e.g. n-3");
  cmd.add_option("--seed,--engine.seed", opt.seed, "Master seed");
}

std::shared_ptr<const Problem> build_problem(const ExperimentOptions& opt, std::size_t n) {
  const std::string& p = opt.problem;
  auto need_d = [&]() -> std::size_t {
    if (!opt.d.set()) throw ConfigError(p + " requires --d");
    const double v = opt.d.eval(n);
    if (!(v >= 1.0)) throw ConfigError("--d must evaluate to at least 1");
    return static_cast<std::size_t>(std::llround(v));
  };
  auto graph_for = [&](bool edge_repr) {
    if (!opt.graph_file.empty()) {
      std::ifstream in(opt.graph_file);
      if (!in) throw IoError("cannot open graph file '" + opt.graph_file + "'");
      return parse_graph(in);
    }
    const GraphKind kind = graph_kind_from_name(opt.graph_kind);
    if (!edge_repr) return generate_graph(kind, n);
    // n is the genotype length, i.e. the number of edges.
    switch (kind) {
      case GraphKind::star:
      case GraphKind::path:
        return generate_graph(kind, n + 1);
      case GraphKind::complete: {
        const std::size_t v =
            static_cast<std::size_t>(std::llround((1.0 + std::sqrt(1.0 + 8.0 * n)) / 2.0));
        if (v * (v - 1) / 2 != n)
          throw ConfigError("complete graph needs a triangular edge count");
        return generate_graph(kind, v);
      }
    }
    throw ConfigError("unreachable graph kind");
  };

  if (p == "onemax") return std::make_shared<OneMax>(n);
  if (p == "leadingones") return std::make_shared<LeadingOnes>(n);
  if (p == "trap") return std::make_shared<Trap>(n);
  if (p == "jump") return std::make_shared<Jump>(n, need_d());
  if (p == "cliff") return std::make_shared<Cliff>(n, need_d());
  if (p == "hiddenpath") return std::make_shared<HiddenPath>(n, opt.eps);
  if (p == "partition-weps")
    return std::make_shared<PartitionProblem>(make_w_eps(n, opt.eps), opt.eps_approx);
  if (p == "partition-file") {
    if (opt.instance_file.empty()) throw ConfigError("partition-file requires --instance-file");
    std::ifstream in(opt.instance_file);
    if (!in) throw IoError("cannot open instance file '" + opt.instance_file + "'");
    bool resorted = false;
    PartitionInstance inst = load_partition_instance(in, &resorted);
    if (resorted)
      std::cerr << "warning: weights in '" << opt.instance_file
                << "' were not sorted; sorted non-increasing on load\n";
    if (inst.weights.size() != n)
      throw ConfigError("instance has " + std::to_string(inst.weights.size()) +
                        " jobs but --n was " + std::to_string(n));
    return std::make_shared<PartitionProblem>(std::move(inst), opt.eps_approx);
  }
  if (p == "vc-node") return std::make_shared<VertexCoverNodeProblem>(graph_for(false));
  if (p == "vc-edge") return std::make_shared<VertexCoverEdgeProblem>(graph_for(true));
  throw ConfigError("unknown problem '" + p + "'");
}

RunConfig build_run_config(const ExperimentOptions& opt, std::size_t n) {
  AlgorithmSpec spec = algorithm_spec(opt.algo);
  RunConfig config;
  config.op = spec.op;
  config.engine = spec.default_engine;

  if (opt.gamma.set()) {
    if (!opt.gamma.is_auto()) config.op.gamma = opt.gamma.eval(n);
  }
  if (opt.beta.set()) config.op.beta = opt.beta.eval(n);
  if (opt.p1.set()) config.op.p1 = opt.p1.eval(n);
  if (opt.rate.set()) config.op.sbm_rate = opt.rate.eval(n);
  config.op.ea_extended = opt.extended;
  config.op.ea_mode = opt.exact_k ? EaBetaMode::exact_k : EaBetaMode::rate;

  if (opt.tau.set() || config.engine == EngineKind::opt_ia) {
    config.engine = EngineKind::opt_ia;
    if (!opt.tau.set() || opt.tau.is_auto()) {
      const double t = 2.0 * static_cast<double>(n) * std::log(static_cast<double>(n));
      config.ageing.tau = static_cast<std::uint64_t>(std::llround(t));
    } else {
      const double t = opt.tau.eval(n);
      if (!(t >= 1.0)) throw ConfigError("--tau must evaluate to at least 1");
      config.ageing.tau = static_cast<std::uint64_t>(std::llround(t));
    }
    config.ageing.mu = opt.mu;
    config.ageing.dup = opt.dup;
    if (opt.pdie.set() && !opt.pdie.is_auto()) {
      const double v = opt.pdie.eval(n);
      if (v < 0.0 || v > 1.0) throw ConfigError("--pdie must lie in [0, 1]");
      config.ageing.p_die_override = v;
    }
  }

  if (opt.start_ones.set()) {
    const double v = opt.start_ones.eval(n);
    if (v < 0.0 || v > double(n)) throw ConfigError("--start-ones must lie in [0, n]");
    BitString start(n);
    for (std::size_t i = 0; i < std::size_t(std::llround(v)); ++i) start.set(i, true);
    config.initial = std::move(start);
  }

  const double budget = opt.budget.eval(n);
  if (!(budget >= 1.0)) throw ConfigError("--budget must evaluate to at least 1");
  config.budget =
      budget >= 1.8e19 ? kUnlimitedBudget : static_cast<std::uint64_t>(std::llround(budget));
  config.seed = opt.seed;
  return config;
}

SweepLabels labels_for(const ExperimentOptions& opt) {
  SweepLabels labels;
  labels.algorithm = opt.algo;
  labels.operator_name = operator_kind_name(algorithm_spec(opt.algo).op.kind);
  labels.problem = opt.problem;
  return labels;
}

int cmd_run(const ExperimentOptions& opt, std::uint64_t stream) {
  if (opt.algo.find(',') != std::string::npos)
    throw ConfigError("run takes a single algorithm; lists are for sweep");
  auto problem = build_problem(opt, opt.n);
  RunConfig config = build_run_config(opt, opt.n);
  config.stream = stream;

  const SweepLabels labels = labels_for(opt);
  SweepRecord record;
  record.n = opt.n;
  record.replication = stream;
  record.record = run(*problem, config);
  record.algorithm = labels.algorithm;
  record.operator_name = labels.operator_name;
  record.problem_descriptor = problem->descriptor();
  record.params_json = run_params_json(config, opt.n);
  write_runs_csv(std::cout, {record});
  return record.record.success ? kExitOk : kExitBudget;
}

struct SweepOptions {
  ExperimentOptions exp;
  std::vector<std::size_t> dims;
  std::size_t reps = 1;
  unsigned jobs = 0;
  std::string out;
  std::string summary_out;
  std::string model;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) items.push_back(item);
  return items;
}

int cmd_sweep(const SweepOptions& opt) {
  const auto algorithms = split_list(opt.exp.algo);
  if (algorithms.empty()) throw ConfigError("sweep needs at least one algorithm");

  const unsigned jobs = opt.jobs > 0 ? opt.jobs : std::thread::hardware_concurrency();

  std::vector<SweepRecord> all_records;
  struct Group {
    std::vector<SummaryRow> summaries;
    std::optional<FitResult> fit;
  };
  std::vector<Group> groups;
  for (const auto& algo : algorithms) {
    ExperimentOptions exp = opt.exp;
    exp.algo = algo;
    SweepConfig sweep;
    sweep.dimensions = opt.dims;
    sweep.replications = opt.reps;
    sweep.master_seed = exp.seed;
    sweep.labels = labels_for(exp);
    sweep.problem_for = [&exp](std::size_t n) { return build_problem(exp, n); };
    sweep.config_for = [&exp](std::size_t n) { return build_run_config(exp, n); };
    auto records = run_sweep(sweep, jobs);

    Group group;
    group.summaries = aggregate(records);
    if (!opt.model.empty())
      group.fit = fit_scaling(group.summaries, ModelExpr::parse(opt.model));
    groups.push_back(std::move(group));
    for (auto& r : records) all_records.push_back(std::move(r));
  }

  std::ofstream runs_out(opt.out);
  if (!runs_out) throw IoError("cannot write '" + opt.out + "'");
  write_runs_csv(runs_out, all_records);
  runs_out.close();
  if (!runs_out) throw IoError("failed while writing '" + opt.out + "'");

  std::string summary_path = opt.summary_out;
  if (summary_path.empty()) {
    summary_path = opt.out;
    const auto dot = summary_path.rfind(".csv");
    if (dot != std::string::npos && dot == summary_path.size() - 4)
      summary_path.resize(dot);
    summary_path += ".summary.csv";
  }
  std::ofstream summary_out(summary_path);
  if (!summary_out) throw IoError("cannot write '" + summary_path + "'");
  std::size_t summary_rows = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    write_summary_csv(summary_out, groups[g].summaries,
                      groups[g].fit ? &*groups[g].fit : nullptr, g == 0);
    summary_rows += groups[g].summaries.size();
  }
  summary_out.close();
  if (!summary_out) throw IoError("failed while writing '" + summary_path + "'");

  std::cerr << "wrote " << all_records.size() << " runs to " << opt.out << " and "
            << summary_rows << " summary rows to " << summary_path << '\n';
  return kExitOk;
}

int cmd_fit(const std::string& input, const std::string& model_text) {
  std::ifstream in(input);
  if (!in) throw IoError("cannot open '" + input + "'");
  const auto runs = read_runs_csv(in);
  if (runs.empty()) throw ConfigError("no runs in '" + input + "'");
  const auto summaries = aggregate_loaded(runs);
  const ModelExpr model = ModelExpr::parse(model_text);
  const FitResult fit = fit_scaling(summaries, model);

  std::cout << "model: " << fit.model << '\n';
  for (const auto& row : summaries) {
    std::cout << "n=" << row.n << " successes=" << row.successes << "/" << row.replications
              << " mean=" << row.mean;
    for (const auto& [n, r] : fit.ratios)
      if (n == row.n) std::cout << " ratio=" << r;
    std::cout << '\n';
  }
  std::cout << "spread: " << fit.spread << '\n';
  if (fit.slope)
    std::cout << "loglog_slope: " << *fit.slope << "\nr_squared: " << *fit.r_squared << '\n';
  else
    std::cout << "loglog_slope: unavailable (need at least two dimensions)\n";
  return kExitOk;
}

struct InstanceOptions {
  std::string kind;  // partition-weps | graph
  std::size_t n = 0;
  double eps = 0.2;
  std::string graph_kind = "star";
  std::string out;
};

int cmd_instance(const InstanceOptions& opt) {
  std::ofstream out(opt.out);
  if (!out) throw IoError("cannot write '" + opt.out + "'");
  if (opt.kind == "partition-weps") {
    save_partition_instance(out, make_w_eps(opt.n, opt.eps));
  } else if (opt.kind == "graph") {
    serialise_graph(out, generate_graph(graph_kind_from_name(opt.graph_kind), opt.n));
  } else {
    throw ConfigError("unknown instance kind '" + opt.kind +
                      "' (expected partition-weps or graph)");
  }
  out.close();
  if (!out) throw IoError("failed while writing '" + opt.out + "'");
  return kExitOk;
}

/// Reads a sectioned key=value config file into long-option arguments:
/// "[problem]" followed by "n=32" becomes "--problem.n=32". Comment lines
/// start with '#' or ';'.
std::vector<std::string> config_file_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::vector<std::string> args;
  std::string line, section;
  auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
  };
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    if (text.front() == '[') {
      if (text.back() != ']')
        throw ConfigError(path + ":" + std::to_string(line_no) + ": unterminated section");
      section = trim(text.substr(1, text.size() - 2));
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty())
      throw ConfigError(path + ":" + std::to_string(line_no) + ": empty key");
    args.push_back("--" + (section.empty() ? key : section + "." + key) + "=" + value);
  }
  return args;
}

/// Extracts "--config PATH" from the raw argument list, if present.
std::optional<std::string> take_config_path(std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config requires a file path");
      const std::string path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      return path;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      const std::string path = args[i].substr(9);
      args.erase(args.begin() + i);
      return path;
    }
  }
  return std::nullopt;
}

/// Splices config-derived arguments in front of the explicit command line,
/// dropping any config entry whose option was also given explicitly so that
/// flags override the file.
std::vector<std::string> merge_config_args(const CLI::App& subcommand,
                                           std::vector<std::string> explicit_args,
                                           const std::vector<std::string>& config_args) {
  auto given_explicitly = [&](const CLI::Option* option) {
    for (const std::string& name : option->get_lnames()) {
      const std::string flag = "--" + name;
      for (const std::string& arg : explicit_args)
        if (arg == flag || arg.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::vector<std::string> merged;
  for (const std::string& arg : config_args) {
    const std::string name = arg.substr(0, arg.find('='));
    const CLI::Option* option =
        const_cast<CLI::App&>(subcommand).get_option_no_throw(name);
    // Unknown keys stay in the list so parsing rejects them loudly.
    if (option != nullptr && given_explicitly(option)) continue;
    merged.push_back(arg);
  }
  for (std::string& arg : explicit_args) merged.push_back(std::move(arg));
  return merged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-Boolean optimisation harness for hypermutation-based algorithms"};
  app.require_subcommand(1);

  ExperimentOptions run_opt;
  std::uint64_t run_stream = 0;
  auto* run_cmd = app.add_subcommand("run", "Execute a single replication, CSV row on stdout");
  add_experiment_options(*run_cmd, run_opt, /*sweep=*/false);
  run_cmd->add_option("--stream", run_stream, "Random stream id (default 0)");

  SweepOptions sweep_opt;
  auto* sweep_cmd = app.add_subcommand("sweep", "Replication sweep over a dimension list");
  add_experiment_options(*sweep_cmd, sweep_opt.exp, /*sweep=*/true);
  sweep_cmd->add_option("--dims,--sweep.dims", sweep_opt.dims, "Dimensions, e.g. 64,128,256")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--reps,--sweep.reps", sweep_opt.reps, "Replications per dimension")
      ->required();
  sweep_cmd->add_option("--jobs,--sweep.jobs", sweep_opt.jobs,
                        "Worker threads (default: hardware concurrency)");
  sweep_cmd->add_option("--out,--sweep.out", sweep_opt.out, "Per-run CSV output path")
      ->required();
  sweep_cmd->add_option("--summary-out,--sweep.summary-out", sweep_opt.summary_out,
                        "Summary CSV path (default: <out>.summary.csv)");
  sweep_cmd->add_option("--model,--sweep.model", sweep_opt.model,
                        "Optional scaling model for the summary ratio column");

  std::string fit_input, fit_model;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a scaling model to a results CSV");
  fit_cmd->add_option("--input", fit_input, "Per-run CSV produced by sweep")->required();
  fit_cmd->add_option("--model", fit_model, "Model over n, e.g. n*log(n) or binom(n,4)*n")
      ->required();

  InstanceOptions inst_opt;
  auto* inst_cmd = app.add_subcommand("instance", "Write a benchmark instance file");
  inst_cmd->add_option("instance-kind", inst_opt.kind, "partition-weps or graph")->required();
  inst_cmd->add_option("--n", inst_opt.n, "Jobs (partition) or vertices (graph)")->required();
  inst_cmd->add_option("--eps", inst_opt.eps, "Partition instance parameter");
  inst_cmd->add_option("--kind,--graph-kind", inst_opt.graph_kind,
                       "Graph family: star, complete, path");
  inst_cmd->add_option("--out", inst_opt.out, "Output path")->required();

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty()) {
      CLI::App* sub = nullptr;
      if (args.front() == "run")
        sub = run_cmd;
      else if (args.front() == "sweep")
        sub = sweep_cmd;
      if (sub != nullptr) {
        std::vector<std::string> rest(args.begin() + 1, args.end());
        if (const auto config_path = take_config_path(rest)) {
          rest = merge_config_args(*sub, std::move(rest), config_file_args(*config_path));
        }
        args.assign(rest.begin(), rest.end());
        args.insert(args.begin(), sub->get_name());
      }
    }
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_opt, run_stream);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opt);
    if (fit_cmd->parsed()) return cmd_fit(fit_input, fit_model);
    if (inst_cmd->parsed()) return cmd_instance(inst_opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
