#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "fastia/harness.hpp"
#include "json.hpp"

namespace fastia {

const char* const kRunsCsvHeader =
    "run_id,seed,algorithm,operator,problem,n,params_json,evaluations,generations,success,"
    "best_fitness,first_hit_evaluation";
const char* const kSummaryCsvHeader = "n,mean,median,stderr,success_rate,ratio,model";

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // Trim to the shortest representation that still round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[64];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    quoted.push_back(c);
    if (c == '"') quoted.push_back('"');
  }
  quoted.push_back('"');
  return quoted;
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

std::string run_params_json(const RunConfig& config, std::size_t n) {
  nlohmann::json j;
  const MutationOperator op(config.op, n);
  switch (config.op.kind) {
    case OperatorKind::fcm_gamma:
      j["gamma"] = op.gamma();
      break;
    case OperatorKind::fcm_beta:
    case OperatorKind::hmp_beta:
      j["beta"] = op.beta();
      break;
    case OperatorKind::ea_beta:
      j["beta"] = op.beta();
      j["mode"] = config.op.ea_mode == EaBetaMode::rate ? "rate" : "exact-k";
      j["extended"] = config.op.ea_extended;
      break;
    case OperatorKind::ea_unif:
      j["p1"] = op.p1();
      break;
    case OperatorKind::sbm:
      j["rate"] = op.rate();
      break;
    default:
      break;
  }
  if (config.budget != kUnlimitedBudget) j["budget"] = config.budget;
  if (config.engine == EngineKind::opt_ia) {
    j["mu"] = config.ageing.mu;
    j["dup"] = config.ageing.dup;
    if (config.ageing.tau != kNoAgeing) j["tau"] = config.ageing.tau;
    j["pdie"] = config.ageing.p_die();
  } else if (config.ageing.tau != kNoAgeing) {
    j["tau"] = config.ageing.tau;
  }
  return j.dump();
}

void write_runs_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kRunsCsvHeader << '\n';
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SweepRecord& r = records[i];
    const RunRecord& rec = r.record;
    const std::uint64_t evaluations =
        rec.success ? *rec.evaluations_to_target : rec.evaluations_used;
    out << i << ',' << rec.seed << ',' << csv_quote(r.algorithm) << ','
        << csv_quote(r.operator_name) << ',' << csv_quote(r.problem_descriptor) << ','
        << r.n << ',' << csv_quote(r.params_json) << ',' << evaluations << ','
        << rec.generations << ',' << (rec.success ? "true" : "false") << ','
        << format_double(rec.best_fitness) << ',' << rec.best_first_hit_evaluation << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& summaries,
                       const FitResult* fit, bool with_header) {
  if (with_header) out << kSummaryCsvHeader << '\n';
  for (const auto& row : summaries) {
    std::string ratio, model;
    if (fit) {
      model = fit->model;
      for (const auto& [n, r] : fit->ratios)
        if (n == row.n) ratio = format_double(r);
    }
    out << row.n << ',' << format_double(row.mean) << ',' << format_double(row.median) << ','
        << format_double(row.stderr_mean) << ',' << format_double(row.success_rate) << ','
        << ratio << ',' << csv_quote(model) << '\n';
  }
}

std::vector<LoadedRun> read_runs_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty results file");
  if (line != kRunsCsvHeader)
    throw ParseError("unexpected results header (expected '" + std::string(kRunsCsvHeader) +
                         "')",
                     1);
  std::vector<LoadedRun> runs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv_row(line);
    if (fields.size() != 12) throw ParseError("expected 12 columns", line_no);
    LoadedRun run;
    try {
      run.n = static_cast<std::size_t>(std::stoull(fields[5]));
      run.evaluations = std::stod(fields[7]);
    } catch (const std::exception&) {
      throw ParseError("malformed numeric field", line_no);
    }
    if (fields[9] == "true")
      run.success = true;
    else if (fields[9] == "false")
      run.success = false;
    else
      throw ParseError("success column must be true or false", line_no);
    runs.push_back(run);
  }
  return runs;
}

}  // namespace fastia
