#include "fastia/partition.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace fastia {

namespace {
constexpr double kTargetTolerance = 1e-9;
}

PartitionInstance make_partition_instance(std::vector<double> weights, bool* was_resorted) {
  if (weights.empty()) throw ConfigError("partition: instance must contain at least one job");
  for (double w : weights)
    if (!(w > 0.0)) throw ConfigError("partition: processing times must be positive");
  const bool sorted = std::is_sorted(weights.begin(), weights.end(), std::greater<double>());
  if (!sorted) std::sort(weights.begin(), weights.end(), std::greater<double>());
  if (was_resorted) *was_resorted = !sorted;
  PartitionInstance inst;
  inst.weights = std::move(weights);
  double total = 0.0;
  for (double w : inst.weights) total += w;
  inst.total = total;
  return inst;
}

PartitionInstance make_w_eps(std::size_t n, double eps) {
  if (n < 4) throw ConfigError("w_eps: n must be at least 4");
  if (!(eps > 0.0) || !(eps < 1.0 / 3.0)) throw ConfigError("w_eps: eps must lie in (0, 1/3)");
  const double large = 1.0 / 3.0 - eps / 4.0;
  const double small = (1.0 / 3.0 + eps / 2.0) / static_cast<double>(n - 2);
  std::vector<double> weights(n, small);
  weights[0] = weights[1] = large;
  return make_partition_instance(std::move(weights));
}

double partition_makespan(const BitString& x, const PartitionInstance& inst) {
  double load_one = 0.0;
  for (std::size_t i = 0; i < inst.weights.size(); ++i)
    if (x.test(i)) load_one += inst.weights[i];
  return std::max(load_one, inst.total - load_one);
}

bool partition_target(double fitness, const PartitionInstance& inst, double eps_approx) {
  return fitness <= (1.0 + eps_approx) * inst.opt_lower_bound() + kTargetTolerance;
}

PartitionInstance load_partition_instance(std::istream& in, bool* was_resorted) {
  std::vector<double> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    double w;
    if (!(ls >> w)) {
      std::string token;
      std::istringstream probe(line);
      if (!(probe >> token)) continue;  // blank line
      throw ParseError("expected one weight per line", line_no);
    }
    std::string rest;
    if (ls >> rest) throw ParseError("trailing content after weight", line_no);
    if (!(w > 0.0) || !std::isfinite(w)) throw ParseError("weights must be positive", line_no);
    weights.push_back(w);
  }
  if (weights.empty()) throw ParseError("instance file contains no weights");
  return make_partition_instance(std::move(weights), was_resorted);
}

void save_partition_instance(std::ostream& out, const PartitionInstance& inst) {
  out.precision(17);
  for (double w : inst.weights) out << w << '\n';
}

PartitionProblem::PartitionProblem(PartitionInstance inst, double eps_approx)
    : instance_(std::move(inst)), eps_approx_(eps_approx) {
  if (eps_approx < 0.0) throw ConfigError("partition: approximation eps must be non-negative");
}

std::string PartitionProblem::descriptor() const {
  std::ostringstream os;
  os << "partition-" << instance_.weights.size() << "-approx" << eps_approx_;
  return os.str();
}

}  // namespace fastia
