#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fastia/problems.hpp"

namespace fastia {

/// Two-machine number partitioning instance: processing times sorted
/// non-increasing, W is the total load.
struct PartitionInstance {
  std::vector<double> weights;  // p_1 >= p_2 >= ... >= p_n > 0
  double total = 0.0;           // W

  /// Lower bound on the optimal makespan: max(p_1, W/2).
  double opt_lower_bound() const { return weights.empty() ? 0.0 : std::max(weights[0], total / 2.0); }
};

/// Sorts weights non-increasing if needed (warning goes to the caller via the
/// returned flag), validates positivity, computes the total.
PartitionInstance make_partition_instance(std::vector<double> weights, bool* was_resorted = nullptr);

/// Worst-case EA instance: two large jobs of 1/3 - eps/4 and n-2 small jobs
/// sharing 1/3 + eps/2; W = 1, optimal makespan exactly 1/2.
PartitionInstance make_w_eps(std::size_t n, double eps);

/// Load of the fuller machine; bit i = 1 assigns job i to machine 1.
double partition_makespan(const BitString& x, const PartitionInstance& inst);

/// True iff fitness certifies a (1 + eps_approx) approximation against the
/// instance's optimal-makespan lower bound.
bool partition_target(double fitness, const PartitionInstance& inst, double eps_approx);

/// One weight per line; enforces descending order on load (sorts + warns via
/// ParseError-free path). Throws ParseError on malformed lines.
PartitionInstance load_partition_instance(std::istream& in, bool* was_resorted = nullptr);
void save_partition_instance(std::ostream& out, const PartitionInstance& inst);

class PartitionProblem final : public Problem {
 public:
  PartitionProblem(PartitionInstance inst, double eps_approx);

  std::size_t dimension() const override { return instance_.weights.size(); }
  Direction direction() const override { return Direction::minimise; }
  double evaluate(const BitString& x) const override {
    return partition_makespan(x, instance_);
  }
  bool is_target(const BitString&, double fitness) const override {
    return partition_target(fitness, instance_, eps_approx_);
  }
  std::string descriptor() const override;

  const PartitionInstance& instance() const { return instance_; }

 private:
  PartitionInstance instance_;
  double eps_approx_;
};

}  // namespace fastia
