#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "stardisc/core.hpp"
#include "stardisc/discrepancy.hpp"

namespace stardisc {

/// Philox4x32-10 counter-based generator (Salmon et al., Random123).
/// A 128-bit counter and a 64-bit key map to four 32-bit words.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::string_view kName = "philox4x32-10";
  static constexpr int kVersion = 1;

  static Counter block(Counter counter, Key key);
};

/// Uniform doubles on [0,1) for one trial of one experiment. The key is the
/// master seed and the upper half of the counter is the trial index, so
/// every (seed, trial) pair is an independent stream of 2^64 blocks.
class TrialStream {
 public:
  TrialStream(std::uint64_t master_seed, std::uint64_t trial_index);

  double next_uniform();

 private:
  Philox4x32::Key key_;
  std::uint64_t trial_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

/// N i.i.d. uniform points in [0,1)^s from the stream (seed, trial_index).
PointSet generate_uniform(std::size_t s, std::size_t n, std::uint64_t master_seed,
                          std::uint64_t trial_index = 0);

/// Two-sided Clopper-Pearson interval for a binomial proportion.
std::pair<double, double> binomial_ci(std::uint64_t successes, std::uint64_t trials,
                                      double level);

struct ExperimentConfig {
  std::size_t s = 2;
  std::size_t n = 128;
  double q = 0.9;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  Method method = Method::exact;
  double delta = 0.01;      // cover method only
  unsigned parallelism = 0;  // 0 selects the hardware concurrency
  std::uint64_t budget = kDefaultWorkBudget;
  double ci_level = 0.99;
};

struct TrialOutcome {
  std::uint64_t index;
  double discrepancy;  // D*, or value + delta under the cover method
  bool pass;
};

struct ScaledSummary {
  double min;
  double median;
  double max;
  double mean;
};

struct ExperimentReport {
  ExperimentConfig config;
  double threshold;
  std::uint64_t pass_count;
  double empirical_probability;
  double ci_low;
  double ci_high;
  bool surrogate;  // discrepancies are cover upper ends, not exact values
  ScaledSummary scaled;  // of sqrt(N/s) * discrepancy
  std::vector<TrialOutcome> outcomes;
};

/// Draws cfg.trials point sets and counts how many meet theorem_bound.
/// Results do not depend on cfg.parallelism. A capacity_error names the
/// first failing trial.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace stardisc
