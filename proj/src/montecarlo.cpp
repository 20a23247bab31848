#include "stardisc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include <boost/math/distributions/beta.hpp>

#include "stardisc/bounds.hpp"
#include "stardisc/errors.hpp"

namespace stardisc {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

TrialOutcome run_trial(const ExperimentConfig& cfg, std::uint64_t index, double threshold) {
  const PointSet points = generate_uniform(cfg.s, cfg.n, cfg.seed, index);
  if (cfg.method == Method::exact) {
    const double d = star_discrepancy_exact(points, cfg.budget).value;
    return {index, d, d <= threshold};
  }
  const double d = star_discrepancy_cover(points, cfg.delta, cfg.budget).value + cfg.delta;
  return {index, d, d <= threshold};
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.s == 0) throw input_error("s must be at least 1");
  if (cfg.n == 0) throw input_error("N must be at least 1");
  if (cfg.trials == 0) throw input_error("trials must be at least 1");
  log_inverse_failure(cfg.q);
  if (!(cfg.ci_level > 0.0 && cfg.ci_level < 1.0))
    throw input_error("confidence level must lie in (0,1)");
  if (cfg.method == Method::cover && !(cfg.delta > 0.0 && cfg.delta <= 1.0))
    throw input_error("delta must lie in (0,1]");
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

TrialStream::TrialStream(std::uint64_t master_seed, std::uint64_t trial_index)
    : key_{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32)},
      trial_(trial_index) {}

double TrialStream::next_uniform() {
  if (used_ >= 4) {
    buffer_ = Philox4x32::block(
        {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
         static_cast<std::uint32_t>(trial_), static_cast<std::uint32_t>(trial_ >> 32)},
        key_);
    ++block_;
    used_ = 0;
  }
  const std::uint64_t bits =
      (static_cast<std::uint64_t>(buffer_[used_]) << 32) | buffer_[used_ + 1];
  used_ += 2;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

PointSet generate_uniform(std::size_t s, std::size_t n, std::uint64_t master_seed,
                          std::uint64_t trial_index) {
  if (s == 0 || n == 0) throw input_error("generate_uniform needs s >= 1 and N >= 1");
  TrialStream stream(master_seed, trial_index);
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(s);
    for (auto& v : c) v = stream.next_uniform();
    points.emplace_back(std::move(c));
  }
  return PointSet(s, std::move(points));
}

std::pair<double, double> binomial_ci(std::uint64_t successes, std::uint64_t trials,
                                      double level) {
  if (trials == 0 || successes > trials)
    throw input_error("binomial_ci needs 0 <= successes <= trials and trials >= 1");
  if (!(level > 0.0 && level < 1.0)) throw input_error("confidence level must lie in (0,1)");
  const double alpha = 1.0 - level;
  const auto x = static_cast<double>(successes);
  const auto n = static_cast<double>(trials);
  double low = 0.0, high = 1.0;
  if (successes > 0)
    low = boost::math::quantile(boost::math::beta_distribution<double>(x, n - x + 1.0), alpha / 2);
  if (successes < trials)
    high = boost::math::quantile(boost::math::beta_distribution<double>(x + 1.0, n - x),
                                 1.0 - alpha / 2);
  return {low, high};
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const double threshold = theorem_bound(cfg.q, cfg.s, cfg.n);
  std::vector<TrialOutcome> outcomes(cfg.trials);
  std::vector<std::exception_ptr> errors(cfg.trials);

  unsigned workers = cfg.parallelism != 0 ? cfg.parallelism
                                          : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::uint64_t i = next++; i < cfg.trials && !failed; i = next++) {
      try {
        outcomes[i] = run_trial(cfg, i, threshold);
      } catch (...) {
        errors[i] = std::current_exception();
        failed = true;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (std::uint64_t i = 0; i < cfg.trials; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const capacity_error& e) {
      throw capacity_error("trial " + std::to_string(i) + ": " + e.what());
    }
  }

  ExperimentReport report{cfg, threshold, 0, 0.0, 0.0, 0.0, cfg.method == Method::cover, {}, {}};
  const double scale = std::sqrt(static_cast<double>(cfg.n) / static_cast<double>(cfg.s));
  std::vector<double> scaled;
  scaled.reserve(cfg.trials);
  double sum = 0.0;
  for (const auto& o : outcomes) {
    report.pass_count += o.pass ? 1 : 0;
    scaled.push_back(scale * o.discrepancy);
    sum += scaled.back();
  }
  report.empirical_probability =
      static_cast<double>(report.pass_count) / static_cast<double>(cfg.trials);
  std::tie(report.ci_low, report.ci_high) = binomial_ci(report.pass_count, cfg.trials, cfg.ci_level);

  std::sort(scaled.begin(), scaled.end());
  const std::size_t m = scaled.size();
  report.scaled = {scaled.front(),
                   m % 2 == 1 ? scaled[m / 2] : 0.5 * (scaled[m / 2 - 1] + scaled[m / 2]),
                   scaled.back(), sum / static_cast<double>(m)};
  report.outcomes = std::move(outcomes);
  return report;
}

}  // namespace stardisc
