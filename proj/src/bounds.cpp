#include "stardisc/bounds.hpp"

#include <cmath>
#include <algorithm>
#include <string>
#include <numbers>

#include "stardisc/covers.hpp"
#include "stardisc/errors.hpp"

namespace stardisc {
namespace {

constexpr double kLeading = 5.7;
constexpr double kOffset = 4.9;
constexpr double kScaledCk = 2.08;
constexpr double kSumCk = 3.28;
constexpr double kSumCkOffset = 5.98;
constexpr double kC0Offset = 4.88;
constexpr double kC1Offset = 5.39;
constexpr double kRegimeFactor = 32.0;
// Relative slack for checks that are algebraic identities in exact arithmetic.
constexpr double kIdentityTolerance = 1e-10;

void require_dim(std::size_t s) {
  if (s == 0) throw input_error("dimension s must be at least 1");
}

void require_count(std::uint64_t n) {
  if (n == 0) throw input_error("number of points N must be at least 1");
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw input_error(std::string(name) + " must be a positive finite number");
}

double checked_ceil(double v) {
  if (!(v < 1.8e19)) throw capacity_error("result exceeds the 64-bit integer range");
  return std::ceil(v);
}

}  // namespace

double log_inverse_failure(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw input_error("q must lie in the open interval (0,1), got " + std::to_string(q));
  return -std::log1p(-q);
}

double theorem_coefficient(double q, std::size_t s) {
  require_dim(s);
  return kLeading * std::sqrt(kOffset + log_inverse_failure(q) / static_cast<double>(s));
}

double theorem_bound(double q, std::size_t s, std::size_t n) {
  require_count(n);
  return theorem_coefficient(q, s) * std::sqrt(static_cast<double>(s) / static_cast<double>(n));
}

double corollary_coefficient(double q) {
  return kLeading * std::sqrt(kOffset + log_inverse_failure(q));
}

double corollary_bound(double q, std::size_t s, std::size_t n) {
  require_dim(s);
  require_count(n);
  return corollary_coefficient(q) * std::sqrt(static_cast<double>(s) / static_cast<double>(n));
}

double round_up_cents(double x) { return std::ceil(x * 100.0 - 1e-9) / 100.0; }

CoefficientTable coefficient_table(std::span<const double> qs, std::span<const std::size_t> dims) {
  if (qs.empty() || dims.empty()) throw input_error("table needs at least one q and one s");
  CoefficientTable table{{qs.begin(), qs.end()}, {dims.begin(), dims.end()}, {}};
  for (std::size_t s : dims) {
    auto& row = table.values.emplace_back();
    for (double q : qs) row.push_back(theorem_coefficient(q, s));
  }
  return table;
}

std::uint64_t inverse_discrepancy_theorem(double q, std::size_t s, double eps) {
  require_dim(s);
  require_positive(eps, "eps");
  const double l = log_inverse_failure(q);
  const double raw = kLeading * kLeading * (kOffset * static_cast<double>(s) + l) / (eps * eps);
  auto n = static_cast<std::uint64_t>(std::max(1.0, checked_ceil(raw)));
  // Settle rounding in the closed form against the bound itself.
  while (n > 1 && theorem_bound(q, s, n - 1) <= eps) --n;
  while (theorem_bound(q, s, n) > eps) ++n;
  return n;
}

std::uint64_t inverse_discrepancy_existence(std::size_t s, double eps) {
  require_dim(s);
  require_positive(eps, "eps");
  return static_cast<std::uint64_t>(
      std::max(1.0, checked_ceil(100.0 * static_cast<double>(s) / (eps * eps))));
}

std::string_view to_string(TailInequality t) {
  switch (t) {
    case TailInequality::bernstein_generic: return "bernstein_generic";
    case TailInequality::bernstein_k: return "bernstein_k";
    case TailInequality::hoeffding: return "hoeffding";
  }
  return "unknown";
}

TailBoundResult hoeffding_tail(std::size_t n, double t) {
  require_count(n);
  require_positive(t, "t");
  return {2.0 * std::exp(-2.0 * t * t / static_cast<double>(n)), TailInequality::hoeffding};
}

TailBoundResult bernstein_tail_k(std::size_t n, unsigned k, double t) {
  require_count(n);
  require_positive(t, "t");
  if (k < 2) throw input_error("the specialised Bernstein bound needs k >= 2");
  const double p = std::ldexp(1.0, -static_cast<int>(k));
  const double sum_var = static_cast<double>(n) * p * (1.0 - p);
  return {2.0 * std::exp(-t * t / (2.0 * sum_var + 2.0 * t / 3.0)), TailInequality::bernstein_k};
}

TailBoundResult bernstein_tail_generic(double sum_var, double bound_c, double t) {
  if (!(sum_var >= 0.0)) throw input_error("sum of variances must be non-negative");
  require_positive(bound_c, "C");
  require_positive(t, "t");
  return {2.0 * std::exp(-t * t / (2.0 * sum_var + 2.0 * bound_c * t / 3.0)),
          TailInequality::bernstein_generic};
}

double trivial_regime_threshold(double q, std::size_t s) {
  require_dim(s);
  return kRegimeFactor * (static_cast<double>(s) + log_inverse_failure(q));
}

TheoremConstants build_constants(double q, std::size_t s, std::uint64_t n) {
  const double threshold = trivial_regime_threshold(q, s);
  if (static_cast<double>(n) < threshold)
    throw regime_error("trivial regime: N = " + std::to_string(n) + " is below 32(s + L) = " +
                           std::to_string(threshold),
                       threshold);
  const double l = log_inverse_failure(q);
  const double sd = static_cast<double>(s);
  const double levels =
      std::ceil((std::log2(static_cast<double>(n)) - std::log2(sd + l)) / 2.0);

  TheoremConstants tc{q, s, n, l, static_cast<unsigned>(levels), {}, {}};
  const unsigned big_k = tc.levels;
  const double tail = kScaledCk * 4.0 * std::ldexp(1.0, -static_cast<int>(big_k)) / 3.0;
  const double ln8 = 3.0 * std::numbers::ln2;

  tc.c.push_back(std::sqrt((1.0 + std::log(6.0)) / 2.0 + (ln8 + l) / (2.0 * sd)));
  tc.c.push_back(std::sqrt((1.0 + std::log(10.0)) / 2.0 + (ln8 + l) / (2.0 * sd)));
  for (unsigned k = 2; k <= big_k; ++k) {
    const double p = std::ldexp(1.0, -static_cast<int>(k));
    const double lam = std::sqrt(2.0 * p * (1.0 - p) + tail);
    const double two_k1 = std::ldexp(1.0, static_cast<int>(k) + 1);
    const double inner = 1.0 + std::log(2.0 * (two_k1 + 1.0)) +
                         (static_cast<double>(k + 1) * std::numbers::ln2 + l) / sd;
    tc.lambda.push_back(lam);
    tc.c.push_back(std::sqrt(inner) * lam);
  }
  return tc;
}

AuditReport audit_proof(double q, std::size_t s, std::uint64_t n) {
  AuditReport report{build_constants(q, s, n), {}, true};
  const TheoremConstants& tc = report.constants;
  const double l = tc.log_inv;
  const double sd = static_cast<double>(s);
  const double nd = static_cast<double>(n);
  const double ratio = l / sd;
  const unsigned big_k = tc.levels;
  const double scale = std::ldexp(1.0, -static_cast<int>(big_k));

  auto add = [&](std::string name, double lhs, double rhs, double tol = 0.0) {
    const bool pass = lhs <= rhs + tol;
    report.overall = report.overall && pass;
    report.checks.push_back({std::move(name), lhs, rhs, pass});
  };
  auto add_strict = [&](std::string name, double lhs, double rhs) {
    const bool pass = lhs < rhs;
    report.overall = report.overall && pass;
    report.checks.push_back({std::move(name), lhs, rhs, pass});
  };
  auto rel = [](double v) { return kIdentityTolerance * std::abs(v); };

  add("regime", trivial_regime_threshold(q, s), nd);
  add("K_at_least_3", 3.0, static_cast<double>(big_k));
  add("K_interval_lower", std::sqrt(sd + l) / (2.0 * std::sqrt(nd)), scale);
  add("K_interval_upper", scale, std::sqrt(sd + l) / std::sqrt(nd));
  add("c0_approx", tc.c[0], std::sqrt(kC0Offset + ratio) / std::numbers::sqrt2);
  add("c1_approx", tc.c[1], std::sqrt(kC1Offset + ratio) / std::numbers::sqrt2);

  double sum_high = 0.0;
  for (unsigned k = 2; k <= big_k; ++k) {
    add("ck_scaled_k" + std::to_string(k), tc.c[k] * std::sqrt(sd) / std::sqrt(sd + l),
        kScaledCk);
    sum_high += tc.c[k];
  }
  add("ck_sum_approx", sum_high, kSumCk * std::sqrt(kSumCkOffset + ratio));

  const double sum_all = tc.c[0] + tc.c[1] + sum_high;
  add("final_assembly", std::sqrt(1.0 + ratio) + sum_all, kLeading * std::sqrt(kOffset + ratio));

  // Probability budget, per level in log-space, then summed.
  const double log_fail = std::log1p(-q);
  double total = 0.0;
  for (unsigned k = 0; k <= 1; ++k) {
    const double lhs = class_cardinality_bound(s, k).log_value + std::numbers::ln2 -
                       2.0 * tc.c[k] * tc.c[k] * sd;
    const double rhs = log_fail - 2.0 * std::numbers::ln2;
    add("log_budget_k" + std::to_string(k), lhs, rhs, rel(rhs));
    total += std::exp(lhs);
  }
  const double tail = kScaledCk * 4.0 * scale / 3.0;
  double geometric = 0.75;
  for (unsigned k = 2; k <= big_k; ++k) {
    const double p = std::ldexp(1.0, -static_cast<int>(k));
    const double denom = 2.0 * p * (1.0 - p) + tail;
    const double lhs = class_cardinality_bound(s, k).log_value + std::numbers::ln2 -
                       tc.c[k] * tc.c[k] * sd / denom;
    const double rhs = log_fail - static_cast<double>(k) * std::numbers::ln2;
    add("log_budget_k" + std::to_string(k), lhs, rhs, rel(rhs));
    total += std::exp(lhs);
    if (k >= 3) geometric += p;
  }
  const double fail = 1.0 - q;
  add("budget_total", total, geometric * fail, rel(geometric * fail));
  add_strict("budget_below_failure", geometric * fail, fail);
  return report;
}

}  // namespace stardisc
