#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stardisc {

/// ln(1/(1-q)) in nats. Throws input_error unless 0 < q < 1.
double log_inverse_failure(double q);

/// c(q,s) = 5.7 sqrt(4.9 + ln(1/(1-q))/s), the multiplier of sqrt(s/N).
double theorem_coefficient(double q, std::size_t s);

/// Discrepancy level met by a random N-point set with probability >= q.
double theorem_bound(double q, std::size_t s, std::size_t n);

/// 5.7 sqrt(4.9 + ln(1/(1-q))), valid uniformly in s.
double corollary_coefficient(double q);
double corollary_bound(double q, std::size_t s, std::size_t n);

/// Rounds up to two decimals. Coefficients are upper bounds, so displayed
/// values never understate them.
double round_up_cents(double x);

struct CoefficientTable {
  std::vector<double> qs;
  std::vector<std::size_t> dims;
  std::vector<std::vector<double>> values;  // values[row for dims[i]][column for qs[j]]
};

CoefficientTable coefficient_table(std::span<const double> qs, std::span<const std::size_t> dims);

/// Smallest N with theorem_bound(q, s, N) <= eps.
std::uint64_t inverse_discrepancy_theorem(double q, std::size_t s, double eps);

/// ceil(100 s / eps^2), at least 1: the existence bound with constant 10.
std::uint64_t inverse_discrepancy_existence(std::size_t s, double eps);

enum class TailInequality { bernstein_generic, bernstein_k, hoeffding };

std::string_view to_string(TailInequality t);

struct TailBoundResult {
  double probability_bound;
  TailInequality inequality;

  /// Bounds above 1 carry no information but are kept as computed.
  bool vacuous() const noexcept { return probability_bound > 1.0; }
};

/// 2 exp(-2 t^2 / N).
TailBoundResult hoeffding_tail(std::size_t n, double t);

/// 2 exp(-t^2 / (2 N 2^-k (1 - 2^-k) + 2t/3)), valid for k >= 2.
TailBoundResult bernstein_tail_k(std::size_t n, unsigned k, double t);

/// 2 exp(-t^2 / (2 sum_var + 2 C t / 3)).
TailBoundResult bernstein_tail_generic(double sum_var, double bound_c, double t);

/// 32 (s + ln(1/(1-q))): below it the theorem holds vacuously.
double trivial_regime_threshold(double q, std::size_t s);

struct TheoremConstants {
  double q;
  std::size_t s;
  std::uint64_t n;
  double log_inv;       // L = ln(1/(1-q))
  unsigned levels;      // K
  std::vector<double> c;       // c_0 .. c_K
  std::vector<double> lambda;  // lambda_2 .. lambda_K, stored at index k - 2
};

/// Throws regime_error when N < 32 (s + L).
TheoremConstants build_constants(double q, std::size_t s, std::uint64_t n);

struct AuditCheck {
  std::string name;
  double lhs;
  double rhs;
  bool pass;

  double margin() const noexcept { return rhs - lhs; }
};

struct AuditReport {
  TheoremConstants constants;
  std::vector<AuditCheck> checks;
  bool overall;
};

/// Re-derives every inequality of the constant chain for (q, s, N) and
/// reports each as lhs <= rhs (or lhs < rhs where strictness matters).
AuditReport audit_proof(double q, std::size_t s, std::uint64_t n);

}  // namespace stardisc
