#include "stardisc/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>

#include "stardisc/errors.hpp"

namespace stardisc {

std::uint64_t work_budget_from_env() {
  const char* raw = std::getenv("STARDISC_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultWorkBudget;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0)
    throw input_error("STARDISC_BUDGET must be a positive integer, got '" +
                      std::string(text) + "'");
  return value;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) result = saturating_mul(result, base);
  return result;
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw input_error("a point needs at least one coordinate");
  for (double c : coords_) {
    // Written so that NaN is rejected too.
    if (!(c >= 0.0 && c <= 1.0))
      throw input_error("coordinate " + std::to_string(c) + " is outside [0,1]");
  }
}

Point Point::zero(std::size_t dim) {
  if (dim == 0) throw input_error("dimension must be at least 1");
  return Point(std::vector<double>(dim, 0.0));
}

Point Point::ones(std::size_t dim) {
  if (dim == 0) throw input_error("dimension must be at least 1");
  return Point(std::vector<double>(dim, 1.0));
}

bool Point::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

static void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b)
    throw input_error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

bool dominated_by(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

double volume(const Point& y) {
  double v = 1.0;
  for (double c : y.coords()) v *= c;
  return v;
}

PointSet::PointSet(std::size_t dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
  if (dim_ == 0) throw input_error("dimension must be at least 1");
  if (points_.empty()) throw input_error("a point set needs at least one point");
  for (const auto& p : points_) require_same_dim(dim_, p.dim());
}

std::size_t count_closed(const PointSet& points, const Point& y) {
  require_same_dim(points.dim(), y.dim());
  return static_cast<std::size_t>(std::count_if(
      points.points().begin(), points.points().end(),
      [&](const Point& z) { return dominated_by(z, y); }));
}

std::size_t count_strict(const PointSet& points, const Point& y) {
  require_same_dim(points.dim(), y.dim());
  std::size_t n = 0;
  for (const auto& z : points.points()) {
    bool inside = true;
    for (std::size_t i = 0; i < y.dim() && inside; ++i) inside = z[i] < y[i];
    n += inside ? 1 : 0;
  }
  return n;
}

bool AnchoredBox::contains(const Point& y) const { return dominated_by(y, upper_); }

BoxDifference::BoxDifference(Point lower, Point upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (!dominated_by(lower_, upper_))
    throw input_error("box difference needs lower <= upper componentwise");
}

bool BoxDifference::contains(const Point& y) const {
  if (lower_.is_zero()) return !upper_.is_zero() && dominated_by(y, upper_);
  return dominated_by(y, upper_) && !dominated_by(y, lower_);
}

double box_difference_measure(const BoxDifference& d) {
  if (d.lower().is_zero()) return d.upper().is_zero() ? 0.0 : volume(d.upper());
  return volume(d.upper()) - volume(d.lower());
}

std::size_t count_in(const PointSet& points, const BoxDifference& d) {
  require_same_dim(points.dim(), d.upper().dim());
  return static_cast<std::size_t>(std::count_if(
      points.points().begin(), points.points().end(),
      [&](const Point& z) { return d.contains(z); }));
}

}  // namespace stardisc
