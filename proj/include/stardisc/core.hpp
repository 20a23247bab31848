#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace stardisc {

/// Default number of elementary steps a single computation may spend.
inline constexpr std::uint64_t kDefaultWorkBudget = 1'000'000'000ULL;

/// Work budget taken from STARDISC_BUDGET when set, else the default.
/// Throws input_error if the variable is set but not a positive integer.
std::uint64_t work_budget_from_env();

/// Saturating a * b on unsigned 64-bit integers.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

/// Saturating base^exp.
std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp);

/// A point of the unit cube [0,1]^s. Immutable after construction.
class Point {
 public:
  /// Throws input_error when coords is empty or any coordinate lies outside [0,1].
  explicit Point(std::vector<double> coords);

  static Point zero(std::size_t dim);
  static Point ones(std::size_t dim);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  /// True when every coordinate is exactly zero (the distinguished origin).
  bool is_zero() const noexcept;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// Componentwise order: a <= b iff a_i <= b_i for every i.
bool dominated_by(const Point& a, const Point& b);

/// Lebesgue measure of the anchored box [0,y], the product of the coordinates.
double volume(const Point& y);

/// A non-empty finite sequence of points sharing one dimension.
class PointSet {
 public:
  PointSet(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_;
  std::vector<Point> points_;
};

/// Number of points z with z <= y componentwise.
std::size_t count_closed(const PointSet& points, const Point& y);

/// Number of points z with z_i < y_i for every i.
std::size_t count_strict(const PointSet& points, const Point& y);

/// The anchored box [0,upper].
class AnchoredBox {
 public:
  explicit AnchoredBox(Point upper) : upper_(std::move(upper)) {}

  const Point& upper() const noexcept { return upper_; }
  double measure() const { return volume(upper_); }
  bool contains(const Point& y) const;

 private:
  Point upper_;
};

/// The set [0,upper] \ [0,lower]; when lower is the origin it is [0,upper]
/// itself, and it is empty when both corners are the origin.
class BoxDifference {
 public:
  /// Throws input_error unless lower <= upper componentwise.
  BoxDifference(Point lower, Point upper);

  const Point& lower() const noexcept { return lower_; }
  const Point& upper() const noexcept { return upper_; }
  bool contains(const Point& y) const;

  friend bool operator==(const BoxDifference&, const BoxDifference&) = default;
  friend auto operator<=>(const BoxDifference&, const BoxDifference&) = default;

 private:
  Point lower_;
  Point upper_;
};

double box_difference_measure(const BoxDifference& d);

/// Number of points of the set lying in d.
std::size_t count_in(const PointSet& points, const BoxDifference& d);

}  // namespace stardisc
