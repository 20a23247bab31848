#include "stardisc/covers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "stardisc/errors.hpp"

namespace stardisc {
namespace {

constexpr unsigned kMaxLevels = 48;

void require_dim(std::size_t s) {
  if (s == 0) throw input_error("dimension s must be at least 1");
}

void require_delta(double delta) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw input_error("delta must lie in (0,1], got " + std::to_string(delta));
}

void require_levels(unsigned levels) {
  if (levels == 0 || levels > kMaxLevels)
    throw input_error("K must lie in [1," + std::to_string(kMaxLevels) + "], got " +
                      std::to_string(levels));
}

void require_budget(std::uint64_t work, std::uint64_t budget, const char* what) {
  if (work > budget)
    throw capacity_error(std::string(what) + " needs " + std::to_string(work) +
                         " steps, over the work budget of " + std::to_string(budget));
}

// Resolution of the grid used at chain level k: the 2^-k equidistant cover.
std::uint64_t level_resolution(std::size_t s, unsigned k) {
  return saturating_mul(static_cast<std::uint64_t>(s), std::uint64_t{1} << k);
}

// Advances a mixed-radix counter with equal radix; false once it wraps.
bool next_index(std::vector<std::uint64_t>& idx, std::uint64_t radix) {
  for (std::size_t j = idx.size(); j-- > 0;) {
    if (++idx[j] < radix) return true;
    idx[j] = 0;
  }
  return false;
}

std::vector<Point> chain_from_cell(Point lower, Point upper, std::size_t s, unsigned levels) {
  std::vector<Point> chain(levels + 2, Point::zero(s));
  chain[levels + 1] = std::move(upper);
  chain[levels] = std::move(lower);
  for (unsigned k = levels; k >= 2; --k) {
    const std::uint64_t coarse = level_resolution(s, k - 1);
    std::vector<double> c(s);
    for (std::size_t i = 0; i < s; ++i)
      c[i] = grid_line(grid_floor_index(chain[k][i], coarse), coarse);
    chain[k - 1] = Point(std::move(c));
  }
  return chain;
}

}  // namespace

LogQuantity LogQuantity::from_log(double log_value) {
  return {log_value, std::exp(log_value)};
}

LogQuantity cover_cardinality_bound(std::size_t s, double delta) {
  require_dim(s);
  require_delta(delta);
  const double sd = static_cast<double>(s);
  return LogQuantity::from_log(sd * (std::numbers::ln2 + 1.0) + sd * std::log(1.0 / delta + 1.0));
}

LogQuantity bracketing_cardinality_bound(std::size_t s, double delta) {
  require_dim(s);
  require_delta(delta);
  const double sd = static_cast<double>(s);
  return LogQuantity::from_log((sd - 1.0) * std::numbers::ln2 + sd +
                               sd * std::log(1.0 / delta + 1.0));
}

LogQuantity class_cardinality_bound(std::size_t s, unsigned k) {
  require_dim(s);
  const double sd = static_cast<double>(s);
  return LogQuantity::from_log(sd * (std::numbers::ln2 + 1.0) +
                               sd * std::log(std::ldexp(1.0, static_cast<int>(k) + 1) + 1.0));
}

std::uint64_t grid_resolution(std::size_t s, double delta) {
  require_dim(s);
  require_delta(delta);
  const double m = std::ceil(static_cast<double>(s) / delta);
  if (m >= 9.0e18) throw capacity_error("grid resolution overflows");
  return static_cast<std::uint64_t>(m);
}

std::uint64_t grid_floor_index(double v, std::uint64_t resolution) {
  const double guess = std::floor(v * static_cast<double>(resolution));
  std::uint64_t j = guess <= 0.0 ? 0
                    : guess >= static_cast<double>(resolution)
                        ? resolution
                        : static_cast<std::uint64_t>(guess);
  while (j > 0 && grid_line(j, resolution) > v) --j;
  while (j < resolution && grid_line(j + 1, resolution) <= v) ++j;
  return j;
}

std::uint64_t grid_ceil_index(double v, std::uint64_t resolution) {
  const double guess = std::ceil(v * static_cast<double>(resolution));
  std::uint64_t j = guess <= 0.0 ? 0
                    : guess >= static_cast<double>(resolution)
                        ? resolution
                        : static_cast<std::uint64_t>(guess);
  while (j < resolution && grid_line(j, resolution) < v) ++j;
  while (j > 0 && grid_line(j - 1, resolution) >= v) --j;
  return j;
}

std::uint64_t grid_cell_index(double v, std::uint64_t resolution) {
  const std::uint64_t j = grid_floor_index(v, resolution);
  return j == resolution ? resolution - 1 : j;
}

DeltaCover equidistant_cover(std::size_t s, double delta, std::uint64_t budget) {
  const std::uint64_t m = grid_resolution(s, delta);
  require_budget(saturating_pow(m, s), budget, "equidistant cover");
  DeltaCover cover{delta, s, m, {}};
  std::vector<std::uint64_t> idx(s, 0);
  do {
    std::vector<double> c(s);
    for (std::size_t i = 0; i < s; ++i) c[i] = grid_line(idx[i] + 1, m);
    cover.members.emplace_back(std::move(c));
  } while (next_index(idx, m));
  return cover;
}

BracketingCover equidistant_bracketing_cover(std::size_t s, double delta, std::uint64_t budget) {
  const std::uint64_t m = grid_resolution(s, delta);
  require_budget(saturating_pow(m, s), budget, "equidistant bracketing cover");
  BracketingCover cover{delta, s, m, {}};
  std::vector<std::uint64_t> idx(s, 0);
  do {
    std::vector<double> lo(s), hi(s);
    for (std::size_t i = 0; i < s; ++i) {
      lo[i] = grid_line(idx[i], m);
      hi[i] = grid_line(idx[i] + 1, m);
    }
    cover.brackets.push_back({Point(std::move(lo)), Point(std::move(hi))});
  } while (next_index(idx, m));
  return cover;
}

std::pair<Point, Point> enclosing_pair(const DeltaCover& cover, const Point& y) {
  if (y.dim() != cover.dim) throw input_error("dimension mismatch between cover and point");
  const std::uint64_t m = cover.resolution;
  std::vector<double> lo(cover.dim), hi(cover.dim);
  bool degenerate = false;
  for (std::size_t i = 0; i < cover.dim; ++i) {
    const std::uint64_t f = grid_floor_index(y[i], m);
    degenerate = degenerate || f == 0;
    lo[i] = grid_line(f, m);
    hi[i] = grid_line(std::max<std::uint64_t>(grid_ceil_index(y[i], m), 1), m);
  }
  // A floor with a zero coordinate has volume 0 and is replaced by the
  // origin, so both corners are members of the cover or the origin.
  if (degenerate) return {Point::zero(cover.dim), Point(std::move(hi))};
  return {Point(std::move(lo)), Point(std::move(hi))};
}

std::size_t containing_bracket(const BracketingCover& cover, const Point& y) {
  if (y.dim() != cover.dim) throw input_error("dimension mismatch between cover and point");
  std::size_t index = 0;
  for (std::size_t i = 0; i < cover.dim; ++i)
    index = index * cover.resolution + grid_cell_index(y[i], cover.resolution);
  return index;
}

BoxDifference ChainDecomposition::link(unsigned k) const {
  if (k > levels) throw input_error("link index exceeds K");
  return BoxDifference(chain[k], chain[k + 1]);
}

ChainDecomposition build_chain(const Point& x, unsigned levels, std::uint64_t budget) {
  require_levels(levels);
  const std::size_t s = x.dim();
  const std::uint64_t fine = level_resolution(s, levels);
  require_budget(saturating_pow(fine, s), budget, "chain covers");
  std::vector<double> lo(s), hi(s);
  for (std::size_t i = 0; i < s; ++i) {
    const std::uint64_t cell = grid_cell_index(x[i], fine);
    lo[i] = grid_line(cell, fine);
    hi[i] = grid_line(cell + 1, fine);
  }
  return {levels, x, chain_from_cell(Point(std::move(lo)), Point(std::move(hi)), s, levels)};
}

SandwichCounts sandwich_check(const PointSet& points, const Point& x, unsigned levels,
                              std::uint64_t budget) {
  if (points.dim() != x.dim()) throw input_error("dimension mismatch between point set and x");
  const ChainDecomposition chain = build_chain(x, levels, budget);
  SandwichCounts counts{0, count_closed(points, x), 0};
  for (unsigned k = 0; k <= levels; ++k) {
    const std::size_t n = count_in(points, chain.link(k));
    if (k < levels) counts.lower += n;
    counts.upper += n;
  }
  if (!(counts.lower <= counts.mid && counts.mid <= counts.upper))
    throw std::logic_error("indicator sandwich violated");
  return counts;
}

std::vector<std::vector<BoxDifference>> enumerate_chain_classes(std::size_t s, unsigned levels,
                                                                std::uint64_t budget) {
  require_dim(s);
  require_levels(levels);
  const std::uint64_t fine = level_resolution(s, levels);
  require_budget(saturating_mul(saturating_pow(fine, s), levels + 1), budget,
                 "chain class enumeration");
  std::vector<std::set<BoxDifference>> classes(levels + 1);
  std::vector<std::uint64_t> idx(s, 0);
  do {
    std::vector<double> lo(s), hi(s);
    for (std::size_t i = 0; i < s; ++i) {
      lo[i] = grid_line(idx[i], fine);
      hi[i] = grid_line(idx[i] + 1, fine);
    }
    const auto chain = chain_from_cell(Point(std::move(lo)), Point(std::move(hi)), s, levels);
    for (unsigned k = 0; k <= levels; ++k) classes[k].emplace(chain[k], chain[k + 1]);
  } while (next_index(idx, fine));
  std::vector<std::vector<BoxDifference>> out;
  out.reserve(classes.size());
  for (auto& c : classes) out.emplace_back(c.begin(), c.end());
  return out;
}

}  // namespace stardisc
