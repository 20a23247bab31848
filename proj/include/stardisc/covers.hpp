#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "stardisc/core.hpp"

namespace stardisc {

/// A quantity carried as its natural logarithm; `value` is exp(log_value)
/// and becomes +inf once it leaves the double range.
struct LogQuantity {
  double log_value;
  double value;

  static LogQuantity from_log(double log_value);
};

/// Upper bound (2e)^s (1/delta + 1)^s on the size of a minimal delta-cover.
LogQuantity cover_cardinality_bound(std::size_t s, double delta);

/// Upper bound 2^(s-1) e^s (1/delta + 1)^s on the size of a minimal
/// delta-bracketing cover.
LogQuantity bracketing_cardinality_bound(std::size_t s, double delta);

/// Upper bound (2e)^s (2^(k+1) + 1)^s on the number of distinct box
/// differences at level k of the dyadic chain.
LogQuantity class_cardinality_bound(std::size_t s, unsigned k);

/// Grid resolution M = ceil(s / delta) of the equidistant construction.
std::uint64_t grid_resolution(std::size_t s, double delta);

/// Grid line i/M as a double; every grid computation goes through this.
inline double grid_line(std::uint64_t i, std::uint64_t resolution) {
  return static_cast<double>(i) / static_cast<double>(resolution);
}

/// Largest i in [0,M] with grid_line(i) <= v.
std::uint64_t grid_floor_index(double v, std::uint64_t resolution);

/// Smallest i in [0,M] with grid_line(i) >= v.
std::uint64_t grid_ceil_index(double v, std::uint64_t resolution);

/// Index of the cell [i/M, (i+1)/M) holding v; the last cell is closed.
std::uint64_t grid_cell_index(double v, std::uint64_t resolution);

struct DeltaCover {
  double delta;
  std::size_t dim;
  std::uint64_t resolution;
  std::vector<Point> members;
};

struct Bracket {
  Point lower;
  Point upper;
};

struct BracketingCover {
  double delta;
  std::size_t dim;
  std::uint64_t resolution;
  std::vector<Bracket> brackets;
};

/// The grid {(i_1/M, ..., i_s/M) : 1 <= i_j <= M} with M = ceil(s/delta),
/// members in lexicographic order. Every y is sandwiched between its
/// componentwise floor and ceiling on the grid (plus the origin), whose
/// volumes differ by at most sum_i (z_i - x_i) <= s/M <= delta.
DeltaCover equidistant_cover(std::size_t s, double delta,
                             std::uint64_t budget = kDefaultWorkBudget);

/// The M^s cells of the same grid as (lower corner, upper corner) pairs,
/// in lexicographic order of the lower corner.
BracketingCover equidistant_bracketing_cover(std::size_t s, double delta,
                                             std::uint64_t budget = kDefaultWorkBudget);

/// Members x, z of the cover (or the origin) with x <= y <= z and
/// volume(z) - volume(x) <= delta: the floor and ceiling of y on the grid.
std::pair<Point, Point> enclosing_pair(const DeltaCover& cover, const Point& y);

/// Index into cover.brackets of the cell containing y.
std::size_t containing_bracket(const BracketingCover& cover, const Point& y);

/// The chain p_0 = 0, p_1, ..., p_K, p_{K+1} for a query point x.
struct ChainDecomposition {
  unsigned levels;  // K
  Point x;
  std::vector<Point> chain;  // K + 2 entries

  /// The box difference between p_k and p_{k+1}, 0 <= k <= K.
  BoxDifference link(unsigned k) const;
};

/// (p_K, p_{K+1}) is the cell of x in the 2^-K bracketing cover; below that
/// p_{k-1} is the componentwise floor of p_k onto the 2^-(k-1) grid.
ChainDecomposition build_chain(const Point& x, unsigned levels,
                               std::uint64_t budget = kDefaultWorkBudget);

struct SandwichCounts {
  std::size_t lower;
  std::size_t mid;
  std::size_t upper;
};

/// Counts of points in the union of the first K links, in [0,x], and in
/// all K+1 links. Throws std::logic_error if the ordering fails.
SandwichCounts sandwich_check(const PointSet& points, const Point& x, unsigned levels,
                              std::uint64_t budget = kDefaultWorkBudget);

/// The classes A_0, ..., A_K: every distinct link (p_k, p_{k+1}) reachable
/// from some x, obtained by walking the chain down from every cell of the
/// 2^-K bracketing cover. Each class is sorted.
std::vector<std::vector<BoxDifference>> enumerate_chain_classes(
    std::size_t s, unsigned levels, std::uint64_t budget = kDefaultWorkBudget);

}  // namespace stardisc
