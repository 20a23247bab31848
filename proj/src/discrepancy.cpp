#include "stardisc/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stardisc/covers.hpp"
#include "stardisc/errors.hpp"

namespace stardisc {
namespace {

// Above this many grid cells the prefix-sum tables get too large to hold.
constexpr std::uint64_t kMaxPrefixCells = std::uint64_t{1} << 24;

struct Scanner {
  const PointSet& points;
  const std::vector<std::vector<double>>& axes;
  double n;
  double best = -1.0;
  std::vector<std::size_t> best_index;

  void offer(double vol, std::uint64_t closed, std::uint64_t strict,
             const std::vector<std::size_t>& index) {
    const double excess = static_cast<double>(closed) / n - vol;
    const double deficit = vol - static_cast<double>(strict) / n;
    const double local = std::max(excess, deficit);
    if (local > best) {
      best = local;
      best_index = index;
    }
  }

  detail::GridMaximum result() const {
    std::vector<double> w(axes.size());
    for (std::size_t j = 0; j < axes.size(); ++j) w[j] = axes[j][best_index[j]];
    return {best, std::move(w)};
  }
};

// Odometer over the grid with the last axis fastest, which is lexicographic
// order of the corners. `partial[j]` is the volume of the first j axes,
// multiplied left to right exactly as volume() does.
template <class Visit>
void walk_grid(const std::vector<std::vector<double>>& axes, Visit&& visit) {
  const std::size_t s = axes.size();
  std::vector<std::size_t> idx(s, 0);
  std::vector<double> partial(s + 1, 1.0);
  for (std::size_t j = 0; j < s; ++j) partial[j + 1] = partial[j] * axes[j][0];
  std::uint64_t flat = 0;
  while (true) {
    visit(partial[s], flat, idx);
    ++flat;
    std::size_t j = s;
    while (j > 0) {
      --j;
      if (++idx[j] < axes[j].size()) break;
      idx[j] = 0;
      if (j == 0) return;
    }
    for (std::size_t t = j; t < s; ++t) partial[t + 1] = partial[t] * axes[t][idx[t]];
  }
}

detail::GridMaximum scan_direct(Scanner& sc) {
  const std::size_t s = sc.axes.size();
  std::vector<double> y(s);
  walk_grid(sc.axes, [&](double vol, std::uint64_t, const std::vector<std::size_t>& idx) {
    for (std::size_t j = 0; j < s; ++j) y[j] = sc.axes[j][idx[j]];
    std::uint64_t closed = 0, strict = 0;
    for (const auto& z : sc.points.points()) {
      bool in_closed = true, in_strict = true;
      for (std::size_t j = 0; j < s && in_closed; ++j) {
        in_closed = z[j] <= y[j];
        in_strict = in_strict && z[j] < y[j];
      }
      closed += in_closed;
      strict += in_closed && in_strict;
    }
    sc.offer(vol, closed, strict, idx);
  });
  return sc.result();
}

// Inclusive prefix sums along every axis of a row-major table.
void accumulate(std::vector<std::uint32_t>& table, const std::vector<std::size_t>& extent) {
  std::size_t stride = 1;
  for (std::size_t j = extent.size(); j-- > 0;) {
    const std::size_t block = stride * extent[j];
    for (std::size_t base = 0; base < table.size(); base += block)
      for (std::size_t i = stride; i < block; ++i) table[base + i] += table[base + i - stride];
    stride = block;
  }
}

detail::GridMaximum scan_prefix(Scanner& sc, std::uint64_t cells) {
  const std::size_t s = sc.axes.size();
  std::vector<std::size_t> extent(s);
  for (std::size_t j = 0; j < s; ++j) extent[j] = sc.axes[j].size();
  std::vector<std::uint32_t> closed(cells, 0), strict(cells, 0);

  // A point enters the closed box at the first grid line >= z_j and the
  // strict box at the first grid line > z_j.
  for (const auto& z : sc.points.points()) {
    std::size_t c_flat = 0, s_flat = 0;
    bool c_in = true, s_in = true;
    for (std::size_t j = 0; j < s; ++j) {
      const auto& axis = sc.axes[j];
      const auto c = static_cast<std::size_t>(
          std::lower_bound(axis.begin(), axis.end(), z[j]) - axis.begin());
      const auto u = static_cast<std::size_t>(
          std::upper_bound(axis.begin(), axis.end(), z[j]) - axis.begin());
      c_in = c_in && c < extent[j];
      s_in = s_in && u < extent[j];
      c_flat = c_flat * extent[j] + std::min(c, extent[j] - 1);
      s_flat = s_flat * extent[j] + std::min(u, extent[j] - 1);
    }
    if (c_in) ++closed[c_flat];
    if (s_in) ++strict[s_flat];
  }
  accumulate(closed, extent);
  accumulate(strict, extent);

  walk_grid(sc.axes, [&](double vol, std::uint64_t flat, const std::vector<std::size_t>& idx) {
    sc.offer(vol, closed[flat], strict[flat], idx);
  });
  return sc.result();
}

void require_budget(std::uint64_t work, std::uint64_t budget, const std::string& advice) {
  if (work > budget)
    throw capacity_error("discrepancy computation needs " + std::to_string(work) +
                         " steps, over the work budget of " + std::to_string(budget) + "; " +
                         advice);
}

}  // namespace

std::string_view to_string(Method m) { return m == Method::exact ? "exact" : "cover"; }

double discrepancy_at(const PointSet& points, const Point& y) {
  const double frac = static_cast<double>(count_closed(points, y)) /
                      static_cast<double>(points.size());
  return std::abs(frac - volume(y));
}

std::uint64_t exact_work(std::size_t s, std::size_t n) {
  return saturating_mul(saturating_mul(saturating_pow(n + 1, s), n), s);
}

std::uint64_t cover_work(std::size_t s, std::size_t n, double delta) {
  return saturating_mul(saturating_mul(saturating_pow(grid_resolution(s, delta), s), n), s);
}

namespace detail {

GridMaximum scan_grid(const PointSet& points, const std::vector<std::vector<double>>& axes,
                      ScanStrategy strategy) {
  if (axes.size() != points.dim()) throw input_error("grid dimension mismatch");
  std::uint64_t cells = 1;
  for (const auto& a : axes) {
    if (a.empty()) throw input_error("grid axis is empty");
    cells = saturating_mul(cells, a.size());
  }
  Scanner sc{points, axes, static_cast<double>(points.size()), -1.0, {}};
  if (strategy == ScanStrategy::automatic)
    strategy = cells <= kMaxPrefixCells ? ScanStrategy::prefix_sums : ScanStrategy::direct;
  if (strategy == ScanStrategy::prefix_sums) {
    if (cells > kMaxPrefixCells) throw capacity_error("grid too large for prefix-sum tables");
    return scan_prefix(sc, cells);
  }
  return scan_direct(sc);
}

}  // namespace detail

DiscrepancyResult star_discrepancy_exact(const PointSet& points, std::uint64_t budget) {
  const std::size_t s = points.dim();
  require_budget(exact_work(s, points.size()), budget, "use the cover method instead");
  std::vector<std::vector<double>> axes(s);
  for (std::size_t j = 0; j < s; ++j) {
    auto& axis = axes[j];
    axis.reserve(points.size() + 1);
    for (const auto& z : points.points()) axis.push_back(z[j]);
    axis.push_back(1.0);
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  auto best = detail::scan_grid(points, axes);
  return {best.value, Method::exact, std::nullopt, Point(std::move(best.witness))};
}

DiscrepancyResult star_discrepancy_cover(const PointSet& points, double delta,
                                         std::uint64_t budget) {
  const std::size_t s = points.dim();
  require_budget(cover_work(s, points.size(), delta), budget, "use a larger delta");
  const std::uint64_t m = grid_resolution(s, delta);
  std::vector<double> axis(m);
  for (std::uint64_t i = 0; i < m; ++i) axis[i] = grid_line(i + 1, m);
  auto best = detail::scan_grid(points, std::vector<std::vector<double>>(s, axis));
  return {best.value, Method::cover, delta, Point(std::move(best.witness))};
}

}  // namespace stardisc
