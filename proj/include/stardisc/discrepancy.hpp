#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "stardisc/core.hpp"

namespace stardisc {

enum class Method { exact, cover };

std::string_view to_string(Method m);

struct DiscrepancyResult {
  double value;
  Method method;
  std::optional<double> delta;  // set for Method::cover
  Point witness;
};

/// |count_closed(P, y) / N - volume(y)|, a lower bound for D*_N.
double discrepancy_at(const PointSet& points, const Point& y);

/// Step estimate (N+1)^s * N * s used to admit exact computations.
std::uint64_t exact_work(std::size_t s, std::size_t n);

/// Step estimate M^s * N * s for the cover method with M = ceil(s/delta).
std::uint64_t cover_work(std::size_t s, std::size_t n, double delta);

/// Star discrepancy by enumerating the critical grid
/// prod_j ({z_{n,j}} u {1}); at each corner y both the closed excess
/// count_closed/N - vol(y) and the deficit approached from below,
/// vol(y) - count_strict/N, are taken. The witness is the lexicographically
/// smallest maximising corner.
DiscrepancyResult star_discrepancy_exact(const PointSet& points,
                                         std::uint64_t budget = kDefaultWorkBudget);

/// Lower end L of the bracket L <= D*_N <= L + delta, scanning the
/// equidistant delta-cover.
DiscrepancyResult star_discrepancy_cover(const PointSet& points, double delta,
                                         std::uint64_t budget = kDefaultWorkBudget);

namespace detail {

enum class ScanStrategy { automatic, prefix_sums, direct };

struct GridMaximum {
  double value;
  std::vector<double> witness;
};

/// Maximum over the product grid of axes[0] x ... x axes[s-1] (each axis
/// sorted ascending, duplicate-free) of
/// max(count_closed/N - vol, vol - count_strict/N).
/// `prefix_sums` bins the points and accumulates counts over the grid;
/// `direct` counts from scratch at each corner. Both visit corners in
/// lexicographic order and return identical results.
GridMaximum scan_grid(const PointSet& points, const std::vector<std::vector<double>>& axes,
                      ScanStrategy strategy = ScanStrategy::automatic);

}  // namespace detail

}  // namespace stardisc
