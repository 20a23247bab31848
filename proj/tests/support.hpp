#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "stardisc/core.hpp"

namespace testing_support {

inline stardisc::PointSet make_points(std::vector<std::vector<double>> rows) {
  const std::size_t s = rows.front().size();
  std::vector<stardisc::Point> pts;
  for (auto& r : rows) pts.emplace_back(std::move(r));
  return stardisc::PointSet(s, std::move(pts));
}

inline stardisc::PointSet random_points(std::mt19937_64& rng, std::size_t s, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(s));
  for (auto& r : rows)
    for (auto& c : r) c = u(rng);
  return make_points(std::move(rows));
}

inline stardisc::Point random_point(std::mt19937_64& rng, std::size_t s) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> c(s);
  for (auto& v : c) v = u(rng);
  return stardisc::Point(std::move(c));
}

inline oracle::Pts to_rows(const stardisc::PointSet& ps) {
  oracle::Pts out;
  for (const auto& p : ps.points()) out.emplace_back(p.coords().begin(), p.coords().end());
  return out;
}

/// Centred 1D grid (2i-1)/(2N), i = 1..N.
inline stardisc::PointSet centred_grid(std::size_t n) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 1; i <= n; ++i)
    rows.push_back({static_cast<double>(2 * i - 1) / static_cast<double>(2 * n)});
  return make_points(std::move(rows));
}

}  // namespace testing_support
