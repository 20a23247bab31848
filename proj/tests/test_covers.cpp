#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stardisc/covers.hpp"
#include "stardisc/errors.hpp"
#include "support.hpp"

using namespace stardisc;

namespace {

bool on_grid(double v, std::uint64_t m) {
  return grid_line(grid_floor_index(v, m), m) == v;
}

// Membership of y in the chain link k, written out from the set definition.
bool in_link(const ChainDecomposition& c, unsigned k, const Point& y) {
  const Point& lo = c.chain[k];
  const Point& hi = c.chain[k + 1];
  if (lo.is_zero()) return !hi.is_zero() && dominated_by(y, hi);
  return dominated_by(y, hi) && !dominated_by(y, lo);
}

void check_chain(const ChainDecomposition& c) {
  const unsigned big_k = c.levels;
  REQUIRE(c.chain.size() == big_k + 2);
  CHECK(c.chain[0].is_zero());
  for (unsigned k = 1; k <= big_k; ++k) CHECK(dominated_by(c.chain[k - 1], c.chain[k]));
  CHECK(dominated_by(c.chain[big_k], c.x));
  CHECK(dominated_by(c.x, c.chain[big_k + 1]));
  for (unsigned k = 0; k <= big_k; ++k)
    CHECK(box_difference_measure(c.link(k)) <= std::ldexp(1.0, -static_cast<int>(k)) + 1e-12);
}

}  // namespace

TEST_CASE("cover cardinality bound") {
  CHECK(cover_cardinality_bound(1, 1.0).value == doctest::Approx(2 * std::numbers::e * 2));
  CHECK(cover_cardinality_bound(1, 1.0).value == doctest::Approx(10.873).epsilon(1e-4));
  CHECK(cover_cardinality_bound(1, 0.5).value == doctest::Approx(16.30969097075427));
  CHECK(cover_cardinality_bound(2, 0.5).value == doctest::Approx(266.00601956150336));
  // Far past the double range the log form stays finite.
  const auto huge = cover_cardinality_bound(400, 0.01);
  CHECK(std::isinf(huge.value));
  CHECK(huge.log_value == doctest::Approx(400 * (std::log(2.0) + 1 + std::log(101.0))));
  CHECK_THROWS_AS(cover_cardinality_bound(1, 0.0), input_error);
  CHECK_THROWS_AS(cover_cardinality_bound(1, 1.5), input_error);
  CHECK_THROWS_AS(cover_cardinality_bound(0, 0.5), input_error);
}

TEST_CASE("bracketing cardinality bound") {
  CHECK(bracketing_cardinality_bound(1, 1.0).value == doctest::Approx(5.43656365691809));
  CHECK(bracketing_cardinality_bound(2, 0.5).value == doctest::Approx(133.00300978075168));
  CHECK(bracketing_cardinality_bound(10, 0.125).log_value ==
        doctest::Approx(9 * std::log(2.0) + 10 + 10 * std::log(9.0)).epsilon(1e-14));
}

TEST_CASE("class cardinality bound") {
  CHECK(class_cardinality_bound(1, 0).value == doctest::Approx(6 * std::numbers::e));
  CHECK(class_cardinality_bound(1, 0).value == doctest::Approx(16.31).epsilon(1e-3));
  CHECK(class_cardinality_bound(1, 1).value == doctest::Approx(10 * std::numbers::e));
  CHECK(class_cardinality_bound(1, 1).value == doctest::Approx(27.18).epsilon(1e-3));
  CHECK(class_cardinality_bound(3, 2).value == doctest::Approx(117138.85133603046));
}

TEST_CASE("grid index helpers are exact") {
  for (std::uint64_t m : {1u, 3u, 7u, 10u, 200u}) {
    for (std::uint64_t i = 0; i <= m; ++i) {
      const double g = grid_line(i, m);
      CHECK(grid_floor_index(g, m) == i);
      CHECK(grid_ceil_index(g, m) == i);
      CHECK(grid_cell_index(g, m) == std::min(i, m - 1));
      if (i < m) {
        const double inside = std::nextafter(grid_line(i + 1, m), 0.0);
        CHECK(grid_floor_index(inside, m) == i);
        CHECK(grid_ceil_index(inside, m) == i + 1);
      }
    }
  }
}

TEST_CASE("equidistant cover examples") {
  const auto c22 = equidistant_cover(2, 0.5);
  CHECK(c22.resolution == 4);
  CHECK(c22.members.size() == 16);
  const auto c1 = equidistant_cover(1, 0.5);
  REQUIRE(c1.members.size() == 2);
  CHECK(c1.members[0] == Point({0.5}));
  CHECK(c1.members[1] == Point({1.0}));
  const auto whole = equidistant_cover(1, 1.0);
  REQUIRE(whole.members.size() == 1);
  CHECK(whole.members[0] == Point({1.0}));
  CHECK(equidistant_cover(3, 0.3).members.size() == 1000);
  CHECK_THROWS_AS(equidistant_cover(10, 0.01), capacity_error);
  CHECK_THROWS_AS(equidistant_cover(2, 0.5, 15), capacity_error);
}

TEST_CASE("equidistant bracketing cover examples") {
  const auto b1 = equidistant_bracketing_cover(1, 0.5);
  REQUIRE(b1.brackets.size() == 2);
  CHECK(b1.brackets[0].lower == Point({0.0}));
  CHECK(b1.brackets[0].upper == Point({0.5}));
  CHECK(b1.brackets[1].lower == Point({0.5}));
  CHECK(b1.brackets[1].upper == Point({1.0}));
  CHECK(equidistant_bracketing_cover(2, 0.5).brackets.size() == 16);
  const auto whole = equidistant_bracketing_cover(1, 1.0);
  REQUIRE(whole.brackets.size() == 1);
  CHECK(whole.brackets[0].lower == Point({0.0}));
  CHECK(whole.brackets[0].upper == Point({1.0}));
}

TEST_CASE("cover validity on sampled points") {
  std::mt19937_64 rng(3);
  for (std::size_t s : {1u, 2u, 3u}) {
    for (double delta : {1.0, 0.5, 0.2, 0.05}) {
      const auto cover = equidistant_cover(s, delta);
      CHECK(cover.members.size() == saturating_pow(cover.resolution, s));
      int bad = 0;
      for (int i = 0; i < 10000; ++i) {
        const auto y = testing_support::random_point(rng, s);
        const auto [x, z] = enclosing_pair(cover, y);
        bool ok = dominated_by(x, y) && dominated_by(y, z) &&
                  volume(z) - volume(x) <= delta + 1e-12;
        // both corners belong to the cover or are the origin
        for (const Point* p : {&x, &z}) {
          if (p->is_zero()) continue;
          for (double c : p->coords()) ok = ok && c > 0.0 && on_grid(c, cover.resolution);
        }
        bad += ok ? 0 : 1;
      }
      CHECK(bad == 0);
    }
  }
  // corners of the cube, including the zero-coordinate edge
  const auto cover = equidistant_cover(2, 0.5);
  for (const auto& y : {Point({0.0, 0.0}), Point({0.0, 1.0}), Point({1.0, 1.0})}) {
    const auto [x, z] = enclosing_pair(cover, y);
    CHECK(dominated_by(x, y));
    CHECK(dominated_by(y, z));
    CHECK(volume(z) - volume(x) <= 0.5);
  }
}

TEST_CASE("bracketing validity and unique containing cell") {
  std::mt19937_64 rng(4);
  for (std::size_t s : {1u, 2u}) {
    for (double delta : {0.5, 0.2}) {
      const auto cover = equidistant_bracketing_cover(s, delta);
      auto half_open_contains = [&](const Bracket& b, const Point& y) {
        for (std::size_t j = 0; j < s; ++j) {
          const bool last = b.upper[j] == 1.0;
          if (!(b.lower[j] <= y[j] && (y[j] < b.upper[j] || (last && y[j] == 1.0)))) return false;
        }
        return true;
      };
      std::vector<Point> samples;
      for (int i = 0; i < 2000; ++i) samples.push_back(testing_support::random_point(rng, s));
      // grid-line ties
      samples.push_back(Point(std::vector<double>(s, 0.0)));
      samples.push_back(Point(std::vector<double>(s, 1.0)));
      samples.push_back(Point(std::vector<double>(s, grid_line(1, cover.resolution))));
      for (const auto& y : samples) {
        const auto idx = containing_bracket(cover, y);
        const auto& b = cover.brackets.at(idx);
        CHECK(dominated_by(b.lower, y));
        CHECK(dominated_by(y, b.upper));
        CHECK(volume(b.upper) - volume(b.lower) <= delta + 1e-12);
        std::size_t hits = 0, first = cover.brackets.size();
        for (std::size_t i = 0; i < cover.brackets.size(); ++i)
          if (half_open_contains(cover.brackets[i], y)) {
            ++hits;
            first = std::min(first, i);
          }
        CHECK(hits == 1);
        CHECK(first == idx);
      }
    }
  }
}

TEST_CASE("chain examples") {
  SUBCASE("x on the top corner") {
    // The top cell per axis is closed, so x = 1 sits in [7/8, 1] at K = 3.
    const auto c = build_chain(Point({1.0}), 3);
    REQUIRE(c.chain.size() == 5);
    CHECK(c.chain[0] == Point({0.0}));
    CHECK(c.chain[1] == Point({0.5}));
    CHECK(c.chain[2] == Point({0.75}));
    CHECK(c.chain[3] == Point({0.875}));
    CHECK(c.chain[4] == Point({1.0}));
    check_chain(c);
  }
  SUBCASE("x at the origin") {
    const auto c = build_chain(Point({0.0}), 3);
    for (unsigned k = 0; k <= 3; ++k) CHECK(c.chain[k].is_zero());
    CHECK(c.chain[4] == Point({0.125}));
    check_chain(c);
  }
  SUBCASE("interior point in two dimensions") {
    const auto c = build_chain(Point({0.37, 0.81}), 3);
    check_chain(c);
    // level-k grids have resolution s 2^k
    for (unsigned k = 1; k <= 3; ++k)
      for (double v : c.chain[k].coords()) CHECK(on_grid(v, 2u << k));
  }
  CHECK_THROWS_AS(build_chain(Point({0.5}), 0), input_error);
  CHECK_THROWS_AS(build_chain(Point(std::vector<double>(10, 0.5)), 10), capacity_error);
}

TEST_CASE("chain invariants and disjointness on random points") {
  std::mt19937_64 rng(17);
  for (std::size_t s : {1u, 2u, 3u}) {
    for (unsigned big_k : {1u, 2u, 4u}) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto x = testing_support::random_point(rng, s);
        const auto c = build_chain(x, big_k);
        check_chain(c);
        int overlaps = 0;
        for (int i = 0; i < 2000; ++i) {
          const auto y = testing_support::random_point(rng, s);
          int hits = 0;
          for (unsigned k = 1; k <= big_k; ++k) hits += in_link(c, k, y);
          overlaps += hits > 1;
          for (unsigned k = 0; k <= big_k; ++k) CHECK(c.link(k).contains(y) == in_link(c, k, y));
        }
        CHECK(overlaps == 0);
      }
    }
  }
}

TEST_CASE("sandwich check") {
  const auto pts = testing_support::make_points(
      {{0.0, 0.0}, {0.2, 0.9}, {0.5, 0.5}, {1.0, 1.0}, {0.7, 0.1}});
  const auto full = sandwich_check(pts, Point::ones(2), 3);
  CHECK(full.mid == 5);
  CHECK(full.lower <= 5);
  CHECK(full.upper >= 5);
  const auto origin = sandwich_check(pts, Point::zero(2), 3);
  CHECK(origin.mid == 1);
  CHECK(origin.lower == 0);
  CHECK(origin.upper >= 1);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto p = testing_support::random_points(rng, 2, 50);
    const auto x = testing_support::random_point(rng, 2);
    const auto r = sandwich_check(p, x, 4);
    CHECK(r.lower <= r.mid);
    CHECK(r.mid <= r.upper);
  }
}

TEST_CASE("chain classes") {
  SUBCASE("s=1, K=1") {
    const auto classes = enumerate_chain_classes(1, 1);
    REQUIRE(classes.size() == 2);
    CHECK(static_cast<double>(classes[1].size()) <= class_cardinality_bound(1, 1).value);
    for (const auto& d : classes[1]) CHECK(box_difference_measure(d) <= 0.5);
  }
  SUBCASE("s=1, K=3") {
    const auto classes = enumerate_chain_classes(1, 3);
    for (unsigned k = 0; k <= 3; ++k)
      for (const auto& d : classes[k])
        CHECK(box_difference_measure(d) <= std::ldexp(1.0, -static_cast<int>(k)));
  }
  SUBCASE("s=2, K=3") {
    const auto classes = enumerate_chain_classes(2, 3);
    for (unsigned k = 0; k <= 3; ++k) {
      CHECK(static_cast<double>(classes[k].size()) <= class_cardinality_bound(2, k).value);
      CHECK_FALSE(classes[k].empty());
    }
    // the top level holds one link per cell of the finest cover
    CHECK(classes[3].size() == 16 * 16);
  }
  CHECK_THROWS_AS(enumerate_chain_classes(3, 20), capacity_error);
}
