#include <doctest.h>

#include <cmath>
#include <string>

#include "oracles.hpp"
#include "stardisc/bounds.hpp"
#include "stardisc/errors.hpp"
#include "stardisc/montecarlo.hpp"
#include "stardisc/report.hpp"

using namespace stardisc;

TEST_CASE("philox known-answer vectors") {
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::block({0, 0, 0, 0}, {0, 0}) ==
        C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Philox4x32::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                          {0xffffffffu, 0xffffffffu}) ==
        C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(Philox4x32::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                          {0xa4093822u, 0x299f31d0u}) ==
        C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("generation is deterministic and stream-separated") {
  CHECK(generate_uniform(2, 3, 1) == generate_uniform(2, 3, 1));
  CHECK_FALSE(generate_uniform(2, 3, 1, 0) == generate_uniform(2, 3, 1, 1));
  CHECK_FALSE(generate_uniform(2, 3, 1, 0) == generate_uniform(2, 3, 2, 0));
  // A prefix of a longer draw matches the shorter draw.
  const auto longer = generate_uniform(1, 10, 5, 3);
  const auto shorter = generate_uniform(1, 4, 5, 3);
  for (std::size_t i = 0; i < 4; ++i) CHECK(longer[i] == shorter[i]);
}

TEST_CASE("uniform smoke test") {
  const auto pts = generate_uniform(1, 100000, 1);
  double sum = 0.0;
  bool in_range = true;
  for (const auto& p : pts.points()) {
    sum += p[0];
    in_range = in_range && p[0] >= 0.0 && p[0] < 1.0;
  }
  CHECK(in_range);
  CHECK(std::abs(sum / 100000 - 0.5) <= 0.005);
}

TEST_CASE("binomial confidence interval") {
  CHECK(binomial_ci(0, 10, 0.99).first == 0.0);
  CHECK(binomial_ci(10, 10, 0.99).second == 1.0);
  const auto [lo, hi] = binomial_ci(5, 10, 0.95);
  CHECK(lo < 0.5);
  CHECK(hi > 0.5);
  CHECK(hi - lo == doctest::Approx(0.6).epsilon(0.05));
  const auto [olo, ohi] = oracle::clopper_pearson(5, 10, 0.95);
  CHECK(lo == doctest::Approx(olo).epsilon(1e-9));
  CHECK(hi == doctest::Approx(ohi).epsilon(1e-9));
  for (std::uint64_t n : {1u, 7u, 50u, 500u})
    for (std::uint64_t x : {std::uint64_t{0}, n / 3, n / 2, n - 1, n}) {
      const auto [a, b] = binomial_ci(x, n, 0.99);
      const auto [oa, ob] = oracle::clopper_pearson(x, n, 0.99);
      CHECK(a == doctest::Approx(oa).epsilon(1e-8));
      CHECK(b == doctest::Approx(ob).epsilon(1e-8));
      CHECK(a <= static_cast<double>(x) / n);
      CHECK(static_cast<double>(x) / n <= b);
    }
  CHECK_THROWS_AS(binomial_ci(3, 2, 0.9), input_error);
  CHECK_THROWS_AS(binomial_ci(0, 0, 0.9), input_error);
}

TEST_CASE("small-scale experiment passes everywhere") {
  ExperimentConfig cfg;
  cfg.s = 2;
  cfg.n = 128;
  cfg.q = 0.5;
  cfg.trials = 200;
  cfg.seed = 7;
  cfg.parallelism = 2;
  const auto r = run_experiment(cfg);
  CHECK(r.threshold > 1.0);
  CHECK(r.pass_count == 200);
  CHECK(r.empirical_probability == 1.0);
  CHECK(r.ci_high == 1.0);
  CHECK(r.ci_low <= r.empirical_probability);
  CHECK_FALSE(r.surrogate);
  for (const auto& o : r.outcomes) CHECK(o.discrepancy > 0.0);
  CHECK(r.scaled.min <= r.scaled.median);
  CHECK(r.scaled.median <= r.scaled.max);
  CHECK(r.scaled.min <= r.scaled.mean);
  CHECK(r.scaled.mean <= r.scaled.max);
}

TEST_CASE("single trial report is well formed") {
  ExperimentConfig cfg;
  cfg.n = 16;
  cfg.trials = 1;
  const auto r = run_experiment(cfg);
  CHECK(r.outcomes.size() == 1);
  CHECK(r.ci_low <= r.empirical_probability);
  CHECK(r.empirical_probability <= r.ci_high);
  CHECK(r.scaled.min == r.scaled.max);
  CHECK(r.scaled.median == r.scaled.mean);
}

TEST_CASE("reports do not depend on parallelism") {
  ExperimentConfig cfg;
  cfg.s = 2;
  cfg.n = 64;
  cfg.q = 0.9;
  cfg.trials = 40;
  cfg.seed = 99;
  std::string reference;
  for (unsigned p : {1u, 2u, 8u}) {
    cfg.parallelism = p;
    const auto r = run_experiment(cfg);
    const std::string dumped = experiment_to_json(r).dump();
    if (reference.empty()) reference = dumped;
    CHECK(dumped == reference);
  }
}

TEST_CASE("cover surrogate is conservative") {
  ExperimentConfig cfg;
  cfg.s = 2;
  cfg.n = 400;
  cfg.q = 0.01;
  cfg.trials = 30;
  cfg.seed = 3;
  const auto exact = run_experiment(cfg);
  cfg.method = Method::cover;
  cfg.delta = 0.05;
  const auto cover = run_experiment(cfg);
  CHECK(cover.surrogate);
  CHECK(cover.pass_count <= exact.pass_count);
  for (std::size_t i = 0; i < exact.outcomes.size(); ++i)
    CHECK(exact.outcomes[i].discrepancy <= cover.outcomes[i].discrepancy + 1e-12);
}

TEST_CASE("larger cover experiment meets the guarantee") {
  ExperimentConfig cfg;
  cfg.s = 2;
  cfg.n = 10000;
  cfg.q = 0.9;
  cfg.trials = 100;
  cfg.seed = 11;
  cfg.method = Method::cover;
  cfg.delta = 0.02;
  const auto r = run_experiment(cfg);
  CHECK(r.empirical_probability >= 0.9);
  CHECK(r.ci_high >= 0.9);
}

TEST_CASE("capacity errors name the trial") {
  ExperimentConfig cfg;
  cfg.s = 4;
  cfg.n = 200;
  cfg.trials = 3;
  cfg.budget = 1000;
  try {
    run_experiment(cfg);
    FAIL("expected capacity_error");
  } catch (const capacity_error& e) {
    CHECK(std::string(e.what()).find("trial ") == 0);
  }
}

TEST_CASE("configuration validation") {
  ExperimentConfig cfg;
  cfg.q = 1.0;
  CHECK_THROWS_AS(run_experiment(cfg), input_error);
  cfg.q = 0.5;
  cfg.trials = 0;
  CHECK_THROWS_AS(run_experiment(cfg), input_error);
}
