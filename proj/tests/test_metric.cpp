#include <doctest.h>

#include <cmath>

#include "a1score/metric.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace a1;

namespace {

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b)); }

double random_n(gen::Rng& rng) {
  std::uniform_real_distribution<double> d(std::log(1.01), std::log(1e4));
  return std::exp(d(rng));
}

}  // namespace

TEST_CASE("worked example scores") {
  auto x = make_profile("X", "n", "n log n");
  auto y = make_profile("Y", "log n", "n^2");

  auto ox = oracle::a1(oracle::lin, oracle::nlgn, 3);
  auto oy = oracle::a1(oracle::lg, oracle::sq, 3);
  // frozen from the oracle: 0.543643251190485812..., 0.742040864682568548...
  CHECK(static_cast<double>(ox.score) == doctest::Approx(0.5436432511904858).epsilon(1e-15));
  CHECK(static_cast<double>(oy.score) == doctest::Approx(0.7420408646825685).epsilon(1e-15));

  CHECK(a1_score(x, 3) == doctest::Approx(static_cast<double>(ox.score)).epsilon(1e-14));
  CHECK(a1_score(y, 3) == doctest::Approx(static_cast<double>(oy.score)).epsilon(1e-14));
  CHECK(a1_score(make_profile("Z", "n", "n"), 2) == 1.0);
}

TEST_CASE("a1_components examples") {
  auto c = a1_components(make_profile("X", "n", "n log n"), 3);
  CHECK(c.sum == doctest::Approx(7.754887502163468).epsilon(1e-14));
  CHECK(c.product == doctest::Approx(14.264662506490406).epsilon(1e-14));
  CHECK(c.score == a1_score(make_profile("X", "n", "n log n"), 3));

  A1Config cfg;
  cfg.xi = 4;
  auto k = a1_components(make_profile("K", "1", "1"), 10, cfg);
  CHECK(k.sum == 2.0);
  CHECK(k.product == 1.0);
  CHECK(k.score == 8.0);

  auto y = a1_components(make_profile("Y", "log n", "n^2"), 3);
  CHECK(y.sum == doctest::Approx(10.584962500721156).epsilon(1e-14));
  CHECK(y.product == doctest::Approx(14.264662506490406).epsilon(1e-14));
  CHECK(y.score == doctest::Approx(0.7420408646825685).epsilon(1e-14));
}

TEST_CASE("errors propagate") {
  auto x = make_profile("X", "n", "n log n");
  CHECK_THROWS_AS(a1_score(x, 1.0), DomainError);
  A1Config bad;
  bad.xi = 0;
  CHECK_THROWS_AS(a1_score(x, 3, bad), DomainError);
  CHECK_THROWS_AS(a1_score(make_profile("E", "2^n", "2^n"), 2000), OverflowError);
  CHECK_THROWS_AS(a1_score(make_profile("E", "2^n", "2^n"), 600), OverflowError);  // product alone overflows
}

TEST_CASE("canonical product and sum") {
  auto x = make_profile("X", "n", "n log n");
  auto y = make_profile("Y", "log n", "n^2");
  CHECK(canonical_equal(canonical_product(x), canonical_product(y)));
  CHECK(to_text(canonical_product(x)) == "n^2 * log(n)");
  CHECK(to_text(canonical_sum(x)) == "n * log(n) + n");
}

TEST_CASE("property: metric identities") {
  gen::Rng rng(21);
  int cases = 0;
  for (int i = 0; cases < 1000 && i < 5000; ++i) {
    auto p = gen::profile(rng, {}, "P");
    double n = random_n(rng);
    double xi = std::exp(std::uniform_real_distribution<double>(-5, 5)(rng));
    A1Config cfg;
    cfg.xi = xi;
    double t, s, score;
    try {
      t = evaluate(p.time, n);
      s = evaluate(p.space, n);
      score = a1_score(p, n, cfg);
    } catch (const OverflowError&) {
      continue;
    }
    ++cases;
    INFO(to_text(p.time) << " | " << to_text(p.space) << " at n=" << n);
    CHECK(rel_close(score, xi * (1 / t + 1 / s), 1e-12));

    AlgorithmProfile swapped{p.name, p.space, p.time};
    CHECK(a1_score(swapped, n, cfg) == doctest::Approx(score).epsilon(1e-15));

    double unit = a1_score(p, n);
    CHECK(score == xi * unit);
  }
  CHECK(cases >= 1000);
}

TEST_CASE("property: anti-monotonicity lemma") {
  gen::Rng rng(22);
  int cases = 0;
  for (int i = 0; cases < 1000 && i < 200000; ++i) {
    auto x = gen::profile(rng, {}, "X");
    auto y = gen::profile(rng, {}, "Y");
    double n = random_n(rng);
    A1Components cx, cy;
    try {
      cx = a1_components(x, n);
      cy = a1_components(y, n);
    } catch (const OverflowError&) {
      continue;
    }
    if (!(cx.sum <= cy.sum && cx.product > cy.product)) std::swap(cx, cy);
    if (!(cx.sum <= cy.sum && cx.product > cy.product)) continue;
    ++cases;
    CHECK(cx.score < cy.score);
  }
  CHECK(cases >= 1000);
}
