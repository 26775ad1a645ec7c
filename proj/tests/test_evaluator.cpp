#include <doctest.h>

#include <cmath>

#include "a1score/evaluator.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace a1;

TEST_CASE("evaluate examples") {
  CHECK(evaluate(parse("n"), 5) == 5.0);
  CHECK(evaluate(parse("2^n"), 10) == 1024.0);

  // 3 * log2(3) from the 50-digit oracle, frozen: 4.754887502163468544...
  double expected = static_cast<double>(oracle::nlgn(3));
  CHECK(expected == doctest::Approx(4.754887502163468).epsilon(1e-15));
  CHECK(evaluate(parse("n log n"), 3) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("log base is configurable") {
  CHECK(evaluate(parse("log n"), 100, EvalConfig{10}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(evaluate(parse("log n"), std::exp(1.0), EvalConfig{std::exp(1.0)}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(evaluate(parse("log(n^3)"), 8) == doctest::Approx(9.0).epsilon(1e-15));
}

TEST_CASE("domain and overflow errors") {
  auto e = parse("n log n");
  CHECK_THROWS_AS(evaluate(e, 1.0), DomainError);
  CHECK_THROWS_AS(evaluate(e, 0.5), DomainError);
  CHECK_THROWS_AS(evaluate(e, NAN), DomainError);
  CHECK_THROWS_AS(evaluate(e, 3, EvalConfig{1.0}), DomainError);
  CHECK_THROWS_AS(evaluate(e, 3, EvalConfig{0.5}), DomainError);
  CHECK_THROWS_AS(evaluate(parse("2^n"), 1e6), OverflowError);
  CHECK_THROWS_AS(evaluate(canonicalize(parse("2^n")), 1e6), OverflowError);
  CHECK(evaluate(e, 1.0000001) > 0.0);  // integer inputs are just widened; reals work too
}

TEST_CASE("property: positivity on (1, 1e6]") {
  gen::Rng rng(11);
  std::uniform_real_distribution<double> logn(1e-6, std::log(1e6));
  int evaluated = 0;
  for (int i = 0; i < 1000; ++i) {
    auto e = gen::expr(rng, {});
    double n = std::exp(logn(rng));
    double v;
    try {
      v = evaluate(e, n);
    } catch (const OverflowError&) {
      continue;  // outside double range (huge c^n or tiny n^-k)
    }
    CHECK(v > 0.0);
    ++evaluated;
  }
  CHECK(evaluated > 500);
}

TEST_CASE("property: monotone without negative exponents") {
  gen::Rng rng(12);
  gen::Options o;
  o.allow_negative = false;
  const double ns[] = {2, 3, 5, 10, 100, 1000};
  for (int i = 0; i < 1000; ++i) {
    auto e = gen::expr(rng, o);
    double prev = 0.0;
    for (double n : ns) {
      double v;
      try {
        v = evaluate(e, n);
      } catch (const OverflowError&) {
        break;
      }
      INFO(to_text(e) << " at n=" << n);
      CHECK(v >= prev * (1 - 1e-12));
      prev = v;
    }
  }
}

TEST_CASE("property: canonical consistency") {
  gen::Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    auto e = gen::expr(rng, {});
    for (double n : {2.0, 3.0, 10.0, 100.0}) {
      double direct, termwise;
      try {
        direct = evaluate(e, n);
        termwise = evaluate(canonicalize(e), n);
      } catch (const OverflowError&) {
        continue;
      }
      INFO(to_text(e) << " at n=" << n);
      CHECK(std::fabs(direct - termwise) <= 1e-9 * direct);
    }
  }
}
