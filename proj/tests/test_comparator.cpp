#include <doctest.h>

#include <cmath>

#include "a1score/comparator.hpp"
#include "generators.hpp"

using namespace a1;

namespace {

Winner mirror(Winner w) { return w == Winner::X ? Winner::Y : w == Winner::Y ? Winner::X : w; }

}  // namespace

TEST_CASE("worked example: equal products, lower score wins") {
  auto x = make_profile("X", "n", "n log n");
  auto y = make_profile("Y", "log n", "n^2");
  auto v = compare(x, y, 3);
  CHECK(v.product_equality == ProductEquality::Symbolic);
  CHECK(v.branch == Branch::EqualProduct);
  CHECK(v.a1_x < v.a1_y);
  CHECK(v.winner == Winner::X);
  CHECK(v.oracle_winner == Winner::X);
  CHECK(v.oracle_agrees);
  CHECK(v.scan.crossovers.empty());
}

TEST_CASE("log-linear pair: unequal products, higher score wins") {
  auto x = make_profile("X", "n", "log n");
  auto y = make_profile("Y", "log n", "n^2");
  auto v = compare(x, y, 3);
  CHECK(v.branch == Branch::UnequalProduct);
  CHECK(v.product_equality == ProductEquality::Unequal);
  CHECK(v.winner == Winner::X);
  CHECK(v.oracle_winner == Winner::X);
  CHECK(v.scan.crossovers.empty());
}

TEST_CASE("identical profiles are indistinguishable") {
  auto x = make_profile("X", "n^2", "log n");
  for (double n : {1.5, 3.0, 50.0}) {
    auto v = compare(x, x, n);
    CHECK(v.winner == Winner::Indistinguishable);
    CHECK(v.oracle_winner == Winner::Indistinguishable);
    CHECK(v.oracle_agrees);
    CHECK(v.scan.crossovers.empty());
  }
}

TEST_CASE("constant-complexity counterexample is surfaced") {
  auto x = make_profile("X", "1", "n^4");
  auto y = make_profile("Y", "n", "n");
  auto v = compare(x, y, 3);
  CHECK(v.branch == Branch::UnequalProduct);
  CHECK(v.a1_x == doctest::Approx(82.0 / 81.0).epsilon(1e-15));
  CHECK(v.a1_y == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(v.winner == Winner::X);
  CHECK(v.oracle_winner == Winner::Y);
  CHECK_FALSE(v.oracle_agrees);
}

TEST_CASE("decide_winner") {
  CHECK(decide_winner(Branch::UnequalProduct, 2, 1) == Winner::X);
  CHECK(decide_winner(Branch::UnequalProduct, 1, 2) == Winner::Y);
  CHECK(decide_winner(Branch::EqualProduct, 2, 1) == Winner::Y);
  CHECK(decide_winner(Branch::EqualProduct, 1, 2) == Winner::X);
  CHECK(decide_winner(Branch::EqualProduct, 1, 1 + 1e-13) == Winner::Indistinguishable);
  CHECK(decide_winner(Branch::UnequalProduct, 1, 1 + 1e-10) == Winner::Y);
}

TEST_CASE("scan ranges") {
  auto pts = sample_points({2, 1000, 512});
  REQUIRE(pts.size() == 512);
  CHECK(pts.front() == 2.0);
  CHECK(pts.back() == 1000.0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    CHECK(pts[i] > pts[i - 1]);
    CHECK(pts[i] / pts[i - 1] == doctest::Approx(std::pow(500.0, 1.0 / 511)).epsilon(1e-12));
  }
  auto r = parse_scan_range("2:100:99");
  CHECK(r.lo == 2);
  CHECK(r.hi == 100);
  CHECK(r.samples == 99);
  CHECK_THROWS_AS(parse_scan_range("2:100"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scan_range("2:x:5"), std::invalid_argument);
  CHECK_THROWS_AS(validate(ScanRange{1, 10, 5}), DomainError);
  CHECK_THROWS_AS(validate(ScanRange{5, 4, 5}), DomainError);
  CHECK_THROWS_AS(validate(ScanRange{2, 10, 1}), DomainError);
}

TEST_CASE("crossovers are found and gaps reported") {
  // X: A1 = 1/n + 1/10, Y: A1 = 2/sqrt(n); they cross once, near n = 380
  auto x = make_profile("X", "n", "10");
  auto y = make_profile("Y", "sqrt(n)", "sqrt(n)");
  auto scan = scan_crossovers(x, y, {}, {2, 1000, 200});
  REQUIRE(scan.crossovers.size() == 1);
  CHECK(scan.crossovers[0].hi == 1000.0);
  // brute-force: first sample where the sign differs from the start
  auto pts = sample_points({2, 1000, 200});
  double first = 0;
  int s0 = tolerant_sign(a1_score(x, pts[0]), a1_score(y, pts[0]));
  for (double n : pts) {
    if (tolerant_sign(a1_score(x, n), a1_score(y, n)) != s0) {
      first = n;
      break;
    }
  }
  CHECK(scan.crossovers[0].lo == first);

  auto big = make_profile("B", "2^n", "n");
  auto gaps = scan_crossovers(big, x, {}, {2, 2000, 50});
  CHECK_FALSE(gaps.gaps.empty());
  auto v = compare(big, x, 3, {}, {2, 2000, 50});
  CHECK(v.scan.gaps.size() == gaps.gaps.size());
}

TEST_CASE("property: comparator invariants on generated pairs") {
  gen::Rng rng(31);
  int cases = 0;
  for (int i = 0; cases < 300 && i < 3000; ++i) {
    auto x = gen::profile(rng, {}, "X");
    auto y = gen::profile(rng, {}, "Y");
    double n = 1.5 + std::uniform_real_distribution<double>(0, 50)(rng);
    ScanRange scan{2, 100, 16};
    ComparisonVerdict v, w;
    try {
      v = compare(x, y, n, {}, scan);
      w = compare(y, x, n, {}, scan);
    } catch (const OverflowError&) {
      continue;
    }
    ++cases;
    CHECK(w.winner == mirror(v.winner));
    CHECK(w.branch == v.branch);
    CHECK((v.branch == Branch::EqualProduct) == (v.product_equality == ProductEquality::Symbolic));
    CHECK(decide_winner(v.branch, v.a1_x, v.a1_y) == v.winner);
    CHECK(v.oracle_winner == oracle_verdict(x, y));
    CHECK(w.oracle_winner == mirror(v.oracle_winner));
  }
  CHECK(cases >= 300);
}
