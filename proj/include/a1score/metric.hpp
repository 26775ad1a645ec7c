#pragma once

#include <string>

#include "a1score/complexity_expr.hpp"
#include "a1score/evaluator.hpp"

namespace a1 {

/// An algorithm described by its time and space complexity functions.
struct AlgorithmProfile {
  std::string name;
  ComplexityExpr time;
  ComplexityExpr space;
};

/// Parses both complexity strings; throws ParseError.
AlgorithmProfile make_profile(std::string name, std::string_view time, std::string_view space);

struct A1Config {
  double xi = 1.0;  // scaling factor, must be > 0
  EvalConfig eval;
};

void validate(const A1Config& config);

struct A1Components {
  double sum;      // time(n) + space(n)
  double product;  // time(n) * space(n)
  double score;    // xi * sum / product
};

/// Sum, product and A1-Score of one algorithm at n > 1.
A1Components a1_components(const AlgorithmProfile& profile, double n, const A1Config& config = {});

/// xi * (time(n) + space(n)) / (time(n) * space(n)). Higher means a better
/// combined time/space profile unless the compared products coincide.
double a1_score(const AlgorithmProfile& profile, double n, const A1Config& config = {});

/// Exact canonical forms of time*space and time+space.
CanonicalForm canonical_product(const AlgorithmProfile& profile);
CanonicalForm canonical_sum(const AlgorithmProfile& profile);

}  // namespace a1
