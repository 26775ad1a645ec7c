#pragma once

#include <stdexcept>

#include "a1score/canonical.hpp"
#include "a1score/complexity_expr.hpp"

namespace a1 {

/// Numeric evaluation settings. Logarithms default to base 2.
struct EvalConfig {
  double log_base = 2.0;
};

/// n is outside (1, inf), or a configuration value is out of range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The value does not fit in a finite, non-zero double.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Throws DomainError unless log_base > 1 and finite.
void validate(const EvalConfig& config);

/// Value of `expr` at a real n > 1, evaluated directly on the tree.
double evaluate(const ComplexityExpr& expr, double n, const EvalConfig& config = {});

/// Term-wise value of a canonical form at n > 1.
double evaluate(const CanonicalForm& form, double n, const EvalConfig& config = {});

}  // namespace a1
