#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "a1score/rational.hpp"

namespace a1 {

/// One monomial coeff * n^poly_exp * (log n)^log_exp * exp_base^n.
/// exp_base == 1 means the term has no exponential factor.
struct Term {
  Rational coeff{1};
  Rational poly_exp{0};
  Rational log_exp{0};
  Rational exp_base{1};

  friend bool operator==(const Term&, const Term&) = default;
};

/// Ordering of two terms by growth key (exp_base, poly_exp, log_exp),
/// ignoring coefficients.
std::strong_ordering compare_growth_key(const Term& a, const Term& b);

/// Exact normal form of a complexity function: a sum of monomials with
/// distinct growth keys, strictly positive coefficients, sorted from the
/// fastest-growing term down. Two forms are equal iff they denote the same
/// function on n > 1.
class CanonicalForm {
 public:
  /// Merges like terms and sorts. Throws std::invalid_argument on a
  /// non-positive coefficient or an empty list.
  static CanonicalForm from_terms(std::vector<Term> terms);
  static CanonicalForm constant(const Rational& c);

  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  bool is_single_term() const { return terms_.size() == 1; }
  /// True when the form is one term with no n-dependence.
  bool is_constant() const;

  friend CanonicalForm operator+(const CanonicalForm& a, const CanonicalForm& b);
  friend CanonicalForm operator*(const CanonicalForm& a, const CanonicalForm& b);
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  CanonicalForm() = default;

  std::vector<Term> terms_;
};

/// Raises a form to a rational power when the result stays inside the
/// fragment: non-negative integer powers expand by distribution, any other
/// power requires a single term whose coefficient and exponential base have
/// exact rational powers. Returns std::nullopt otherwise.
std::optional<CanonicalForm> pow(const CanonicalForm& base, const Rational& exponent);

bool canonical_equal(const CanonicalForm& a, const CanonicalForm& b);

/// Asymptotic comparison of leading terms by (exp_base, poly_exp, log_exp),
/// then coefficient.
std::strong_ordering growth_order(const CanonicalForm& a, const CanonicalForm& b);

}  // namespace a1
