#include "a1score/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace a1 {

namespace {

// Upper bound on terms produced by distributing an integer power of a sum.
constexpr std::size_t kMaxTerms = 4096;

Term multiply(const Term& a, const Term& b) {
  return Term{a.coeff * b.coeff, a.poly_exp + b.poly_exp, a.log_exp + b.log_exp, a.exp_base * b.exp_base};
}

}  // namespace

std::strong_ordering compare_growth_key(const Term& a, const Term& b) {
  if (auto c = a.exp_base <=> b.exp_base; c != 0) return c;
  if (auto c = a.poly_exp <=> b.poly_exp; c != 0) return c;
  return a.log_exp <=> b.log_exp;
}

CanonicalForm CanonicalForm::from_terms(std::vector<Term> terms) {
  if (terms.empty()) throw std::invalid_argument("canonical form needs at least one term");
  for (const auto& t : terms) {
    if (!t.coeff.is_positive()) throw std::invalid_argument("non-positive coefficient " + t.coeff.to_string());
    if (!t.exp_base.is_positive()) throw std::invalid_argument("non-positive exponential base " + t.exp_base.to_string());
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare_growth_key(a, b) > 0; });

  CanonicalForm out;
  for (const auto& t : terms) {
    if (!out.terms_.empty() && compare_growth_key(out.terms_.back(), t) == 0) {
      out.terms_.back().coeff += t.coeff;
    } else {
      out.terms_.push_back(t);
    }
  }
  return out;
}

CanonicalForm CanonicalForm::constant(const Rational& c) { return from_terms({Term{c}}); }

bool CanonicalForm::is_constant() const {
  if (terms_.size() != 1) return false;
  const Term& t = terms_.front();
  return t.poly_exp.is_zero() && t.log_exp.is_zero() && t.exp_base == Rational(1);
}

CanonicalForm operator+(const CanonicalForm& a, const CanonicalForm& b) {
  std::vector<Term> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return CanonicalForm::from_terms(std::move(all));
}

CanonicalForm operator*(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.terms_.size() * b.terms_.size() > kMaxTerms) throw std::overflow_error("expansion exceeds term limit");
  std::vector<Term> all;
  all.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) all.push_back(multiply(x, y));
  }
  return CanonicalForm::from_terms(std::move(all));
}

std::optional<CanonicalForm> pow(const CanonicalForm& base, const Rational& exponent) {
  if (exponent.is_integer() && !exponent.is_negative()) {
    CanonicalForm result = CanonicalForm::constant(1);
    CanonicalForm square = base;
    std::int64_t e = exponent.num();
    while (e > 0) {
      if (e & 1) result = result * square;
      e >>= 1;
      if (e > 0) square = square * square;
    }
    return result;
  }
  if (!base.is_single_term()) return std::nullopt;
  const Term& t = base.leading();
  auto coeff = exact_pow(t.coeff, exponent);
  auto exp_base = exact_pow(t.exp_base, exponent);
  if (!coeff || !exp_base) return std::nullopt;
  return CanonicalForm::from_terms({Term{*coeff, t.poly_exp * exponent, t.log_exp * exponent, *exp_base}});
}

bool canonical_equal(const CanonicalForm& a, const CanonicalForm& b) { return a == b; }

std::strong_ordering growth_order(const CanonicalForm& a, const CanonicalForm& b) {
  const Term& la = a.leading();
  const Term& lb = b.leading();
  if (auto c = compare_growth_key(la, lb); c != 0) return c;
  return la.coeff <=> lb.coeff;
}

}  // namespace a1
