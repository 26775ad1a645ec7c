#include <sstream>

#include "a1score/complexity_expr.hpp"

namespace a1 {

ComplexityExpr make_expr(ExprNode node) { return ComplexityExpr(std::make_shared<const ExprNode>(std::move(node))); }

namespace {

bool contains_log(const ComplexityExpr& e) {
  if (e.as<Log>()) return true;
  if (const auto* p = e.as<Power>()) return contains_log(p->base);
  if (const auto* p = e.as<Product>()) {
    for (const auto& f : p->factors)
      if (contains_log(f)) return true;
  }
  if (const auto* s = e.as<Sum>()) {
    for (const auto& t : s->terms)
      if (contains_log(t)) return true;
  }
  return false;
}

std::string exponent_text(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  return "(" + r.to_string() + ")";
}

// Whether `e` can appear as a power base without parentheses.
bool atomic_base(const ComplexityExpr& e) {
  if (e.as<Variable>() || e.as<Log>()) return true;
  if (const auto* c = e.as<Constant>()) return c->value.is_integer();
  return false;
}

std::string text_of(const ComplexityExpr& e);

std::string wrapped(const ComplexityExpr& e) { return "(" + text_of(e) + ")"; }

std::string text_of(const ComplexityExpr& e) {
  const auto& data = e.node().data;
  if (const auto* c = std::get_if<Constant>(&data)) return c->value.to_string();
  if (std::holds_alternative<Variable>(data)) return "n";
  if (const auto* l = std::get_if<Log>(&data)) return "log(" + text_of(l->argument) + ")";
  if (const auto* p = std::get_if<Power>(&data)) {
    std::string base = atomic_base(p->base) ? text_of(p->base) : wrapped(p->base);
    if (std::holds_alternative<VariableExponent>(p->exponent)) return base + "^n";
    return base + "^" + exponent_text(std::get<Rational>(p->exponent));
  }
  if (const auto* p = std::get_if<Product>(&data)) {
    std::string out;
    for (std::size_t i = 0; i < p->factors.size(); ++i) {
      const auto& f = p->factors[i];
      if (i > 0) out += " * ";
      out += (f.as<Sum>() || f.as<Product>()) ? wrapped(f) : text_of(f);
    }
    return out;
  }
  const auto& s = std::get<Sum>(data);
  std::string out;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    const auto& t = s.terms[i];
    if (i > 0) out += " + ";
    out += t.as<Sum>() ? wrapped(t) : text_of(t);
  }
  return out;
}

}  // namespace

ComplexityExpr constant(const Rational& value) {
  if (!value.is_positive()) throw UnsupportedExpression("non-positive constant " + value.to_string());
  return make_expr(ExprNode{Constant{value}, CanonicalForm::constant(value)});
}

ComplexityExpr variable() {
  return make_expr(ExprNode{Variable{}, CanonicalForm::from_terms({Term{1, 1, 0, 1}})});
}

ComplexityExpr log_of(const ComplexityExpr& argument) {
  if (contains_log(argument)) throw UnsupportedExpression("nested log: log(" + to_text(argument) + ")");
  if (argument.as<Sum>()) throw UnsupportedExpression("log of a sum: log(" + to_text(argument) + ")");

  Rational k{1};
  bool ok = argument.as<Variable>() != nullptr;
  if (const auto* p = argument.as<Power>(); p && p->base.as<Variable>()) {
    if (const auto* r = std::get_if<Rational>(&p->exponent); r && r->is_positive()) {
      k = *r;
      ok = true;
    }
  }
  if (!ok) {
    throw UnsupportedExpression("unsupported log argument: log(" + to_text(argument) +
                                "); only log(n) and log(n^k) with k > 0 are allowed");
  }
  // log(n^k) = k * log n
  return make_expr(ExprNode{Log{argument}, CanonicalForm::from_terms({Term{k, 0, 1, 1}})});
}

ComplexityExpr power(const ComplexityExpr& base, const Rational& exponent) {
  std::optional<CanonicalForm> form;
  try {
    form = pow(canonicalize(base), exponent);
  } catch (const std::overflow_error&) {
    throw UnsupportedExpression("unsupported exponent: " + to_text(base) + "^" + exponent_text(exponent) +
                                " is too large to expand exactly");
  }
  if (!form) {
    throw UnsupportedExpression("unsupported exponent: " + to_text(base) + "^" + exponent_text(exponent) +
                                " has no exact form (fractional or negative power of a sum, or irrational constant)");
  }
  return make_expr(ExprNode{Power{base, exponent}, std::move(*form)});
}

ComplexityExpr exp_power(const ComplexityExpr& base) {
  const CanonicalForm& b = canonicalize(base);
  if (!b.is_constant() || b.leading().coeff <= Rational(1)) {
    throw UnsupportedExpression("unsupported exponent: " + to_text(base) +
                                "^n; a variable exponent requires a constant base greater than 1");
  }
  return make_expr(ExprNode{Power{base, VariableExponent{}},
                            CanonicalForm::from_terms({Term{1, 0, 0, b.leading().coeff}})});
}

ComplexityExpr product(std::vector<ComplexityExpr> factors) {
  if (factors.empty()) throw std::invalid_argument("product of no factors");
  if (factors.size() == 1) return factors.front();
  CanonicalForm form = canonicalize(factors.front());
  try {
    for (std::size_t i = 1; i < factors.size(); ++i) form = form * canonicalize(factors[i]);
  } catch (const std::overflow_error&) {
    throw UnsupportedExpression("product too large to expand exactly");
  }
  return make_expr(ExprNode{Product{std::move(factors)}, std::move(form)});
}

ComplexityExpr sum(std::vector<ComplexityExpr> terms) {
  if (terms.empty()) throw std::invalid_argument("sum of no terms");
  if (terms.size() == 1) return terms.front();
  CanonicalForm form = canonicalize(terms.front());
  try {
    for (std::size_t i = 1; i < terms.size(); ++i) form = form + canonicalize(terms[i]);
  } catch (const std::overflow_error&) {
    throw UnsupportedExpression("sum coefficients overflow");
  }
  return make_expr(ExprNode{Sum{std::move(terms)}, std::move(form)});
}

const CanonicalForm& canonicalize(const ComplexityExpr& expr) { return expr.node().canonical; }

std::string to_text(const ComplexityExpr& expr) { return text_of(expr); }

ComplexityExpr to_expr(const CanonicalForm& form) {
  std::vector<ComplexityExpr> terms;
  for (const Term& t : form.terms()) {
    std::vector<ComplexityExpr> factors;
    if (t.coeff != Rational(1)) factors.push_back(constant(t.coeff));
    if (!t.poly_exp.is_zero()) factors.push_back(t.poly_exp == Rational(1) ? variable() : power(variable(), t.poly_exp));
    if (!t.log_exp.is_zero()) {
      auto l = log_of(variable());
      factors.push_back(t.log_exp == Rational(1) ? l : power(l, t.log_exp));
    }
    if (t.exp_base > Rational(1)) {
      factors.push_back(exp_power(constant(t.exp_base)));
    } else if (t.exp_base < Rational(1)) {
      factors.push_back(power(exp_power(constant(t.exp_base.reciprocal())), -1));
    }
    terms.push_back(factors.empty() ? constant(t.coeff) : product(std::move(factors)));
  }
  return sum(std::move(terms));
}

std::string to_text(const CanonicalForm& form) { return to_text(to_expr(form)); }

namespace {

std::string describe(ParseError::Kind kind, std::size_t position, const std::string& detail,
                     const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << (kind == ParseError::Kind::Syntax ? "syntax error" : "unsupported expression") << " at position "
     << position << ": " << detail;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t position, std::string detail, std::vector<std::string> expected)
    : std::runtime_error(describe(kind, position, detail, expected)),
      kind_(kind),
      position_(position),
      detail_(std::move(detail)),
      expected_(std::move(expected)) {}

}  // namespace a1
