#include "a1score/evaluator.hpp"

#include <cmath>
#include <string>

namespace a1 {

namespace {

void check_n(double n) {
  if (!(n > 1.0) || !std::isfinite(n)) {
    throw DomainError("n must be a finite real greater than 1, got " + std::to_string(n));
  }
}

double checked(double value) {
  if (!std::isfinite(value)) throw OverflowError("value exceeds double-precision range");
  if (value <= 0.0) throw OverflowError("value underflows double precision");
  return value;
}

double eval_node(const ComplexityExpr& e, double n, double ln_base) {
  const auto& data = e.node().data;
  if (const auto* c = std::get_if<Constant>(&data)) return c->value.to_double();
  if (std::holds_alternative<Variable>(data)) return n;
  if (const auto* l = std::get_if<Log>(&data)) return std::log(eval_node(l->argument, n, ln_base)) / ln_base;
  if (const auto* p = std::get_if<Power>(&data)) {
    double base = eval_node(p->base, n, ln_base);
    if (std::holds_alternative<VariableExponent>(p->exponent)) return std::pow(base, n);
    return std::pow(base, std::get<Rational>(p->exponent).to_double());
  }
  if (const auto* p = std::get_if<Product>(&data)) {
    double v = 1.0;
    for (const auto& f : p->factors) v *= eval_node(f, n, ln_base);
    return v;
  }
  double v = 0.0;
  for (const auto& t : std::get<Sum>(data).terms) v += eval_node(t, n, ln_base);
  return v;
}

}  // namespace

void validate(const EvalConfig& config) {
  if (!(config.log_base > 1.0) || !std::isfinite(config.log_base)) {
    throw DomainError("log base must be a finite real greater than 1, got " + std::to_string(config.log_base));
  }
}

double evaluate(const ComplexityExpr& expr, double n, const EvalConfig& config) {
  validate(config);
  check_n(n);
  return checked(eval_node(expr, n, std::log(config.log_base)));
}

double evaluate(const CanonicalForm& form, double n, const EvalConfig& config) {
  validate(config);
  check_n(n);
  double log_n = std::log(n) / std::log(config.log_base);
  double total = 0.0;
  for (const Term& t : form.terms()) {
    double v = t.coeff.to_double() * std::pow(n, t.poly_exp.to_double()) * std::pow(log_n, t.log_exp.to_double());
    if (t.exp_base != Rational(1)) v *= std::pow(t.exp_base.to_double(), n);
    total += v;
  }
  return checked(total);
}

}  // namespace a1
