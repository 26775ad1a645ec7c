#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "a1score/canonical.hpp"
#include "a1score/rational.hpp"

namespace a1 {

struct ExprNode;

/// Immutable expression tree for an asymptotic complexity function of n.
///
/// Instances are built only through the factory functions below (or
/// parse()), which reject anything outside the supported fragment, so every
/// ComplexityExpr is well-formed and has a canonical form. Copies share
/// structure and are safe to use across threads.
class ComplexityExpr {
 public:
  const ExprNode& node() const { return *node_; }

  template <typename T>
  const T* as() const;

 private:
  explicit ComplexityExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  friend ComplexityExpr make_expr(ExprNode node);

  std::shared_ptr<const ExprNode> node_;
};

/// Marks the symbol n used as an exponent (the c^n form).
struct VariableExponent {
  friend bool operator==(VariableExponent, VariableExponent) = default;
};

using Exponent = std::variant<Rational, VariableExponent>;

struct Constant {
  Rational value;
};
struct Variable {};
struct Log {
  ComplexityExpr argument;  // n or n^k
};
struct Power {
  ComplexityExpr base;
  Exponent exponent;
};
struct Product {
  std::vector<ComplexityExpr> factors;
};
struct Sum {
  std::vector<ComplexityExpr> terms;
};

struct ExprNode {
  std::variant<Constant, Variable, Log, Power, Product, Sum> data;
  CanonicalForm canonical;
};

template <typename T>
const T* ComplexityExpr::as() const {
  return std::get_if<T>(&node_->data);
}

/// Raised when a construct is syntactically valid but outside the supported
/// fragment (n^n, log of a sum, nested log, non-positive constant, ...).
class UnsupportedExpression : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ComplexityExpr constant(const Rational& value);
ComplexityExpr variable();
ComplexityExpr log_of(const ComplexityExpr& argument);
ComplexityExpr power(const ComplexityExpr& base, const Rational& exponent);
/// base^n; base must be a constant greater than 1.
ComplexityExpr exp_power(const ComplexityExpr& base);
/// A single factor is returned unchanged.
ComplexityExpr product(std::vector<ComplexityExpr> factors);
/// A single term is returned unchanged.
ComplexityExpr sum(std::vector<ComplexityExpr> terms);

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, std::size_t position, std::string detail, std::vector<std::string> expected = {});

  Kind kind() const { return kind_; }
  /// Zero-based character offset into the input.
  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Kind kind_;
  std::size_t position_;
  std::string detail_;
  std::vector<std::string> expected_;
};

/// Parses a complexity expression such as "O(n log n)", "n^2 + 3n" or
/// "2^n". Juxtaposition multiplies, `log n` is sugar for `log(n)`, and
/// O(...) wrappers are dropped without discarding constant factors.
/// Throws ParseError.
ComplexityExpr parse(std::string_view text);

/// Canonical form of a well-formed expression (computed at construction).
const CanonicalForm& canonicalize(const ComplexityExpr& expr);

/// Text that parse() maps back to a canonically equal expression.
std::string to_text(const ComplexityExpr& expr);

/// Builds the sum-of-monomials expression a canonical form denotes.
ComplexityExpr to_expr(const CanonicalForm& form);

/// to_text(to_expr(form)).
std::string to_text(const CanonicalForm& form);

}  // namespace a1
