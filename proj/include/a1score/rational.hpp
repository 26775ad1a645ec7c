#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace a1 {

/// Exact rational over int64_t, always stored in lowest terms with a
/// positive denominator. Every arithmetic operation is overflow-checked
/// and throws std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p" or "p/q".
  std::string to_string() const;

  Rational operator-() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// base^exp when the result is again rational, std::nullopt otherwise
/// (e.g. 2^(1/2)). Zero bases with non-positive exponents also yield nullopt.
std::optional<Rational> exact_pow(const Rational& base, const Rational& exp);

/// Parses "12", "1.25" or "3/4". Throws std::invalid_argument on malformed
/// text or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace a1
