#include "a1score/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

namespace a1 {

namespace {

__extension__ typedef __int128 wide;

std::int64_t narrow(wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(wide num, wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

std::optional<std::int64_t> checked_ipow(std::int64_t base, std::int64_t exp) {
  wide result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    result *= base;
    if (result > std::numeric_limits<std::int64_t>::max() || result < -std::numeric_limits<std::int64_t>::max()) {
      return std::nullopt;
    }
  }
  return static_cast<std::int64_t>(result);
}

// Exact k-th root of a non-negative integer, if one exists.
std::optional<std::int64_t> exact_root(std::int64_t value, std::int64_t k) {
  if (value < 0) return std::nullopt;
  if (value <= 1 || k == 1) return value;
  auto guess = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(value), 1.0 / static_cast<double>(k))));
  for (std::int64_t cand = std::max<std::int64_t>(guess - 1, 0); cand <= guess + 1; ++cand) {
    auto p = checked_ipow(cand, k);
    if (p && *p == value) return cand;
  }
  return std::nullopt;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("reciprocal of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
              static_cast<wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  wide lhs = static_cast<wide>(a.num_) * b.den_;
  wide rhs = static_cast<wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Rational> exact_pow(const Rational& base, const Rational& exp) {
  if (base.is_zero()) {
    if (exp.is_positive()) return Rational(0);
    return std::nullopt;
  }
  Rational b = exp.is_negative() ? base.reciprocal() : base;
  std::int64_t p = exp.num() < 0 ? -exp.num() : exp.num();
  std::int64_t q = exp.den();

  if (b.is_negative() && q % 2 == 0) return std::nullopt;
  bool negative = b.is_negative();
  std::int64_t bn = negative ? -b.num() : b.num();
  auto rn = exact_root(bn, q);
  auto rd = exact_root(b.den(), q);
  if (!rn || !rd) return std::nullopt;
  auto pn = checked_ipow(*rn, p);
  auto pd = checked_ipow(*rd, p);
  if (!pn || !pd) return std::nullopt;
  bool neg_result = negative && (p % 2 == 1);
  return Rational(neg_result ? -*pn : *pn, *pd);
}

Rational parse_rational(const std::string& text) {
  auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto parse_int = [](const std::string& s) -> std::int64_t {
    wide v = 0;
    for (char c : s) {
      v = v * 10 + (c - '0');
      if (v > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("number too large: " + s);
    }
    return static_cast<std::int64_t>(v);
  };

  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string p = text.substr(0, slash);
    std::string q = text.substr(slash + 1);
    if (!digits(p) || !digits(q)) throw std::invalid_argument("malformed ratio: " + text);
    std::int64_t den = parse_int(q);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(parse_int(p), den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string ip = text.substr(0, dot);
    std::string fp = text.substr(dot + 1);
    if (!digits(ip) || !digits(fp)) throw std::invalid_argument("malformed decimal: " + text);
    if (fp.size() > 18) throw std::overflow_error("too many decimal places: " + text);
    auto scale = *checked_ipow(10, static_cast<std::int64_t>(fp.size()));
    return Rational(parse_int(ip)) + Rational(parse_int(fp), scale);
  }
  if (!digits(text)) throw std::invalid_argument("malformed number: " + text);
  return Rational(parse_int(text));
}

}  // namespace a1
