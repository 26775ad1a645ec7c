// Recursive-descent parser for complexity expressions.
//
//   expr     = term { "+" term }
//   term     = factor { ("*" | juxtaposition) factor }
//   factor   = primary [ "^" exponent ]
//   primary  = number | "n" | logform | "sqrt" "(" "n" ")" | "(" expr ")" | "O" "(" expr ")"
//   logform  = "log" ( "n" | "(" n-or-n^k ")" )
//   exponent = ["-"] number | "(" ["-"] number ")" | "n"

#include <cctype>
#include <optional>

#include "a1score/complexity_expr.hpp"

namespace a1 {

namespace {

enum class Tok { Number, Ident, Plus, Star, Caret, Minus, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const std::vector<std::string> kPrimaryStart = {"number", "'n'", "'log'", "'sqrt'", "'('", "'O('"};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(c) || c == '.') {
      while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.')) ++i;
      // p/q is a single number token only when a digit follows the slash
      if (i + 1 < src.size() && src[i] == '/' && std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
        ++i;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      }
      out.push_back({Tok::Number, std::string(src.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(c)) {
      while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '-': kind = Tok::Minus; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(ParseError::Kind::Syntax, start, std::string("unexpected character '") + src[i] + "'");
    }
    out.push_back({kind, std::string(1, src[i]), start});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  ComplexityExpr parse_all() {
    auto e = expr();
    if (peek().kind != Tok::End) {
      bool dangling = peek().kind == Tok::RParen;
      throw syntax(dangling ? "unbalanced ')'" : "unexpected '" + peek().text + "'", {"'+'", "'*'", "end of input"});
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool is_ident(const Token& t, std::string_view name) const { return t.kind == Tok::Ident && t.text == name; }

  ParseError syntax(const std::string& detail, std::vector<std::string> expected = {}) const {
    return ParseError(ParseError::Kind::Syntax, peek().pos, detail, std::move(expected));
  }

  static ParseError semantic(std::size_t pos, const std::string& detail) {
    return ParseError(ParseError::Kind::Semantic, pos, detail);
  }

  template <typename F>
  static ComplexityExpr guarded(std::size_t pos, F&& build) {
    try {
      return build();
    } catch (const UnsupportedExpression& e) {
      throw semantic(pos, e.what());
    }
  }

  void expect(Tok kind, const std::string& name) {
    if (peek().kind != kind) {
      throw syntax(peek().kind == Tok::End ? "unexpected end of input" : "unexpected '" + peek().text + "'", {name});
    }
    ++pos_;
  }

  bool starts_primary(const Token& t) const {
    if (t.kind == Tok::Number || t.kind == Tok::LParen) return true;
    return t.kind == Tok::Ident;  // unknown identifiers are reported by primary()
  }

  ComplexityExpr expr() {
    std::size_t start = peek().pos;
    std::vector<ComplexityExpr> terms{term()};
    while (peek().kind == Tok::Plus) {
      ++pos_;
      terms.push_back(term());
    }
    return guarded(start, [&] { return sum(std::move(terms)); });
  }

  ComplexityExpr term() {
    std::size_t start = peek().pos;
    std::vector<ComplexityExpr> factors{factor()};
    while (true) {
      if (peek().kind == Tok::Star) {
        ++pos_;
        factors.push_back(factor());
      } else if (starts_primary(peek())) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    return guarded(start, [&] { return product(std::move(factors)); });
  }

  ComplexityExpr factor() {
    std::size_t start = peek().pos;
    ComplexityExpr base = primary();
    if (peek().kind != Tok::Caret) return base;
    ++pos_;
    if (is_ident(peek(), "n")) {
      ++pos_;
      return guarded(start, [&] { return exp_power(base); });
    }
    Rational e = exponent();
    return guarded(start, [&] { return power(base, e); });
  }

  Rational exponent() {
    bool parens = false;
    if (peek().kind == Tok::LParen) {
      parens = true;
      ++pos_;
    }
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      negative = true;
      ++pos_;
    }
    if (peek().kind != Tok::Number) {
      if (peek().kind == Tok::Ident || peek().kind == Tok::LParen) {
        throw semantic(peek().pos, "unsupported exponent: only rational constants or n (on a constant base) are allowed");
      }
      throw syntax(peek().kind == Tok::End ? "unexpected end of input" : "unexpected '" + peek().text + "'",
                   parens || negative ? std::vector<std::string>{"number"}
                                      : std::vector<std::string>{"number", "'-'", "'n'", "'('"});
    }
    Rational value = number(next());
    if (parens) expect(Tok::RParen, "')'");
    return negative ? -value : value;
  }

  Rational number(const Token& t) const {
    try {
      return parse_rational(t.text);
    } catch (const std::overflow_error&) {
      throw semantic(t.pos, std::string("number out of range: ") + t.text);
    } catch (const std::invalid_argument&) {
      throw ParseError(ParseError::Kind::Syntax, t.pos, std::string("malformed number '") + t.text + "'");
    }
  }

  ComplexityExpr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++pos_;
        Rational value = number(t);
        return guarded(t.pos, [&] { return constant(value); });
      }
      case Tok::LParen: {
        ++pos_;
        auto inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        break;
      case Tok::End:
        throw syntax("unexpected end of input", kPrimaryStart);
      default:
        throw syntax("unexpected '" + t.text + "'", kPrimaryStart);
    }

    if (t.text == "n") {
      ++pos_;
      return variable();
    }
    if (t.text == "O") {
      ++pos_;
      expect(Tok::LParen, "'('");
      auto inner = expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.text == "sqrt") {
      ++pos_;
      expect(Tok::LParen, "'('");
      std::size_t arg_pos = peek().pos;
      auto inner = expr();
      expect(Tok::RParen, "')'");
      if (!inner.as<Variable>()) throw semantic(arg_pos, "unsupported sqrt argument: only sqrt(n) is allowed");
      return power(variable(), Rational(1, 2));
    }
    if (t.text == "log") {
      ++pos_;
      return log_form(t.pos);
    }
    throw syntax("unknown identifier '" + t.text + "'", kPrimaryStart);
  }

  ComplexityExpr log_form(std::size_t log_pos) {
    const Token& t = peek();
    if (is_ident(t, "n")) {
      ++pos_;
      return log_of(variable());
    }
    if (is_ident(t, "log")) throw semantic(log_pos, "nested log is not supported");
    if (t.kind == Tok::LParen) {
      ++pos_;
      auto arg = expr();
      expect(Tok::RParen, "')'");
      return guarded(log_pos, [&] { return log_of(arg); });
    }
    if (t.kind == Tok::Number) throw semantic(t.pos, "unsupported log argument: only log(n) and log(n^k) are allowed");
    throw syntax(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", {"'n'", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ComplexityExpr parse(std::string_view text) {
  bool blank = true;
  for (char c : text) blank = blank && std::isspace(static_cast<unsigned char>(c));
  if (blank) throw ParseError(ParseError::Kind::Syntax, 0, "empty expression", kPrimaryStart);
  return Parser(text).parse_all();
}

}  // namespace a1
