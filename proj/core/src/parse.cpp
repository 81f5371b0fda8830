#include "tcl/parse.hpp"

#include <cctype>
#include <limits>

#include "tcl/errors.hpp"

namespace tcl {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars, PrimeChar ch)
      : text_(text), vars_(vars), ch_(ch) {}

  Poly run() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Poly r = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return r;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  Poly zero() const { return Poly(ch_, vars_.size()); }

  Poly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = product();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly rhs = product();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Poly product() {
    Poly acc = power();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * power();
      } else if (starts_primary(peek())) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly power() {
    Poly base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (peek() == '-') throw ParseError("negative exponent", pos_);
    std::size_t start = pos_;
    std::uint64_t e = 0;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (e > std::numeric_limits<Monomial::Exponent>::max()) throw ParseError("exponent too large", start);
    }
    return base.pow(e);
  }

  Poly primary() {
    skip_ws();
    char c = peek();
    if (at_end()) throw ParseError("expected term", pos_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint32_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        v = ch_.add(ch_.mul(v, 10 % ch_.value()), ch_.reduce(text_[pos_++] - '0'));
      return Poly::constant(ch_, vars_.size(), v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Poly::variable(ch_, vars_.size(), i);
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  PrimeChar ch_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> vars, PrimeChar ch) {
  return Parser(text, vars, ch).run();
}

std::string to_string(const Monomial& m, std::span<const std::string> vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < vars.size() ? vars[i] : "t";
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Poly& a, std::span<const std::string> vars) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
      continue;
    }
    if (t.coeff != 1) out += std::to_string(t.coeff) + '*';
    out += to_string(t.mono, vars);
  }
  return out;
}

}  // namespace tcl
