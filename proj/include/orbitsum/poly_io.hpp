#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "orbitsum/error.hpp"
#include "orbitsum/poly.hpp"

namespace orbitsum {

inline std::string format_monomial(const Monomial& m, const VarSet& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

/// Text form "c*u^3*v^2 - p/q*v + 1", terms decreasing under ord.
inline std::string format(const MultiPoly& f, const MonomialOrder& ord = MonomialOrder::lex()) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.sorted_terms(ord)) {
    ExactScalar mag = abs(t.coeff);
    bool neg = t.coeff < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = format_monomial(t.mono, f.ring());
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + '*' + mono;
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarSet& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  MultiPoly expr() {
    MultiPoly acc = product();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        acc += product();
      } else if (accept('-')) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  MultiPoly product() {
    MultiPoly acc = unary();
    for (;;) {
      skip_ws();
      if (!accept('*')) return acc;
      acc *= unary();
    }
  }

  MultiPoly unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) fail("exponent must be a nonnegative integer");
      if (digits.size() > 5) fail("exponent too large");
      return orbitsum::pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      skip_ws();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = read_digits();
      std::size_t save = pos_;
      skip_ws();
      if (accept('/')) {
        skip_ws();
        std::string den = read_digits();
        if (den.empty()) fail("rational literal needs a denominator");
        lit += '/' + den;
      } else {
        pos_ = save;
      }
      return MultiPoly::constant(ring_, parse_scalar(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!ring_.find(name)) {
        throw Error(ErrorKind::unknown_variable, "'" + name + "' is not a ring variable");
      }
      return MultiPoly::variable(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const VarSet& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Whitespace-insensitive parser for the format() text form. Also accepts
/// parentheses and integer powers of sub-expressions.
inline MultiPoly parse_poly(std::string_view text, const VarSet& ring) {
  return detail::PolyParser(text, ring).parse();
}

}  // namespace orbitsum
