#pragma once

// Text grammar shared by scalars and polynomials:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' natural)?
//   atom   := natural | identifier | '(' expr ')'
//
// Identifiers are ring variables or the extension generator. Division is
// only allowed by nonzero constants. Whitespace is insignificant and the
// Unicode minus sign U+2212 is accepted as '-'.

#include <cctype>
#include <string>
#include <string_view>

#include "ikit/polynomial.hpp"

namespace ikit {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, Ring ring) : ring_(std::move(ring)) {
    // Normalize the Unicode minus to ASCII.
    for (size_t i = 0; i < text.size(); ++i) {
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
        src_ += '-';
        i += 2;
      } else {
        src_ += text[i];
      }
    }
  }

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + src_ + "\"");
  }
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc.scaled(ring_->domain.one() / d.constant_coeff());
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a natural exponent");
      unsigned long e = std::stoul(src_.substr(start, pos_ - start));
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      Integer v(src_.substr(start, pos_ - start));
      return Poly::constant(ring_, ring_->domain.from_rational(Rational(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string name = src_.substr(start, pos_ - start);
      if (auto idx = ring_->index_of(name)) return Poly::variable(ring_, *idx);
      const Field& f = ring_->domain;
      if (f.kind() == FieldKind::extension && f.spec().generator == name)
        return Poly::constant(ring_, f.generator());
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string src_;
  size_t pos_ = 0;
  Ring ring_;
};

}  // namespace detail

inline Poly parse_polynomial(std::string_view text, const Ring& ring) {
  return detail::PolyParser(text, ring).parse();
}

inline Scalar parse_scalar(std::string_view text, const Field& field) {
  static thread_local std::map<std::string, Ring> rings;
  auto& r = rings[field.describe()];
  if (!r) r = make_ring<Scalar>({}, MonomialOrder::grevlex(), field);
  return parse_polynomial(text, r).constant_coeff();
}

/// Parses a univariate polynomial with rational coefficients in `var`; used
/// for minimal polynomials.
inline upoly::UPoly parse_upoly(std::string_view text, const std::string& var) {
  Ring r = make_ring<Scalar>({var}, MonomialOrder::lex(), Field::rationals());
  Poly p = parse_polynomial(text, r);
  upoly::UPoly out(std::max(p.total_degree() + 1, 0));
  for (const auto& t : p.terms()) out[t.mono[0]] = t.coeff.rational_value();
  upoly::trim(out);
  return out;
}

}  // namespace ikit
