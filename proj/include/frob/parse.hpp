#ifndef FROB_PARSE_HPP
#define FROB_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "frob/poly.hpp"

namespace frob {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

/// Recursive-descent parser for the polynomial grammar: sums of terms, terms
/// are `*`-joined factors, a factor is an integer, a variable with optional
/// `^k`, or a parenthesized subexpression. Whitespace is insignificant and
/// variable names are case-insensitive.
template <class K>
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr<K> ring)
      : text_(text), ring_(std::move(ring)) {}

  Poly<K> parse() {
    Poly<K> r = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return r;
  }

 private:
  Poly<K> parse_expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (take() == '-');
    Poly<K> acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      take();
      Poly<K> t = parse_term();
      acc = (c == '-') ? acc - t : acc + t;
    }
    return acc;
  }

  Poly<K> parse_term() {
    Poly<K> acc = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        take();
        acc = acc * parse_factor();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) ||
                 peek() == '(') {
        // implicit product, e.g. "3a" or "2(x+y)"
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<K> parse_factor() {
    Poly<K> base = parse_base();
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      std::size_t at = pos_;
      std::uint64_t k = parse_uint();
      if (k > kMaxExponent) throw ParseError("exponent too large", at);
      return base.pow(k);
    }
    return base;
  }

  Poly<K> parse_base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      take();
      Poly<K> inner = parse_expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      take();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = pos_;
      std::string name = parse_ident();
      int idx = ring_->find_var(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
      return Poly<K>::variable(ring_, static_cast<std::size_t>(idx));
    }
    throw ParseError("expected coefficient, variable, or '('", pos_);
  }

  Poly<K> parse_number() {
    mpz_class num = parse_mpz();
    skip_ws();
    if (peek() == '/') {
      // rational literal p/q; over F_p this is c * q^{-1}
      take();
      skip_ws();
      std::size_t at = pos_;
      mpz_class den = parse_mpz();
      if (den == 0) throw ParseError("zero denominator", at);
      auto f = ring_->field();
      auto d = f.from_mpz(den);
      if (f.is_zero(d)) throw ParseError("denominator not invertible", at);
      return Poly<K>::constant(ring_, f.mul(f.from_mpz(num), f.inv(d)));
    }
    return Poly<K>::constant(ring_, ring_->field().from_mpz(num));
  }

  mpz_class parse_mpz() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::uint64_t parse_uint() {
    mpz_class z = parse_mpz();
    if (!z.fits_ulong_p()) throw ParseError("integer too large", pos_);
    return z.get_ui();
  }

  std::string parse_ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  std::string_view text_;
  RingPtr<K> ring_;
  std::size_t pos_ = 0;
};

template <class K>
Poly<K> parse_polynomial(std::string_view text, const RingPtr<K>& ring) {
  return PolyParser<K>(text, ring).parse();
}

namespace detail {
inline std::string coeff_str(const GF& f, GF::Value v) { return f.to_string(v); }
inline std::string coeff_str(const QQ& f, const QQ::Value& v) {
  return f.to_string(v);
}
inline bool coeff_negative(const GF&, GF::Value) { return false; }
inline bool coeff_negative(const QQ&, const QQ::Value& v) { return v < 0; }
}  // namespace detail

/// Renders in the same grammar the parser reads; parse(render(f)) == f.
template <class K>
std::string render(const Poly<K>& f) {
  if (f.is_zero()) return "0";
  const auto& field = f.field();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto c = t.coeff;
    bool neg = detail::coeff_negative(field, c);
    if (neg) c = field.neg(c);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string cs = detail::coeff_str(field, c);
    bool wrote = false;
    if (t.mono.is_one() || !field.is_one(c)) {
      out += cs;
      wrote = true;
    }
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (wrote) out += "*";
      out += f.ring()->var_name(i);
      if (t.mono.exp[i] > 1) out += "^" + std::to_string(t.mono.exp[i]);
      wrote = true;
    }
  }
  return out;
}

}  // namespace frob

#endif  // FROB_PARSE_HPP
