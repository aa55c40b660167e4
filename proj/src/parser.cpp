#include "quadcrucial/parser.hpp"

#include <cctype>
#include <utility>

#include "quadcrucial/errors.hpp"

namespace quadcrucial {

namespace {

constexpr long kMaxExponent = 64;

// Constant denominators are folded into the numerator so that "1/3*z" reads as (1/3) z / 1.
RationalFunction normalized(RationalFunction r) {
  if (r.den.degree() == 0) {
    r.num = Rat(1 / r.den.leading()) * r.num;
    r.den = QPoly::constant(Rat(1));
  }
  return r;
}

RationalFunction add(const RationalFunction& a, const RationalFunction& b) {
  if (a.den == b.den) return normalized({a.num + b.num, a.den});
  return normalized({a.num * b.den + b.num * a.den, a.den * b.den});
}

RationalFunction negate(const RationalFunction& a) { return {-a.num, a.den}; }

RationalFunction multiply(const RationalFunction& a, const RationalFunction& b) {
  return normalized({a.num * b.num, a.den * b.den});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      RationalFunction rhs = term();
      acc = add(acc, c == '+' ? rhs : negate(rhs));
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, unary());
      } else if (c == '/') {
        const std::size_t at = ++pos_;
        RationalFunction rhs = unary();
        if (rhs.num.is_zero()) throw SyntaxError("division by zero", at);
        acc = multiply(acc, {rhs.den, rhs.num});
      } else if (c == 'z' || c == '(') {
        acc = multiply(acc, unary());
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      RationalFunction r = unary();
      return c == '-' ? negate(r) : r;
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    const mpz_class e = integer_literal();
    if (e > kMaxExponent) throw SyntaxError("exponent too large", start);
    RationalFunction r{QPoly::constant(Rat(1)), QPoly::constant(Rat(1))};
    for (long k = 0; k < e.get_si(); ++k) r = multiply(r, base);
    return r;
  }

  mpz_class integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  RationalFunction primary() {
    const char c = peek();
    if (c == 'z') {
      ++pos_;
      return {QPoly::monomial(Rat(1), 1), QPoly::constant(Rat(1))};
    }
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return {QPoly::constant(Rat(integer_literal())), QPoly::constant(Rat(1))};
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return Parser(text).parse(); }

Lift parse_map(std::string_view text) {
  const RationalFunction r = parse_rational_function(text);
  const int degree = std::max(r.num.degree(), r.den.degree());
  if (degree > 2) throw DegreeError("map has degree " + std::to_string(degree) + "; only quadratic maps are supported");
  return Lift({r.num.coeff(2), r.num.coeff(1), r.num.coeff(0)}, {r.den.coeff(2), r.den.coeff(1), r.den.coeff(0)});
}

std::string print_map(const Lift& lift) {
  auto poly = [](const std::array<Rat, 3>& h) {
    return "(" + h[0].get_str() + ")*z^2 + (" + h[1].get_str() + ")*z + (" + h[2].get_str() + ")";
  };
  return "(" + poly(lift.f()) + ")/(" + poly(lift.g()) + ")";
}

}  // namespace quadcrucial
