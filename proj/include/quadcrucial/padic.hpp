#pragma once

// Exact p-adic bookkeeping over Q: valuations, reduction to F_p and Newton polygons.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace quadcrucial {

/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
using Rat = mpq_class;

Rat make_rat(long numerator, long denominator = 1);
/// Parses "n", "-n" or "n/d". Throws InputError on malformed text or zero denominator.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& x);
bool is_integer(const Rat& x);

/// A prime p, validated at construction. The residue field is F_p.
class PrimeCtx {
 public:
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  explicit PrimeCtx(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  /// p^e for any integer e (negative exponents allowed).
  Rat power(long e) const;

  bool operator==(const PrimeCtx&) const = default;

 private:
  std::uint64_t p_;
};

/// ord_p of an element: an exact rational, or +infinity for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }

  Valuation(const Rat& v) : finite_(true), value_(v) {}  // NOLINT: implicit by design of arithmetic
  Valuation(long v) : finite_(true), value_(v) {}

  bool is_infinite() const noexcept { return !finite_; }
  bool is_finite() const noexcept { return finite_; }
  /// The finite value. Throws InputError for +infinity.
  const Rat& value() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b);
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

  std::string to_string() const;

 private:
  Valuation() : finite_(false) {}

  bool finite_;
  Rat value_;
};

Valuation min(const Valuation& a, const Valuation& b);

/// An element of F_p.
class ResidueElem {
 public:
  ResidueElem(std::uint64_t value, const PrimeCtx& ctx) : value_(value % ctx.p()), p_(ctx.p()) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend ResidueElem operator+(ResidueElem a, ResidueElem b);
  friend ResidueElem operator-(ResidueElem a, ResidueElem b);
  friend ResidueElem operator*(ResidueElem a, ResidueElem b);
  friend ResidueElem operator-(ResidueElem a);
  friend bool operator==(ResidueElem a, ResidueElem b) = default;

 private:
  ResidueElem(std::uint64_t value, std::uint64_t p, int) : value_(value), p_(p) {}
  static void check_same_field(ResidueElem a, ResidueElem b);

  std::uint64_t value_;
  std::uint64_t p_;

  friend ResidueElem residue_inverse(ResidueElem x);
};

Valuation vp(const Rat& x, const PrimeCtx& ctx);

/// x mod p, defined for vp(x) >= 0. Throws NegativeValuation otherwise.
ResidueElem reduce_residue(const Rat& x, const PrimeCtx& ctx);

/// Multiplicative inverse in F_p. Throws DivisionByZero for 0.
ResidueElem residue_inverse(ResidueElem x);

/// A Newton polygon, as its segments ordered by nondecreasing slope.
struct NewtonPolygon {
  struct Segment {
    Rat slope;
    int length;
  };

  std::vector<Segment> segments;

  int degree() const;
  /// Valuations of the roots, one per root, i.e. negated slopes with multiplicity,
  /// listed in nondecreasing order.
  std::vector<Rat> root_valuations() const;
};

/// Lower convex hull of (i, vp(c_i)) for c_d T^d + ... + c_0.
///
/// `coeffs` lists coefficients from the leading one down to the constant term. Both ends
/// must be nonzero; strip zero roots first. Slopes follow the usual convention, so the
/// roots (in an algebraic closure) have valuations equal to the negated slopes.
NewtonPolygon newton_slopes(std::span<const Rat> coeffs, const PrimeCtx& ctx);

}  // namespace quadcrucial
