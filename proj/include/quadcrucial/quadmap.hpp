#pragma once

// Quadratic rational maps as homogeneous lifts [F, G], with the resultant, Möbius
// conjugation and the ordRes function evaluated at type II points.

#include <array>
#include <string>

#include "quadcrucial/padic.hpp"

namespace quadcrucial {

/// A pair of binary quadratic forms
///   F(X, Y) = a0 X^2 + a1 XY + a2 Y^2,   G(X, Y) = b0 X^2 + b1 XY + b2 Y^2
/// representing phi(z) = F(z, 1) / G(z, 1).
class Lift {
 public:
  /// Throws DegenerateMap when Res(F, G) = 0.
  Lift(Rat a0, Rat a1, Rat a2, Rat b0, Rat b1, Rat b2);
  Lift(std::array<Rat, 3> f, std::array<Rat, 3> g);

  /// A coefficient pair that is allowed to be degenerate (e.g. to evaluate the raw
  /// resultant). Every other operation expects a nondegenerate lift.
  static Lift unchecked(std::array<Rat, 3> f, std::array<Rat, 3> g);

  /// F coefficients, X^2 first.
  const std::array<Rat, 3>& f() const noexcept { return f_; }
  const std::array<Rat, 3>& g() const noexcept { return g_; }

  friend bool operator==(const Lift&, const Lift&) = default;

 private:
  struct NoCheck {};
  Lift(std::array<Rat, 3> f, std::array<Rat, 3> g, NoCheck);

  std::array<Rat, 3> f_;
  std::array<Rat, 3> g_;
};

/// gamma = (A B; C D), acting by z -> (Az + B) / (Cz + D).
class Mobius {
 public:
  /// Throws SingularMatrix when AD - BC = 0.
  Mobius(Rat a, Rat b, Rat c, Rat d);

  static Mobius identity();
  /// z -> center + scale * z.
  static Mobius affine(const Rat& center, const Rat& scale);

  const Rat& a() const noexcept { return a_; }
  const Rat& b() const noexcept { return b_; }
  const Rat& c() const noexcept { return c_; }
  const Rat& d() const noexcept { return d_; }
  Rat det() const;
  /// The adjugate, which represents gamma^{-1} in PGL2.
  Mobius inverse() const;

 private:
  Rat a_, b_, c_, d_;
};

/// The type II point zeta_{D(center, p^{-radius_exp})}. The Gauss point is (0, 0).
struct TypeIIPoint {
  Rat center;
  Rat radius_exp;

  static TypeIIPoint gauss() { return {Rat(0), Rat(0)}; }
  bool has_integral_radius() const { return is_integer(radius_exp); }
  /// The affine Möbius z -> center + p^m z carrying the Gauss point to this point.
  /// Throws NonIntegralRadius unless m is an integer.
  Mobius chart(const PrimeCtx& ctx) const;

  /// Structural equality of (center, radius_exp); see same_point for equality in P^1_Berk.
  friend bool operator==(const TypeIIPoint&, const TypeIIPoint&) = default;
};

/// The Möbius z -> outer(inner(z)).
Mobius compose(const Mobius& outer, const Mobius& inner);

/// gamma(x). Discs map to discs with rational centres, so the result is again a TypeIIPoint.
TypeIIPoint image(const Mobius& gamma, const TypeIIPoint& x, const PrimeCtx& ctx);

/// Same radius and each centre lies in the other's disc.
bool same_point(const TypeIIPoint& x, const TypeIIPoint& y, const PrimeCtx& ctx);

/// Determinant of the 4x4 Sylvester matrix of (F, G). Zero iff F and G share a root.
Rat resultant(const Lift& lift);

struct NormalizedLift {
  Lift lift;
  /// The minimum coefficient valuation of the input; the output is p^{-exponent} * input.
  long scaling_exponent;
};

/// Scales the lift by a power of p so all coefficients are integral and one is a unit.
NormalizedLift normalize(const Lift& lift, const PrimeCtx& ctx);

/// The minimum valuation over all six coefficients.
Valuation coefficient_valuation(const Lift& lift, const PrimeCtx& ctx);

/// The lift [F^gamma, G^gamma] of gamma^{-1} o phi o gamma. No normalization is applied.
Lift conjugate(const Lift& lift, const Mobius& gamma);

/// Conjugation by z -> 1/z, moving the chart at infinity to the chart at zero.
Lift invert_chart(const Lift& lift);

/// Equal up to a nonzero scalar, by cross-multiplication of coefficient pairs.
bool projectively_equal(const Lift& x, const Lift& y);

/// Both evaluations of ordRes at a point: the Sylvester determinant of the normalized
/// conjugate, and the transformation formula starting from the Gauss point.
struct OrdResPaths {
  Rat direct;
  Rat transformed;
};

OrdResPaths ord_res_paths(const Lift& lift, const TypeIIPoint& point, const PrimeCtx& ctx);

/// ordRes_phi(point). Requires an integral radius exponent. Throws InternalConsistency if the
/// two evaluation paths disagree.
Rat ord_res_at(const Lift& lift, const TypeIIPoint& point, const PrimeCtx& ctx);

std::string to_string(const Lift& lift);

}  // namespace quadcrucial
