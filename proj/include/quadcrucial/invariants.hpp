#pragma once

// Elementary symmetric functions of the fixed-point multipliers, computed without
// extracting any root.

#include <array>

#include "quadcrucial/padic.hpp"
#include "quadcrucial/quadmap.hpp"

namespace quadcrucial {

struct SigmaInvariants {
  Rat sigma1;
  Rat sigma2;
  Rat sigma3;

  friend bool operator==(const SigmaInvariants&, const SigmaInvariants&) = default;
};

/// F(z, 1) - z G(z, 1) = c3 z^3 + c2 z^2 + c1 z + c0, whose roots are the finite fixed points.
struct FixedPointPoly {
  Rat c3, c2, c1, c0;

  Rat operator()(const Rat& z) const { return ((c3 * z + c2) * z + c1) * z + c0; }
  /// Infinity is a fixed point exactly when the cubic term vanishes.
  bool fixes_infinity() const { return c3 == 0; }
};

FixedPointPoly fixed_point_poly(const Lift& lift);

/// Coefficients (T^3 first) of the monic multiplier polynomial prod (T - lambda_i).
std::array<Rat, 4> multiplier_polynomial(const Lift& lift);

/// Throws DegenerateMap for a degenerate lift and InternalConsistency if the
/// relation sigma3 = sigma1 - 2 fails on every deterministic chart tried.
SigmaInvariants sigma_invariants(const Lift& lift);

/// Multiplier of the third fixed point given the other two, (l1 + l2 - 2) / (l1 l2 - 1).
/// Throws DegenerateMultipliers when l1 l2 = 1.
Rat lambda3_from(const Rat& lambda1, const Rat& lambda2);

/// sigma1, sigma2, sigma3 of an explicit multiplier triple.
SigmaInvariants symmetric_functions(const Rat& l1, const Rat& l2, const Rat& l3);

}  // namespace quadcrucial
