#pragma once

// Reduction of a quadratic map at a type II point and its fixed-point type.

#include <optional>
#include <string>
#include <vector>

#include "quadcrucial/padic.hpp"
#include "quadcrucial/quadmap.hpp"

namespace quadcrucial {

/// [F~ : G~] over F_p with the common factor removed. Both forms have degree `degree`,
/// coefficients listed X^degree first; the first nonzero coefficient of (F~, G~) is 1.
struct ResidueMap {
  std::vector<ResidueElem> f;
  std::vector<ResidueElem> g;
  int degree;

  friend bool operator==(const ResidueMap&, const ResidueMap&) = default;
};

/// Builds a residue map from two forms of equal formal degree (not both zero), dividing out
/// their gcd in F_p[X, Y].
ResidueMap make_residue_map(std::vector<ResidueElem> f, std::vector<ResidueElem> g);

enum class ResidueKind { Repelling, MultiplicativeIndifferent, AdditiveIndifferent, IdIndifferent, MovedConstant };

std::string to_string(ResidueKind k);

struct ResidueClass {
  ResidueKind kind;
  /// For MultiplicativeIndifferent: c + 1/c for the eigenvalue ratio c, which may itself only
  /// exist in F_{p^2}.
  std::optional<ResidueElem> x_tilde;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

std::string to_string(const ResidueClass& c);

/// Reduction of phi at `point` (integral radius exponent required; NonIntegralRadius otherwise).
ResidueMap reduce_at(const Lift& lift, const TypeIIPoint& point, const PrimeCtx& ctx);

ResidueClass classify_residue(const ResidueMap& r);

}  // namespace quadcrucial
