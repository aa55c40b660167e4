#pragma once

// Reduction-type strata of the moduli space of quadratic maps, read off from the
// specialization of [sigma1 : sigma2 : 1] in P^2(F_p).

#include <optional>
#include <string>
#include <vector>

#include "quadcrucial/invariants.hpp"
#include "quadcrucial/padic.hpp"

namespace quadcrucial {

enum class Stratum { W1, W2, W3, W4 };

std::string to_string(Stratum s);

struct ReductionType {
  Stratum tag;
  /// Present exactly for W2, and then different from 2 mod p.
  std::optional<ResidueElem> x_tilde;

  friend bool operator==(const ReductionType&, const ReductionType&) = default;
};

std::string to_string(const ReductionType& t);

/// A point of P^2(F_p), scaled so that its first nonzero coordinate is 1.
class ProjectivePointFp {
 public:
  /// Throws InputError if all coordinates vanish.
  ProjectivePointFp(ResidueElem x, ResidueElem y, ResidueElem z);

  const ResidueElem& x() const noexcept { return x_; }
  const ResidueElem& y() const noexcept { return y_; }
  const ResidueElem& z() const noexcept { return z_; }

  friend bool operator==(const ProjectivePointFp&, const ProjectivePointFp&) = default;

 private:
  ResidueElem x_, y_, z_;
};

ProjectivePointFp specialize(const SigmaInvariants& sigma, const PrimeCtx& ctx);

ReductionType stratum(const SigmaInvariants& sigma, const PrimeCtx& ctx);

/// Valuations of the three multipliers, in nondecreasing order. Zero multipliers are split off
/// before the Newton polygon and reported as +infinity.
std::vector<Valuation> multiplier_valuations(const SigmaInvariants& sigma, const PrimeCtx& ctx);

/// Bad reduction (stratum other than W1) implies a classical repelling fixed point.
/// Returns the truth value of that implication for this map.
bool hsia_check(const SigmaInvariants& sigma, const PrimeCtx& ctx);

}  // namespace quadcrucial
