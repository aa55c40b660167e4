#pragma once

// ordRes restricted to a line of discs {zeta_{D(center, p^{-m})} : m in Q}, as an exact
// convex piecewise-affine function of m.

#include <optional>
#include <vector>

#include "quadcrucial/padic.hpp"
#include "quadcrucial/quadmap.hpp"

namespace quadcrucial {

struct AffinePiece {
  Rat slope;
  Rat intercept;

  Rat operator()(const Rat& m) const { return slope * m + intercept; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Continuous piecewise-affine function on Q. pieces[0] covers (-inf, breakpoints[0]],
/// pieces[i] covers [breakpoints[i-1], breakpoints[i]], the last piece runs to +inf.
class PLFunction {
 public:
  /// Throws InputError unless breakpoints are strictly increasing, there is one more piece
  /// than breakpoints, and neighbouring pieces agree at each breakpoint.
  PLFunction(std::vector<Rat> breakpoints, std::vector<AffinePiece> pieces);

  const std::vector<Rat>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<AffinePiece>& pieces() const noexcept { return pieces_; }

  Rat operator()(const Rat& m) const;
  bool is_convex() const;

 private:
  std::vector<Rat> breakpoints_;
  std::vector<AffinePiece> pieces_;
};

/// m -> ordRes_phi(zeta_{D(center, p^{-m})}) for all rational m.
PLFunction ord_res_profile(const Lift& lift, const Rat& center, const PrimeCtx& ctx);

/// Minimizing set of a convex PL function: a single point when lo == hi.
struct Minimizer {
  Rat lo;
  Rat hi;
  Rat value;

  bool is_point() const { return lo == hi; }
};

/// Throws Unbounded when the function has no bounded minimizing set, and InputError when
/// it is not convex.
Minimizer minimize_profile(const PLFunction& f);

}  // namespace quadcrucial
