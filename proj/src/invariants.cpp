#include "quadcrucial/invariants.hpp"

#include <optional>
#include <vector>

#include "quadcrucial/algebra.hpp"
#include "quadcrucial/errors.hpp"

namespace quadcrucial {

FixedPointPoly fixed_point_poly(const Lift& lift) {
  const auto& [a0, a1, a2] = lift.f();
  const auto& [b0, b1, b2] = lift.g();
  return {Rat(-b0), Rat(a0 - b1), Rat(a1 - b2), a2};
}

namespace {

// Res_z(P(z), A(z) - T B(z)) with A = f' - z g', B = g, for a lift whose fixed points are
// all finite. At a fixed point alpha the multiplier is A(alpha) / B(alpha), so the result is
// a constant multiple of prod (T - lambda_i). The T-degree is at most 3, so four exact
// evaluations determine it. Returns the monic cubic, or nullopt if the T^3 term vanishes.
std::optional<std::array<Rat, 4>> monic_multiplier_cubic(const Lift& lift) {
  const FixedPointPoly fp = fixed_point_poly(lift);
  const auto& [a0, a1, a2] = lift.f();
  const auto& [b0, b1, b2] = lift.g();
  const Rat zero(0);

  std::vector<Rat> nodes, values;
  for (long t = 0; t < 4; ++t) {
    const Rat T(t);
    const Rat q2 = -2 * b0 - T * b0;
    const Rat q1 = 2 * a0 - b1 - T * b1;
    const Rat q0 = a1 - T * b2;
    std::vector<std::vector<Rat>> sylvester{
        {fp.c3, fp.c2, fp.c1, fp.c0, zero},
        {zero, fp.c3, fp.c2, fp.c1, fp.c0},
        {q2, q1, q0, zero, zero},
        {zero, q2, q1, q0, zero},
        {zero, zero, q2, q1, q0},
    };
    nodes.push_back(T);
    values.push_back(determinant(std::move(sylvester)));
  }
  const QPoly m = interpolate(nodes, values);
  if (m.degree() != 3) return std::nullopt;
  const Rat lead = m.leading();
  return std::array<Rat, 4>{Rat(1), Rat(m.coeff(2) / lead), Rat(m.coeff(1) / lead), Rat(m.coeff(0) / lead)};
}

// Conjugation by z -> c + 1/z, i.e. new coordinate w = 1/(z - c). Infinity maps to c.
Lift chart_at(const Lift& lift, long c) { return conjugate(lift, Mobius(Rat(c), Rat(1), Rat(1), Rat(0))); }

// Deterministic sequence of lifts with all fixed points finite: the input itself when
// infinity is not fixed, then charts at the smallest nonnegative integers that are not
// fixed points.
std::vector<Lift> candidate_charts(const Lift& lift, std::size_t count) {
  const FixedPointPoly fp = fixed_point_poly(lift);
  std::vector<Lift> out;
  if (!fp.fixes_infinity()) out.push_back(lift);
  for (long c = 0; out.size() < count; ++c) {
    if (fp(Rat(c)) != 0) out.push_back(chart_at(lift, c));
  }
  return out;
}

std::optional<std::array<Rat, 4>> checked_cubic(const Lift& chart) {
  auto cubic = monic_multiplier_cubic(chart);
  if (!cubic) return std::nullopt;
  // Monic T^3 - s1 T^2 + s2 T - s3, and s3 = s1 - 2 must hold.
  const Rat s1 = -(*cubic)[1];
  const Rat s3 = -(*cubic)[3];
  if (s3 != s1 - 2) return std::nullopt;
  return cubic;
}

}  // namespace

std::array<Rat, 4> multiplier_polynomial(const Lift& lift) {
  if (resultant(lift) == 0) throw DegenerateMap("multipliers of a degenerate lift");
  for (const Lift& chart : candidate_charts(lift, 3)) {
    if (auto cubic = checked_cubic(chart)) return *cubic;
  }
  throw InternalConsistency("multiplier cubic failed its consistency check on every chart for " +
                            to_string(lift));
}

SigmaInvariants sigma_invariants(const Lift& lift) {
  const auto cubic = multiplier_polynomial(lift);
  return {Rat(-cubic[1]), cubic[2], Rat(-cubic[3])};
}

Rat lambda3_from(const Rat& lambda1, const Rat& lambda2) {
  const Rat den = lambda1 * lambda2 - 1;
  if (den == 0) {
    throw DegenerateMultipliers("lambda1 * lambda2 = 1 (" + lambda1.get_str() + ", " + lambda2.get_str() + ")");
  }
  return Rat((lambda1 + lambda2 - 2) / den);
}

SigmaInvariants symmetric_functions(const Rat& l1, const Rat& l2, const Rat& l3) {
  return {Rat(l1 + l2 + l3), Rat(l1 * l2 + l1 * l3 + l2 * l3), Rat(l1 * l2 * l3)};
}

}  // namespace quadcrucial
