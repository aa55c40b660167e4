#include "quadcrucial/quadmap.hpp"

#include <utility>
#include <vector>

#include "quadcrucial/algebra.hpp"
#include "quadcrucial/errors.hpp"

namespace quadcrucial {

Lift::Lift(Rat a0, Rat a1, Rat a2, Rat b0, Rat b1, Rat b2)
    : Lift({std::move(a0), std::move(a1), std::move(a2)}, {std::move(b0), std::move(b1), std::move(b2)}) {}

Lift::Lift(std::array<Rat, 3> f, std::array<Rat, 3> g) : f_(std::move(f)), g_(std::move(g)) {
  if (resultant(*this) == 0) throw DegenerateMap("lift " + to_string(*this) + " has zero resultant");
}

Lift::Lift(std::array<Rat, 3> f, std::array<Rat, 3> g, NoCheck) : f_(std::move(f)), g_(std::move(g)) {}

Lift Lift::unchecked(std::array<Rat, 3> f, std::array<Rat, 3> g) {
  return Lift(std::move(f), std::move(g), NoCheck{});
}

Mobius::Mobius(Rat a, Rat b, Rat c, Rat d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det() == 0) throw SingularMatrix("Möbius matrix has zero determinant");
}

Mobius Mobius::identity() { return {Rat(1), Rat(0), Rat(0), Rat(1)}; }

Mobius Mobius::affine(const Rat& center, const Rat& scale) { return {scale, center, Rat(0), Rat(1)}; }

Rat Mobius::det() const { return a_ * d_ - b_ * c_; }

Mobius Mobius::inverse() const { return {d_, Rat(-b_), Rat(-c_), a_}; }

Mobius TypeIIPoint::chart(const PrimeCtx& ctx) const {
  if (!has_integral_radius()) {
    throw NonIntegralRadius("radius exponent " + radius_exp.get_str() +
                            " is not an integer; the point is not the image of the Gauss point over Q");
  }
  return Mobius::affine(center, ctx.power(radius_exp.get_num().get_si()));
}

Mobius compose(const Mobius& outer, const Mobius& inner) {
  return {outer.a() * inner.a() + outer.b() * inner.c(), outer.a() * inner.b() + outer.b() * inner.d(),
          outer.c() * inner.a() + outer.d() * inner.c(), outer.c() * inner.b() + outer.d() * inner.d()};
}

namespace {

// z -> alpha z + beta scales radii by |alpha|.
TypeIIPoint affine_image(const Rat& alpha, const Rat& beta, const TypeIIPoint& x, const PrimeCtx& ctx) {
  return {alpha * x.center + beta, x.radius_exp + vp(alpha, ctx).value()};
}

// z -> 1/z. A disc avoiding 0 goes to D(1/a, r/|a|^2); a disc around 0 to D(0, 1/r).
TypeIIPoint inversion_image(const TypeIIPoint& x, const PrimeCtx& ctx) {
  const Valuation va = vp(x.center, ctx);
  if (va < Valuation(x.radius_exp)) return {1 / x.center, x.radius_exp - 2 * va.value()};
  return {Rat(0), Rat(-x.radius_exp)};
}

}  // namespace

TypeIIPoint image(const Mobius& g, const TypeIIPoint& x, const PrimeCtx& ctx) {
  if (g.c() == 0) return affine_image(g.a() / g.d(), g.b() / g.d(), x, ctx);
  // (az + b)/(cz + d) = a/c - (det/c) / (cz + d)
  const TypeIIPoint y = inversion_image(affine_image(g.c(), g.d(), x, ctx), ctx);
  return affine_image(-g.det() / g.c(), g.a() / g.c(), y, ctx);
}

bool same_point(const TypeIIPoint& x, const TypeIIPoint& y, const PrimeCtx& ctx) {
  return x.radius_exp == y.radius_exp && vp(Rat(x.center - y.center), ctx) >= Valuation(x.radius_exp);
}

Rat resultant(const Lift& lift) {
  const auto& [a0, a1, a2] = lift.f();
  const auto& [b0, b1, b2] = lift.g();
  std::vector<std::vector<Rat>> sylvester{
      {a0, a1, a2, Rat(0)},
      {Rat(0), a0, a1, a2},
      {b0, b1, b2, Rat(0)},
      {Rat(0), b0, b1, b2},
  };
  return determinant(std::move(sylvester));
}

Valuation coefficient_valuation(const Lift& lift, const PrimeCtx& ctx) {
  Valuation m = Valuation::infinity();
  for (const auto& c : lift.f()) m = min(m, vp(c, ctx));
  for (const auto& c : lift.g()) m = min(m, vp(c, ctx));
  return m;
}

NormalizedLift normalize(const Lift& lift, const PrimeCtx& ctx) {
  const Valuation mu = coefficient_valuation(lift, ctx);
  if (mu.is_infinite()) throw DegenerateMap("cannot normalize the zero lift");
  const long e = mu.value().get_num().get_si();
  const Rat scale = ctx.power(-e);
  std::array<Rat, 3> f, g;
  for (std::size_t i = 0; i < 3; ++i) {
    f[i] = scale * lift.f()[i];
    g[i] = scale * lift.g()[i];
  }
  return {Lift::unchecked(std::move(f), std::move(g)), e};
}

namespace {

// Coefficients of H(AX + BY, CX + DY) for H = h0 X^2 + h1 XY + h2 Y^2.
std::array<Rat, 3> substitute(const std::array<Rat, 3>& h, const Mobius& m) {
  const Rat &A = m.a(), &B = m.b(), &C = m.c(), &D = m.d();
  return {
      h[0] * A * A + h[1] * A * C + h[2] * C * C,
      2 * h[0] * A * B + h[1] * (A * D + B * C) + 2 * h[2] * C * D,
      h[0] * B * B + h[1] * B * D + h[2] * D * D,
  };
}

}  // namespace

Lift conjugate(const Lift& lift, const Mobius& gamma) {
  const auto fs = substitute(lift.f(), gamma);
  const auto gs = substitute(lift.g(), gamma);
  std::array<Rat, 3> f, g;
  for (std::size_t i = 0; i < 3; ++i) {
    f[i] = gamma.d() * fs[i] - gamma.b() * gs[i];
    g[i] = -gamma.c() * fs[i] + gamma.a() * gs[i];
  }
  return Lift::unchecked(std::move(f), std::move(g));
}

Lift invert_chart(const Lift& lift) { return conjugate(lift, Mobius(Rat(0), Rat(1), Rat(1), Rat(0))); }

bool projectively_equal(const Lift& x, const Lift& y) {
  std::array<Rat, 6> u{x.f()[0], x.f()[1], x.f()[2], x.g()[0], x.g()[1], x.g()[2]};
  std::array<Rat, 6> v{y.f()[0], y.f()[1], y.f()[2], y.g()[0], y.g()[1], y.g()[2]};
  for (std::size_t i = 0; i < 6; ++i) {
    if ((u[i] == 0) != (v[i] == 0)) return false;
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

OrdResPaths ord_res_paths(const Lift& lift, const TypeIIPoint& point, const PrimeCtx& ctx) {
  const Mobius gamma = point.chart(ctx);

  const Lift direct_lift = normalize(conjugate(lift, gamma), ctx).lift;
  const Rat direct = vp(resultant(direct_lift), ctx).value();

  // ordRes(zeta_G) + (d^2 + d) ord(det gamma) - 2d min(ord F^gamma, ord G^gamma), d = 2,
  // with F^gamma, G^gamma built from a normalized lift at the Gauss point.
  const Lift base = normalize(lift, ctx).lift;
  const Rat at_gauss = vp(resultant(base), ctx).value();
  const Rat moved_min = coefficient_valuation(conjugate(base, gamma), ctx).value();
  const Rat transformed = at_gauss + 6 * vp(gamma.det(), ctx).value() - 4 * moved_min;

  return {direct, transformed};
}

Rat ord_res_at(const Lift& lift, const TypeIIPoint& point, const PrimeCtx& ctx) {
  auto [direct, transformed] = ord_res_paths(lift, point, ctx);
  if (direct != transformed) {
    throw InternalConsistency("ordRes paths disagree at (" + point.center.get_str() + ", " +
                              point.radius_exp.get_str() + "): direct " + direct.get_str() +
                              ", transformed " + transformed.get_str());
  }
  return direct;
}

std::string to_string(const Lift& lift) {
  auto form = [](const std::array<Rat, 3>& h) {
    return "(" + h[0].get_str() + ")X^2 + (" + h[1].get_str() + ")XY + (" + h[2].get_str() + ")Y^2";
  };
  return "[" + form(lift.f()) + ", " + form(lift.g()) + "]";
}

}  // namespace quadcrucial
