#include <gtest/gtest.h>

#include "quadcrucial/crucial.hpp"
#include "quadcrucial/errors.hpp"
#include "quadcrucial/invariants.hpp"
#include "support.hpp"

using namespace quadcrucial;
using qc_test::Gen;

namespace {

Lift distinct_form(const Rat& l1, const Rat& l2) { return Lift(Rat(1), l1, Rat(0), Rat(0), l2, Rat(1)); }

}  // namespace

TEST(FixedPointPoly, Examples) {
  const FixedPointPoly a = fixed_point_poly(Lift(Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)));
  EXPECT_EQ(a.c3, 0);
  EXPECT_EQ(a.c2, 1);
  EXPECT_EQ(a.c1, -1);
  EXPECT_EQ(a.c0, 0);
  EXPECT_TRUE(a.fixes_infinity());

  const FixedPointPoly b = fixed_point_poly(distinct_form(make_rat(1, 3), Rat(2)));
  EXPECT_EQ(b(Rat(0)), 0);
  EXPECT_EQ(b(make_rat(-2, 3)), 0);  // alpha3 = (l1 - 1)/(l2 - 1)
  EXPECT_NE(b(make_rat(2, 3)), 0);
  EXPECT_TRUE(b.fixes_infinity());

  const FixedPointPoly c = fixed_point_poly(Lift(Rat(1), make_rat(1, 5), Rat(1), Rat(0), Rat(1), Rat(0)));
  EXPECT_EQ(c.c2, 0);  // the double fixed point at infinity shows up as a degree drop
  EXPECT_EQ(c(Rat(-5)), 0);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_invariants(Lift(Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1))),
            (SigmaInvariants{Rat(2), Rat(0), Rat(0)}));
  EXPECT_EQ(sigma_invariants(distinct_form(make_rat(1, 3), Rat(2))),
            (SigmaInvariants{make_rat(4, 3), make_rat(-5, 3), make_rat(-2, 3)}));
  EXPECT_EQ(sigma_invariants(Lift(Rat(1), make_rat(1, 5), Rat(1), Rat(0), Rat(1), Rat(0))),
            (SigmaInvariants{make_rat(74, 25), make_rat(73, 25), make_rat(24, 25)}));
  EXPECT_EQ(symmetric_functions(Rat(1), Rat(1), make_rat(24, 25)),
            (SigmaInvariants{make_rat(74, 25), make_rat(73, 25), make_rat(24, 25)}));
}

TEST(Lambda3, Examples) {
  EXPECT_EQ(lambda3_from(make_rat(1, 3), Rat(2)), -1);
  EXPECT_EQ(lambda3_from(Rat(0), Rat(0)), 2);
  EXPECT_THROW(lambda3_from(Rat(2), make_rat(1, 2)), DegenerateMultipliers);
}

TEST(Sigma, NormalFormMultipliersByDifferentiation) {
  Gen gen(41);
  const PrimeCtx ctx(7);
  for (int i = 0; i < 300; ++i) {
    const Rat l1 = gen.padic_rat(ctx, 2, 6), l2 = gen.padic_rat(ctx, 2, 6);
    if (l1 * l2 == 1) continue;
    const Lift l = distinct_form(l1, l2);
    EXPECT_EQ(qc_test::multiplier_at(l, Rat(0)), l1);
    EXPECT_EQ(qc_test::multiplier_at_infinity(l), l2);
    if (l2 == 1) continue;  // alpha3 is then at infinity as well
    const Rat alpha3 = (l1 - 1) / (l2 - 1);
    if (l2 * alpha3 + 1 == 0) continue;
    EXPECT_EQ(qc_test::multiplier_at(l, alpha3), lambda3_from(l1, l2));
  }
}

TEST(Sigma, OracleEquivalenceOnNormalForm) {
  Gen gen(42);
  for (auto p : qc_test::kPrimes) {
    const PrimeCtx ctx(p);
    for (int i = 0; i < 200; ++i) {
      const Rat l1 = gen.padic_rat(ctx, 2, 6), l2 = gen.padic_rat(ctx, 2, 6);
      if (l1 * l2 == 1) continue;
      const Rat l3 = lambda3_from(l1, l2);
      const SigmaInvariants s = sigma_invariants(distinct_form(l1, l2));
      const std::vector<Rat> cubic = qc_test::expand_roots({l1, l2, l3});
      EXPECT_EQ(s.sigma1, -cubic[1]);
      EXPECT_EQ(s.sigma2, cubic[2]);
      EXPECT_EQ(s.sigma3, -cubic[3]);
      for (const Rat& l : {l1, l2, l3}) {
        EXPECT_EQ(Rat(((l - s.sigma1) * l + s.sigma2) * l - s.sigma3), 0);
      }
    }
  }
}

TEST(Sigma, RelationHoldsForRandomLifts) {
  Gen gen(43);
  for (int i = 0; i < 1000; ++i) {
    const PrimeCtx ctx(qc_test::kPrimes[static_cast<std::size_t>(i) % qc_test::kPrimes.size()]);
    const SigmaInvariants s = sigma_invariants(gen.lift(ctx));
    EXPECT_EQ(s.sigma3, s.sigma1 - 2);
  }
}

TEST(Sigma, ConjugationInvariance) {
  Gen gen(44);
  for (int i = 0; i < 1000; ++i) {
    const PrimeCtx ctx(qc_test::kPrimes[static_cast<std::size_t>(i) % qc_test::kPrimes.size()]);
    const Lift l = gen.lift(ctx);
    const Mobius g = gen.mobius(ctx);
    EXPECT_EQ(sigma_invariants(conjugate(l, g)), sigma_invariants(l)) << to_string(l);
  }
}

TEST(Sigma, ScalingInvariance) {
  Gen gen(45);
  const PrimeCtx ctx(3);
  for (int i = 0; i < 100; ++i) {
    const Lift l = gen.lift(ctx);
    const Rat c = gen.padic_rat(ctx);
    std::array<Rat, 3> f = l.f(), g = l.g();
    for (auto& x : f) x *= c;
    for (auto& x : g) x *= c;
    EXPECT_EQ(sigma_invariants(Lift(f, g)), sigma_invariants(l));
  }
}

TEST(Sigma, ConjugatedNormalFormsKeepTheirMultipliers) {
  // Moving the fixed points off 0 and infinity exercises the general chart.
  Gen gen(46);
  const PrimeCtx ctx(5);
  for (int i = 0; i < 300; ++i) {
    const Rat l1 = gen.padic_rat(ctx, 2), l2 = gen.padic_rat(ctx, 2);
    if (l1 * l2 == 1) continue;
    const Lift l = conjugate(distinct_form(l1, l2), gen.mobius(ctx));
    const std::array<Rat, 4> poly = multiplier_polynomial(l);
    const std::vector<Rat> expected = qc_test::expand_roots({l1, l2, lambda3_from(l1, l2)});
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(poly[k], expected[k]);
  }
}

TEST(Sigma, MultipleFixedPointForm) {
  Gen gen(47);
  const PrimeCtx ctx(13);
  for (int i = 0; i < 200; ++i) {
    const Rat s = gen.padic_rat(ctx, 2, 6);
    const SigmaInvariants sig = sigma_invariants(normal_form_lift(MultipleFixedForm{s}));
    EXPECT_EQ(sig, symmetric_functions(Rat(1), Rat(1), Rat(1 - s * s)));
  }
}
