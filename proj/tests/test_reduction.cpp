#include <gtest/gtest.h>

#include "quadcrucial/errors.hpp"
#include "quadcrucial/reduction.hpp"
#include "support.hpp"

using namespace quadcrucial;
using qc_test::Gen;

namespace {

std::vector<ResidueElem> fp(std::initializer_list<std::uint64_t> xs, const PrimeCtx& ctx) {
  std::vector<ResidueElem> out;
  for (auto x : xs) out.emplace_back(x, ctx);
  return out;
}

// (a z + b) / (c z + d) as a degree-1 residue map.
ResidueMap moebius(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d, const PrimeCtx& ctx) {
  return make_residue_map(fp({a, b}, ctx), fp({c, d}, ctx));
}

}  // namespace

TEST(ReduceAt, GoodReductionOfZSquared) {
  const PrimeCtx p5(5);
  const ResidueMap r = reduce_at(Lift(Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)), TypeIIPoint::gauss(), p5);
  EXPECT_EQ(r.degree, 2);
  EXPECT_EQ(r.f, fp({1, 0, 0}, p5));
  EXPECT_EQ(r.g, fp({0, 0, 1}, p5));
  EXPECT_EQ(classify_residue(r).kind, ResidueKind::Repelling);
}

TEST(ReduceAt, ShiftedInverseAtItsCrucialPoint) {
  const PrimeCtx p5(5);
  const ResidueMap r = reduce_at(Lift(Rat(1), make_rat(1, 5), Rat(1), Rat(0), Rat(1), Rat(0)), {Rat(0), Rat(-1)}, p5);
  // (z^2 + z) / z = z + 1
  EXPECT_EQ(r.degree, 1);
  EXPECT_EQ(r.f, fp({1, 1}, p5));
  EXPECT_EQ(r.g, fp({0, 1}, p5));
  EXPECT_EQ(classify_residue(r).kind, ResidueKind::AdditiveIndifferent);
}

TEST(ReduceAt, DistinctFormAtItsCrucialPoint) {
  const PrimeCtx p3(3);
  const ResidueMap r = reduce_at(Lift(Rat(1), make_rat(1, 3), Rat(0), Rat(0), Rat(2), Rat(1)), {Rat(0), Rat(-1)}, p3);
  // (z^2 + z) / (2z) with the common z removed: (z + 1) / 2
  EXPECT_EQ(r.degree, 1);
  EXPECT_EQ(r.f, fp({1, 1}, p3));
  EXPECT_EQ(r.g, fp({0, 2}, p3));
  const ResidueClass c = classify_residue(r);
  EXPECT_EQ(c.kind, ResidueKind::MultiplicativeIndifferent);
  EXPECT_EQ(c.x_tilde, ResidueElem(1, p3));
}

TEST(ReduceAt, RequiresIntegralRadius) {
  EXPECT_THROW(reduce_at(Lift(Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)), {Rat(0), make_rat(1, 2)}, PrimeCtx(3)),
               NonIntegralRadius);
}

TEST(MakeResidueMap, RemovesCommonFactorsIncludingY) {
  const PrimeCtx p7(7);
  // X Y / Y^2 -> X / Y
  const ResidueMap a = make_residue_map(fp({0, 1, 0}, p7), fp({0, 0, 1}, p7));
  EXPECT_EQ(a.degree, 1);
  EXPECT_EQ(a.f, fp({1, 0}, p7));
  EXPECT_EQ(a.g, fp({0, 1}, p7));
  // (X + Y)(X + 2Y) / ((X + Y) 3Y) -> (X + 2Y) / 3Y scaled so the first coefficient is 1
  const ResidueMap b = make_residue_map(fp({1, 3, 2}, p7), fp({0, 3, 3}, p7));
  EXPECT_EQ(b.degree, 1);
  EXPECT_EQ(b.f, fp({1, 2}, p7));
  EXPECT_EQ(b.g, fp({0, 3}, p7));
  // 0 / X^2 -> constant 0
  const ResidueMap c = make_residue_map(fp({0, 0, 0}, p7), fp({1, 0, 0}, p7));
  EXPECT_EQ(c.degree, 0);
  EXPECT_EQ(classify_residue(c).kind, ResidueKind::MovedConstant);
  EXPECT_THROW(make_residue_map(fp({0, 0, 0}, p7), fp({0, 0, 0}, p7)), InputError);
}

TEST(ClassifyResidue, Examples) {
  const PrimeCtx p3(3);
  const ResidueClass m = classify_residue(moebius(1, 1, 0, 2, p3));
  EXPECT_EQ(m.kind, ResidueKind::MultiplicativeIndifferent);
  EXPECT_EQ(m.x_tilde, ResidueElem(1, p3));
  for (auto p : qc_test::kPrimes) {
    const PrimeCtx ctx(p);
    EXPECT_EQ(classify_residue(moebius(1, 1, 0, 1, ctx)).kind, ResidueKind::AdditiveIndifferent);
    EXPECT_EQ(classify_residue(moebius(p - 1, 0, 0, p - 1, ctx)).kind, ResidueKind::IdIndifferent);
  }
}

TEST(ClassifyResidue, PayloadIsEigenvalueRatioSum) {
  // Diagonal maps z -> c z have eigenvalue ratio c: payload c + 1/c.
  for (auto p : qc_test::kPrimes) {
    const PrimeCtx ctx(p);
    for (std::uint64_t c = 2; c < p; ++c) {
      const ResidueClass k = classify_residue(moebius(c, 0, 0, 1, ctx));
      EXPECT_EQ(k.kind, ResidueKind::MultiplicativeIndifferent);
      EXPECT_EQ(k.x_tilde->value(), (c + qc_test::brute_inverse(c, p)) % p);
    }
  }
}

TEST(ClassifyResidue, InvariantUnderScaling) {
  Gen gen(61);
  for (auto p : qc_test::kPrimes) {
    const PrimeCtx ctx(p);
    for (int i = 0; i < 200; ++i) {
      const auto r = [&] { return static_cast<std::uint64_t>(gen.integer(0, static_cast<long>(p) - 1)); };
      const std::uint64_t a = r(), b = r(), c = r(), d = r();
      if ((a * d + p * p - (b * c) % p) % p == 0) continue;
      const std::uint64_t s = static_cast<std::uint64_t>(gen.integer(1, static_cast<long>(p) - 1));
      EXPECT_EQ(classify_residue(moebius(a, b, c, d, ctx)),
                classify_residue(moebius(a * s, b * s, c * s, d * s, ctx)));
    }
  }
}

TEST(ReduceAt, DegreeTwoExactlyWhenOrdResVanishes) {
  Gen gen(62);
  for (int i = 0; i < 500; ++i) {
    const PrimeCtx ctx(qc_test::kPrimes[static_cast<std::size_t>(i) % qc_test::kPrimes.size()]);
    const Lift l = gen.lift(ctx);
    const TypeIIPoint at{gen.padic_rat(ctx, 1, 3), Rat(gen.integer(-2, 2))};
    EXPECT_EQ(reduce_at(l, at, ctx).degree == 2, ord_res_at(l, at, ctx) == 0);
  }
}

TEST(ReduceAt, DistinctFormCasesAtTheRepellingRadius) {
  // |l1| > 1 >= |l2| and xi = zeta_{D(0, |l1|)}.
  Gen gen(63);
  for (auto p : {3ul, 5ul, 7ul, 13ul}) {
    const PrimeCtx ctx(p);
    for (int i = 0; i < 150; ++i) {
      const long v1 = -gen.integer(1, 3);
      const Rat l1 = gen.with_valuation(ctx, v1);
      const long r2 = gen.integer(0, static_cast<long>(p) - 1);
      const Rat l2 = gen.with_residue(ctx, r2);
      if (l1 * l2 == 1) continue;
      const ResidueClass c = classify_residue(reduce_at(Lift(Rat(1), l1, Rat(0), Rat(0), l2, Rat(1)), {Rat(0), Rat(v1)}, ctx));
      if (r2 == 0) {
        EXPECT_EQ(c.kind, ResidueKind::MovedConstant);
      } else if (r2 == 1) {
        EXPECT_EQ(c.kind, ResidueKind::AdditiveIndifferent);
      } else {
        EXPECT_EQ(c.kind, ResidueKind::MultiplicativeIndifferent);
        const std::uint64_t lt = static_cast<std::uint64_t>(r2);
        EXPECT_EQ(c.x_tilde->value(), (lt + qc_test::brute_inverse(lt, p)) % p);
      }
    }
  }
}
