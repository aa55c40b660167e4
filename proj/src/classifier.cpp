#include "quadcrucial/classifier.hpp"

#include <algorithm>

#include "quadcrucial/errors.hpp"

namespace quadcrucial {

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::W1: return "W1";
    case Stratum::W2: return "W2";
    case Stratum::W3: return "W3";
    case Stratum::W4: return "W4";
  }
  return "?";
}

std::string to_string(const ReductionType& t) {
  std::string out = to_string(t.tag);
  if (t.x_tilde) out += "(" + std::to_string(t.x_tilde->value()) + ")";
  return out;
}

namespace {

ResidueElem first_nonzero(ResidueElem x, ResidueElem y, ResidueElem z) {
  if (!x.is_zero()) return x;
  if (!y.is_zero()) return y;
  if (!z.is_zero()) return z;
  throw InputError("the zero vector is not a projective point");
}

}  // namespace

ProjectivePointFp::ProjectivePointFp(ResidueElem x, ResidueElem y, ResidueElem z)
    : x_(x), y_(y), z_(z) {
  const ResidueElem inv = residue_inverse(first_nonzero(x, y, z));
  x_ = x * inv;
  y_ = y * inv;
  z_ = z * inv;
}

ProjectivePointFp specialize(const SigmaInvariants& sigma, const PrimeCtx& ctx) {
  const Valuation mu = min(min(vp(sigma.sigma1, ctx), vp(sigma.sigma2, ctx)), Valuation(0L));
  const Rat scale = ctx.power(-mu.value().get_num().get_si());
  return ProjectivePointFp(reduce_residue(Rat(sigma.sigma1 * scale), ctx),
                           reduce_residue(Rat(sigma.sigma2 * scale), ctx), reduce_residue(scale, ctx));
}

ReductionType stratum(const SigmaInvariants& sigma, const PrimeCtx& ctx) {
  const ProjectivePointFp pt = specialize(sigma, ctx);
  if (!pt.z().is_zero()) return {Stratum::W1, std::nullopt};
  if (!pt.x().is_zero()) {
    // x is already 1 after projective normalization, so y is sigma2/sigma1 mod p.
    const ResidueElem x_tilde = pt.y();
    if (x_tilde == ResidueElem(2, ctx)) return {Stratum::W3, std::nullopt};
    return {Stratum::W2, x_tilde};
  }
  return {Stratum::W4, std::nullopt};
}

std::vector<Valuation> multiplier_valuations(const SigmaInvariants& sigma, const PrimeCtx& ctx) {
  // T^3 - s1 T^2 + s2 T - s3, top coefficient first.
  std::vector<Rat> coeffs{Rat(1), Rat(-sigma.sigma1), sigma.sigma2, Rat(-sigma.sigma3)};
  std::vector<Valuation> out;
  while (coeffs.size() > 1 && coeffs.back() == 0) {
    coeffs.pop_back();
    out.push_back(Valuation::infinity());
  }
  if (coeffs.size() > 1) {
    for (const Rat& v : newton_slopes(coeffs, ctx).root_valuations()) out.emplace_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool hsia_check(const SigmaInvariants& sigma, const PrimeCtx& ctx) {
  if (stratum(sigma, ctx).tag == Stratum::W1) return true;
  const auto vals = multiplier_valuations(sigma, ctx);
  return std::any_of(vals.begin(), vals.end(), [](const Valuation& v) { return v < Valuation(0L); });
}

}  // namespace quadcrucial
