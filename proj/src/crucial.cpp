#include "quadcrucial/crucial.hpp"

#include <array>
#include <sstream>

#include "quadcrucial/errors.hpp"

namespace quadcrucial {

Lift normal_form_lift(const NormalForm& form) {
  if (const auto* m = std::get_if<MultipleFixedForm>(&form)) {
    return Lift(Rat(1), m->s, Rat(1), Rat(0), Rat(1), Rat(0));
  }
  const auto& d = std::get<DistinctFixedForm>(form);
  if (d.lambda1 * d.lambda2 == 1) {
    throw DegenerateMultipliers("normal form with lambda1 * lambda2 = 1 has zero resultant");
  }
  return Lift(Rat(1), d.lambda1, Rat(0), Rat(0), d.lambda2, Rat(1));
}

std::optional<NormalForm> recognize_normal_form(const Lift& lift) {
  const Rat& lead = lift.f()[0];
  if (lead == 0) return std::nullopt;
  const Rat a1 = lift.f()[1] / lead, a2 = lift.f()[2] / lead;
  const Rat b0 = lift.g()[0] / lead, b1 = lift.g()[1] / lead, b2 = lift.g()[2] / lead;
  if (b0 != 0) return std::nullopt;
  if (a2 == 1 && b1 == 1 && b2 == 0) return MultipleFixedForm{a1};
  if (a2 == 0 && b2 == 1) return DistinctFixedForm{a1, b1};
  return std::nullopt;
}

namespace {

ReductionType stratum_from_indifferent(const Rat& mu, const PrimeCtx& ctx) {
  const ResidueElem r = reduce_residue(mu, ctx);
  if (r.is_zero()) return {Stratum::W4, std::nullopt};
  if (r == ResidueElem(1, ctx)) return {Stratum::W3, std::nullopt};
  return {Stratum::W2, r + residue_inverse(r)};
}

// Fills the residue class and ordRes value at an already-located xi.
CrucialReport complete_report(const Lift& lift, TypeIIPoint xi, ReductionType stratum, const PrimeCtx& ctx) {
  CrucialReport report{std::move(xi), std::move(stratum), std::nullopt, {}, Rat(0)};
  if (report.xi.has_integral_radius()) {
    report.residue_class = classify_residue(reduce_at(lift, report.xi, ctx));
  } else {
    report.unavailable_reason = "radius exponent " + report.xi.radius_exp.get_str() +
                                " is not an integer; the point is only defined over a ramified extension";
  }
  report.min_ord_res = ord_res_profile(lift, report.xi.center, ctx)(report.xi.radius_exp);
  return report;
}

bool is_one_mod_p(const Rat& x, const PrimeCtx& ctx) { return reduce_residue(x, ctx) == ResidueElem(1, ctx); }

}  // namespace

CrucialReport predict_xi_multiple_fixed(const Rat& s, const PrimeCtx& ctx) {
  const Lift lift = normal_form_lift(MultipleFixedForm{s});
  const Rat lambda3 = 1 - s * s;
  const Valuation v = vp(lambda3, ctx);
  if (v >= Valuation(0L)) return complete_report(lift, TypeIIPoint::gauss(), {Stratum::W1, std::nullopt}, ctx);
  // |lambda3| > 1: xi = zeta_{D(0, sqrt|lambda3|)}.
  return complete_report(lift, {Rat(0), Rat(v.value() / 2)}, {Stratum::W3, std::nullopt}, ctx);
}

namespace {

using Point = std::optional<Rat>;  // nullopt is infinity

// z -> (z - a)(c - b) / ((z - b)(c - a)), sending a, b, c to 0, infinity, 1.
Mobius to_standard(const Point& a, const Point& b, const Point& c) {
  if (!a) return {Rat(0), Rat(*c - *b), Rat(1), Rat(-*b)};
  if (!b) return {Rat(1), Rat(-*a), Rat(0), Rat(*c - *a)};
  if (!c) return {Rat(1), Rat(-*a), Rat(1), Rat(-*b)};
  return {Rat(*c - *b), Rat(-*a * (*c - *b)), Rat(*c - *a), Rat(-*b * (*c - *a))};
}

}  // namespace

CrucialReport predict_xi_distinct_fixed(const Rat& lambda1, const Rat& lambda2, const PrimeCtx& ctx) {
  const Rat lambda3 = lambda3_from(lambda1, lambda2);
  const Lift lift = normal_form_lift(DistinctFixedForm{lambda1, lambda2});
  const Valuation v1 = vp(lambda1, ctx), v2 = vp(lambda2, ctx), v3 = vp(lambda3, ctx);
  const Valuation zero(0L);

  // Predicts in the normal form with fixed points i, j at 0, infinity, then maps xi back.
  // Only used when all three fixed points are distinct.
  auto reordered = [&](std::size_t i, std::size_t j) {
    const std::array<Rat, 3> lambda{lambda1, lambda2, lambda3};
    const std::array<Point, 3> alpha{Rat(0), std::nullopt, Rat((lambda1 - 1) / (lambda2 - 1))};
    const std::size_t k = 3 - i - j;
    const Rat q = (lambda[i] - 1) / (lambda[j] - 1);
    const Mobius gamma = compose(to_standard(alpha[i], alpha[j], alpha[k]).inverse(), to_standard(Rat(0), std::nullopt, q));
    const CrucialReport inner = predict_xi_distinct_fixed(lambda[i], lambda[j], ctx);
    return complete_report(lift, image(gamma, inner.xi, ctx), inner.stratum, ctx);
  };

  if (v1 >= zero && v2 >= zero && v3 >= zero) {
    const Valuation w = vp(Rat(lambda1 * lambda2 - 1), ctx);
    if (w == zero) return complete_report(lift, TypeIIPoint::gauss(), {Stratum::W1, std::nullopt}, ctx);
    if (is_one_mod_p(lambda1, ctx) && is_one_mod_p(lambda2, ctx) && is_one_mod_p(lambda3, ctx)) {
      // xi = zeta_{D(-1, sqrt|l1 l2 - 1|)}
      return complete_report(lift, {Rat(-1), Rat(w.value() / 2)}, {Stratum::W1, std::nullopt}, ctx);
    }
    // Some other pair of multipliers has a product != 1 mod p.
    for (std::size_t i : {0u, 1u}) {
      const Rat li = i == 0 ? lambda1 : lambda2;
      if (!is_one_mod_p(Rat(li * lambda3), ctx)) return reordered(i, 2);
    }
    throw UnhandledResidueCase("no repelling multiplier, every pairwise product is 1 mod p, yet the "
                               "multipliers are not all 1 mod p");
  }

  if (v1 < zero && v2 >= zero) {
    // |l1| > 1 >= |l2|: xi = zeta_{D(0, |l1|)}.
    return complete_report(lift, {Rat(0), v1.value()}, stratum_from_indifferent(lambda2, ctx), ctx);
  }
  if (v2 < zero && v1 >= zero) {
    // Conjugating by 1/z swaps the roles of l1 and l2 and inverts the radius.
    return complete_report(lift, {Rat(0), Rat(-v2.value())}, stratum_from_indifferent(lambda1, ctx), ctx);
  }
  if (v1 < zero && v2 < zero) {
    // lambda3 attracts and xi is the branch point zeta_{D(0, |alpha3|)} of the tree spanned by
    // 0, infinity and alpha3 = (l1 - 1)/(l2 - 1).
    const Rat alpha3 = (lambda1 - 1) / (lambda2 - 1);
    return complete_report(lift, {Rat(0), vp(alpha3, ctx).value()}, stratum_from_indifferent(lambda3, ctx), ctx);
  }
  // Only lambda3 repels.
  return reordered(2, 0);
}

CrucialReport predict_xi(const NormalForm& form, const PrimeCtx& ctx) {
  if (const auto* m = std::get_if<MultipleFixedForm>(&form)) return predict_xi_multiple_fixed(m->s, ctx);
  const auto& d = std::get<DistinctFixedForm>(form);
  return predict_xi_distinct_fixed(d.lambda1, d.lambda2, ctx);
}

Minimizer find_crucial_on_segment(const Lift& lift, const Rat& center, const PrimeCtx& ctx) {
  return minimize_profile(ord_res_profile(lift, center, ctx));
}

bool stratum_matches_residue(const ReductionType& stratum, const ResidueClass& residue) {
  switch (stratum.tag) {
    case Stratum::W1: return residue.kind == ResidueKind::Repelling;
    case Stratum::W2:
      return residue.kind == ResidueKind::MultiplicativeIndifferent && residue.x_tilde == stratum.x_tilde;
    case Stratum::W3: return residue.kind == ResidueKind::AdditiveIndifferent;
    case Stratum::W4: return residue.kind == ResidueKind::MovedConstant;
  }
  return false;
}

namespace {

std::string describe(const Lift& lift, const PrimeCtx& ctx, const ConsistencyReport& r) {
  std::ostringstream os;
  os << "lift " << to_string(lift) << " over Q_" << ctx.p() << "\n"
     << "  sigma = (" << r.sigma.sigma1 << ", " << r.sigma.sigma2 << ", " << r.sigma.sigma3 << ")\n"
     << "  stratum from sigma: " << to_string(r.stratum) << "\n"
     << "  xi = (" << r.xi.center << ", " << r.xi.radius_exp << ") via " << r.method << "\n"
     << "  residue class at xi: " << (r.residue_class ? to_string(*r.residue_class) : "unavailable") << "\n"
     << "  ordRes at xi: " << r.min_ord_res << "\n";
  return os.str();
}

}  // namespace

ConsistencyReport verify_consistency(const Lift& lift, const PrimeCtx& ctx, const std::vector<Rat>& centers) {
  ConsistencyReport report;
  report.sigma = sigma_invariants(lift);
  report.stratum = stratum(report.sigma, ctx);
  std::vector<std::string> failures;

  if (const auto form = recognize_normal_form(lift); form && centers.empty()) {
    const CrucialReport predicted = predict_xi(*form, ctx);
    report.method = std::holds_alternative<MultipleFixedForm>(*form) ? "multiple-fixed-point normal form"
                                                                       : "distinct-fixed-points normal form";
    report.xi = predicted.xi;
    report.residue_class = predicted.residue_class;
    report.min_ord_res = predicted.min_ord_res;

    if (!(predicted.stratum == report.stratum)) {
      failures.push_back("predicted stratum " + to_string(predicted.stratum) + " differs from the sigma stratum");
    }
    const Minimizer found = find_crucial_on_segment(lift, predicted.xi.center, ctx);
    report.unique = found.is_point();
    if (!found.is_point() || found.lo != predicted.xi.radius_exp) {
      failures.push_back("profile minimizer [" + found.lo.get_str() + ", " + found.hi.get_str() +
                         "] differs from predicted radius exponent " + predicted.xi.radius_exp.get_str());
    }
    if (found.value != predicted.min_ord_res) failures.push_back("profile minimum differs from ordRes at xi");
    if (predicted.xi.has_integral_radius() && ord_res_at(lift, predicted.xi, ctx) != predicted.min_ord_res) {
      failures.push_back("ordRes at xi differs between the Sylvester and profile evaluations");
    }
  } else {
    if (centers.empty()) {
      throw InputError("lift is not in a recognized normal form; supply centres spanning its fixed-point tree");
    }
    report.method = "segments";
    std::optional<Minimizer> best;
    for (const Rat& c : centers) {
      const Minimizer m = find_crucial_on_segment(lift, c, ctx);
      if (!best || m.value < best->value) {
        best = m;
        report.xi = {c, m.lo};
      }
    }
    report.unique = best->is_point();
    report.min_ord_res = best->value;
    if (report.unique && report.xi.has_integral_radius()) {
      report.residue_class = classify_residue(reduce_at(lift, report.xi, ctx));
    }
  }

  if (report.residue_class && !stratum_matches_residue(report.stratum, *report.residue_class)) {
    failures.push_back("residue class " + to_string(*report.residue_class) + " does not match stratum " +
                       to_string(report.stratum));
  }
  if ((report.min_ord_res == 0) != (report.stratum.tag == Stratum::W1) && report.xi.has_integral_radius()) {
    failures.push_back("ordRes at xi vanishes exactly when the stratum is W1, which fails here");
  }

  if (!failures.empty()) {
    std::string msg = "consistency failure\n" + describe(lift, ctx, report);
    for (const auto& f : failures) msg += "  - " + f + "\n";
    throw ConsistencyFailure(msg);
  }
  return report;
}

}  // namespace quadcrucial
