#pragma once

// The unique weighted point xi of a quadratic map (its minimal resultant locus): closed-form
// locations for the two normal forms, exact segment search for arbitrary lifts, and the
// end-to-end verifier tying the moduli stratum to the reduction at xi.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadcrucial/classifier.hpp"
#include "quadcrucial/invariants.hpp"
#include "quadcrucial/profile.hpp"
#include "quadcrucial/quadmap.hpp"
#include "quadcrucial/reduction.hpp"

namespace quadcrucial {

struct CrucialReport {
  TypeIIPoint xi;
  ReductionType stratum;
  /// Reduction type at xi; empty when xi is not realizable over Q (see unavailable_reason).
  std::optional<ResidueClass> residue_class;
  std::string unavailable_reason;
  /// ordRes at xi, read from the exact profile through xi.
  Rat min_ord_res;
};

/// z + s + 1/z, a map with a multiple fixed point at infinity and third multiplier 1 - s^2.
struct MultipleFixedForm {
  Rat s;
};

/// (z^2 + l1 z) / (l2 z + 1), with fixed points 0, infinity, (l1 - 1)/(l2 - 1) and
/// multipliers l1, l2, lambda3_from(l1, l2).
struct DistinctFixedForm {
  Rat lambda1;
  Rat lambda2;
};

using NormalForm = std::variant<MultipleFixedForm, DistinctFixedForm>;

Lift normal_form_lift(const NormalForm& form);

/// Recognizes a lift projectively equal to one of the two normal forms.
std::optional<NormalForm> recognize_normal_form(const Lift& lift);

CrucialReport predict_xi_multiple_fixed(const Rat& s, const PrimeCtx& ctx);

/// Throws DegenerateMultipliers when l1 l2 = 1. Configurations outside the closed forms (only
/// lambda3 repelling, or l1 l2 = 1 mod p without all multipliers = 1 mod p) are conjugated to
/// a normal form built on a different pair of fixed points and xi is mapped back.
CrucialReport predict_xi_distinct_fixed(const Rat& lambda1, const Rat& lambda2, const PrimeCtx& ctx);

CrucialReport predict_xi(const NormalForm& form, const PrimeCtx& ctx);

/// Exact minimizer of ordRes along the line of discs centred at `center`.
Minimizer find_crucial_on_segment(const Lift& lift, const Rat& center, const PrimeCtx& ctx);

struct ConsistencyReport {
  SigmaInvariants sigma;
  ReductionType stratum;
  TypeIIPoint xi;
  std::optional<ResidueClass> residue_class;
  Rat min_ord_res;
  /// Which normal form drove the prediction, or "segments" for caller-supplied centres.
  std::string method;
  /// False when the minimizing set along the chosen segment is an interval.
  bool unique = true;
};

/// Whether the residue class at xi is the one the stratum predicts:
/// W1 Repelling, W2 MultiplicativeIndifferent (same payload), W3 AdditiveIndifferent,
/// W4 MovedConstant.
bool stratum_matches_residue(const ReductionType& stratum, const ResidueClass& residue);

/// Runs every independent path and cross-checks them. Normal-form lifts are recognized
/// automatically; other lifts need `centers` spanning their fixed-point tree. Throws
/// ConsistencyFailure with a full diagnostic when any check fails.
ConsistencyReport verify_consistency(const Lift& lift, const PrimeCtx& ctx, const std::vector<Rat>& centers = {});

}  // namespace quadcrucial
