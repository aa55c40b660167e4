#include "quadcrucial/profile.hpp"

#include <algorithm>
#include <utility>

#include "quadcrucial/errors.hpp"

namespace quadcrucial {

PLFunction::PLFunction(std::vector<Rat> breakpoints, std::vector<AffinePiece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.size() != breakpoints_.size() + 1) throw InputError("PL function needs one more piece than breakpoints");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (i > 0 && !(breakpoints_[i - 1] < breakpoints_[i])) throw InputError("breakpoints must increase strictly");
    if (pieces_[i](breakpoints_[i]) != pieces_[i + 1](breakpoints_[i])) {
      throw InputError("PL function is discontinuous at " + breakpoints_[i].get_str());
    }
  }
}

Rat PLFunction::operator()(const Rat& m) const {
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), m);
  return pieces_[static_cast<std::size_t>(it - breakpoints_.begin())](m);
}

bool PLFunction::is_convex() const {
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].slope < pieces_[i - 1].slope) return false;
  }
  return true;
}

namespace {

// Pointwise minimum of finitely many affine functions, as a PL function.
PLFunction lower_envelope(const std::vector<AffinePiece>& lines) {
  std::vector<Rat> crossings;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope == lines[j].slope) continue;
      crossings.emplace_back((lines[j].intercept - lines[i].intercept) / (lines[i].slope - lines[j].slope));
    }
  }
  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());

  // One sample strictly inside each open interval cut out by the crossings.
  std::vector<Rat> samples;
  if (crossings.empty()) {
    samples.emplace_back(0);
  } else {
    samples.emplace_back(crossings.front() - 1);
    for (std::size_t k = 1; k < crossings.size(); ++k) samples.emplace_back((crossings[k - 1] + crossings[k]) / 2);
    samples.emplace_back(crossings.back() + 1);
  }

  auto active = [&](const Rat& m) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i](m) < lines[best](m)) best = i;
    }
    return lines[best];
  };

  std::vector<Rat> breakpoints;
  std::vector<AffinePiece> pieces{active(samples.front())};
  for (std::size_t k = 1; k < samples.size(); ++k) {
    AffinePiece next = active(samples[k]);
    if (next == pieces.back()) continue;
    breakpoints.push_back(crossings[k - 1]);
    pieces.push_back(std::move(next));
  }
  return PLFunction(std::move(breakpoints), std::move(pieces));
}

}  // namespace

PLFunction ord_res_profile(const Lift& lift, const Rat& center, const PrimeCtx& ctx) {
  // With gamma_m(z) = center + p^m z and L_t = L conjugated by the translation, the
  // conjugate by gamma_m has coefficients p^{(2-i)m} F_t[i] and p^{(3-i)m} G_t[i], and
  // Res picks up p^{6m}. So ordRes(m) = ord Res(L_t) + 6m - 4 min_k (alpha_k m + beta_k).
  const Lift translated = conjugate(lift, Mobius::affine(center, Rat(1)));
  const Rat res_val = vp(resultant(translated), ctx).value();

  std::vector<AffinePiece> lines;
  for (std::size_t i = 0; i < 3; ++i) {
    const Valuation vf = vp(translated.f()[i], ctx);
    if (vf.is_finite()) lines.push_back({Rat(static_cast<long>(2 - i)), vf.value()});
    const Valuation vg = vp(translated.g()[i], ctx);
    if (vg.is_finite()) lines.push_back({Rat(static_cast<long>(3 - i)), vg.value()});
  }
  if (lines.empty()) throw DegenerateMap("zero lift has no ordRes profile");

  const PLFunction envelope = lower_envelope(lines);
  std::vector<AffinePiece> pieces;
  pieces.reserve(envelope.pieces().size());
  for (const auto& piece : envelope.pieces()) {
    pieces.push_back({Rat(6 - 4 * piece.slope), Rat(res_val - 4 * piece.intercept)});
  }
  return PLFunction(envelope.breakpoints(), std::move(pieces));
}

Minimizer minimize_profile(const PLFunction& f) {
  if (!f.is_convex()) throw InputError("minimize_profile needs a convex function");
  const auto& pieces = f.pieces();
  const auto& bps = f.breakpoints();
  // A flat end piece also leaves the minimizing set unbounded.
  if (pieces.front().slope >= 0) throw Unbounded("profile does not increase towards m -> -infinity");
  if (pieces.back().slope <= 0) throw Unbounded("profile does not increase towards m -> +infinity");
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].slope == 0) {
      // Flat piece between bps[i-1] and bps[i]; it is strictly inside since the ends slope.
      return {bps[i - 1], bps[i], pieces[i](bps[i - 1])};
    }
    if (pieces[i - 1].slope < 0 && pieces[i].slope > 0) {
      return {bps[i - 1], bps[i - 1], pieces[i](bps[i - 1])};
    }
  }
  throw InternalConsistency("convex profile with sign change but no minimizer");
}

}  // namespace quadcrucial
