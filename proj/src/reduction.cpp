#include "quadcrucial/reduction.hpp"

#include <algorithm>
#include <utility>

#include "quadcrucial/errors.hpp"

namespace quadcrucial {

std::string to_string(ResidueKind k) {
  switch (k) {
    case ResidueKind::Repelling: return "Repelling";
    case ResidueKind::MultiplicativeIndifferent: return "MultiplicativeIndifferent";
    case ResidueKind::AdditiveIndifferent: return "AdditiveIndifferent";
    case ResidueKind::IdIndifferent: return "IdIndifferent";
    case ResidueKind::MovedConstant: return "MovedConstant";
  }
  return "?";
}

std::string to_string(const ResidueClass& c) {
  std::string out = to_string(c.kind);
  if (c.x_tilde) out += "(" + std::to_string(c.x_tilde->value()) + ")";
  return out;
}

namespace {

using Coeffs = std::vector<ResidueElem>;

// Univariate polynomials over F_p, ascending powers, no trailing zeros.
void trim(Coeffs& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Coeffs make_monic(Coeffs a) {
  if (a.empty()) return a;
  const ResidueElem inv = residue_inverse(a.back());
  for (auto& c : a) c = c * inv;
  return a;
}

Coeffs remainder(Coeffs a, const Coeffs& b) {
  const ResidueElem inv = residue_inverse(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    const ResidueElem q = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - q * b[i];
    trim(a);
  }
  return a;
}

Coeffs univariate_gcd(Coeffs a, Coeffs b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

// Binary forms store c[i] as the coefficient of X^{d-i} Y^i, so products are convolutions.
std::size_t y_power(const Coeffs& form) {
  std::size_t k = 0;
  while (k < form.size() && form[k].is_zero()) ++k;
  return k;
}

// F(z, 1) after removing the Y-power, ascending in z.
Coeffs dehomogenize(const Coeffs& form) {
  const std::size_t k = y_power(form);
  Coeffs out(form.begin() + static_cast<std::ptrdiff_t>(k), form.end());
  std::reverse(out.begin(), out.end());
  trim(out);
  return out;
}

Coeffs form_gcd(const Coeffs& f, const Coeffs& g) {
  const std::size_t kf = y_power(f);
  const std::size_t kg = y_power(g);
  const std::size_t k = std::min(kf, kg);  // a zero form contributes size(), never the minimum
  const Coeffs h = univariate_gcd(dehomogenize(f), dehomogenize(g));
  const ResidueElem zero = f.front() - f.front();
  Coeffs out(k, zero);
  out.insert(out.end(), h.rbegin(), h.rend());
  return out;
}

// Exact quotient of forms; `divisor` must divide `dividend` and have a nonzero coefficient.
Coeffs form_divide(const Coeffs& dividend, const Coeffs& divisor) {
  const std::size_t shift = y_power(divisor);
  const Coeffs num(dividend.begin() + static_cast<std::ptrdiff_t>(shift), dividend.end());
  const Coeffs den(divisor.begin() + static_cast<std::ptrdiff_t>(shift), divisor.end());
  const std::size_t qlen = num.size() - den.size() + 1;
  const ResidueElem inv = residue_inverse(den.front());
  Coeffs q;
  q.reserve(qlen);
  for (std::size_t k = 0; k < qlen; ++k) {
    ResidueElem acc = num[k];
    for (std::size_t i = 1; i < den.size() && i <= k; ++i) acc = acc - den[i] * q[k - i];
    q.push_back(acc * inv);
  }
  return q;
}

}  // namespace

ResidueMap make_residue_map(std::vector<ResidueElem> f, std::vector<ResidueElem> g) {
  if (f.size() != g.size() || f.empty()) throw InputError("residue forms must share a formal degree");
  const bool f_zero = y_power(f) == f.size();
  const bool g_zero = y_power(g) == g.size();
  if (f_zero && g_zero) throw InputError("both residue forms vanish");

  const Coeffs h = form_gcd(f, g);
  Coeffs fr = form_divide(f, h);
  Coeffs gr = form_divide(g, h);

  const ResidueElem lead = y_power(fr) < fr.size() ? fr[y_power(fr)] : gr[y_power(gr)];
  const ResidueElem inv = residue_inverse(lead);
  for (auto& c : fr) c = c * inv;
  for (auto& c : gr) c = c * inv;
  const int degree = static_cast<int>(fr.size()) - 1;
  return {std::move(fr), std::move(gr), degree};
}

ResidueMap reduce_at(const Lift& lift, const TypeIIPoint& point, const PrimeCtx& ctx) {
  const Lift moved = normalize(conjugate(lift, point.chart(ctx)), ctx).lift;
  std::vector<ResidueElem> f, g;
  for (std::size_t i = 0; i < 3; ++i) {
    f.push_back(reduce_residue(moved.f()[i], ctx));
    g.push_back(reduce_residue(moved.g()[i], ctx));
  }
  return make_residue_map(std::move(f), std::move(g));
}

ResidueClass classify_residue(const ResidueMap& r) {
  if (r.degree == 2) return {ResidueKind::Repelling, std::nullopt};
  if (r.degree == 0) return {ResidueKind::MovedConstant, std::nullopt};
  if (r.degree != 1) throw InputError("residue map of degree above 2");

  // z -> (a z + b) / (c z + d)
  const ResidueElem a = r.f[0], b = r.f[1], c = r.g[0], d = r.g[1];
  if (b.is_zero() && c.is_zero() && a == d) return {ResidueKind::IdIndifferent, std::nullopt};
  const ResidueElem tr = a + d;
  const ResidueElem det = a * d - b * c;
  const ResidueElem four = det + det + det + det;
  if (tr * tr == four) return {ResidueKind::AdditiveIndifferent, std::nullopt};
  const ResidueElem one = residue_inverse(det) * det;
  return {ResidueKind::MultiplicativeIndifferent, tr * tr * residue_inverse(det) - (one + one)};
}

}  // namespace quadcrucial
