#include "quadcrucial/padic.hpp"

#include <algorithm>
#include <utility>

#include "quadcrucial/errors.hpp"

namespace quadcrucial {

Rat make_rat(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) { return x.get_str(); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

PrimeCtx::PrimeCtx(std::uint64_t p) : p_(p) {
  if (p < 2 || p > kMaxPrime) throw NotPrime("prime out of supported range: " + std::to_string(p));
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw NotPrime(std::to_string(p) + " is not prime");
  }
}

Rat PrimeCtx::power(long e) const {
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), p_, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rat(pe);
  Rat r(mpz_class(1), pe);
  return r;
}

const Rat& Valuation::value() const {
  if (!finite_) throw InputError("valuation of zero is +infinity");
  return value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(Rat(a.value_ + b.value_));
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Valuation::to_string() const { return finite_ ? value_.get_str() : "+inf"; }

Valuation min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

void ResidueElem::check_same_field(ResidueElem a, ResidueElem b) {
  if (a.p_ != b.p_) throw InputError("residue arithmetic across different primes");
}

ResidueElem operator+(ResidueElem a, ResidueElem b) {
  ResidueElem::check_same_field(a, b);
  return {(a.value_ + b.value_) % a.p_, a.p_, 0};
}

ResidueElem operator-(ResidueElem a, ResidueElem b) {
  ResidueElem::check_same_field(a, b);
  return {(a.value_ + a.p_ - b.value_) % a.p_, a.p_, 0};
}

ResidueElem operator*(ResidueElem a, ResidueElem b) {
  ResidueElem::check_same_field(a, b);
  return {(a.value_ * b.value_) % a.p_, a.p_, 0};
}

ResidueElem operator-(ResidueElem a) { return {(a.p_ - a.value_) % a.p_, a.p_, 0}; }

namespace {

long remove_p(mpz_class& n, const PrimeCtx& ctx) {
  mpz_class p(static_cast<unsigned long>(ctx.p()));
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::uint64_t mod_p(const mpz_class& n, const PrimeCtx& ctx) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(ctx.p()));
  return r.get_ui();
}

}  // namespace

Valuation vp(const Rat& x, const PrimeCtx& ctx) {
  if (x == 0) return Valuation::infinity();
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  return Valuation(remove_p(num, ctx) - remove_p(den, ctx));
}

ResidueElem reduce_residue(const Rat& x, const PrimeCtx& ctx) {
  if (x == 0) return ResidueElem(0, ctx);
  if (vp(x, ctx) < Valuation(0L)) {
    throw NegativeValuation("cannot reduce " + x.get_str() + " modulo " + std::to_string(ctx.p()));
  }
  const ResidueElem num(mod_p(x.get_num(), ctx), ctx);
  const ResidueElem den(mod_p(x.get_den(), ctx), ctx);
  return num * residue_inverse(den);
}

ResidueElem residue_inverse(ResidueElem x) {
  if (x.is_zero()) throw DivisionByZero("zero has no inverse in F_" + std::to_string(x.p_));
  // Extended Euclid on (x, p).
  std::int64_t r0 = static_cast<std::int64_t>(x.p_), r1 = static_cast<std::int64_t>(x.value_);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const auto p = static_cast<std::int64_t>(x.p_);
  return {static_cast<std::uint64_t>(((t0 % p) + p) % p), x.p_, 0};
}

int NewtonPolygon::degree() const {
  int d = 0;
  for (const auto& s : segments) d += s.length;
  return d;
}

std::vector<Rat> NewtonPolygon::root_valuations() const {
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(degree()));
  // Steepest-descending slope gives the largest root valuation; walk backwards for
  // nondecreasing output.
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    for (int k = 0; k < it->length; ++k) out.emplace_back(-it->slope);
  }
  return out;
}

NewtonPolygon newton_slopes(std::span<const Rat> coeffs, const PrimeCtx& ctx) {
  if (coeffs.empty() || coeffs.front() == 0) throw ZeroLeading("leading coefficient is zero");
  if (coeffs.back() == 0) throw ZeroConstant("constant coefficient is zero; strip zero roots first");

  // Points (i, vp(c_i)) with i the power of T; coeffs run from the top degree down.
  const int degree = static_cast<int>(coeffs.size()) - 1;
  struct Point {
    int x;
    Rat y;
  };
  std::vector<Point> points;
  for (int i = 0; i <= degree; ++i) {
    const Rat& c = coeffs[static_cast<std::size_t>(degree - i)];
    if (c != 0) points.push_back({i, vp(c, ctx).value()});
  }

  // Lower hull by monotone chain; points are already sorted by x.
  std::vector<Point> hull;
  for (const auto& pt : points) {
    while (hull.size() >= 2) {
      const Point& a = hull[hull.size() - 2];
      const Point& b = hull.back();
      // Drop b when it lies on or above segment a -> pt.
      const Rat lhs = (b.y - a.y) * (pt.x - a.x);
      const Rat rhs = (pt.y - a.y) * (b.x - a.x);
      if (lhs >= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }

  NewtonPolygon poly;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const int length = hull[k].x - hull[k - 1].x;
    Rat slope = (hull[k].y - hull[k - 1].y) / length;
    poly.segments.push_back({slope, length});
  }
  return poly;
}

}  // namespace quadcrucial
