#pragma once

// Brute-force oracles and random generators shared by the test binaries. Nothing here calls
// the library's own algorithms for the quantity being checked.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "quadcrucial/padic.hpp"
#include "quadcrucial/quadmap.hpp"

namespace qc_test {

using quadcrucial::Rat;

// ---- valuations and residues ------------------------------------------------

/// Valuation by repeated division; nullopt for zero.
inline std::optional<long> naive_vp(const Rat& x, std::uint64_t p) {
  if (x == 0) return std::nullopt;
  mpz_class n = abs(x.get_num()), d = x.get_den();
  long v = 0;
  while (n % p == 0) n /= p, ++v;
  while (d % p == 0) d /= p, --v;
  return v;
}

/// x^{-1} mod p by exhaustive search.
inline std::uint64_t brute_inverse(std::uint64_t x, std::uint64_t p) {
  for (std::uint64_t y = 1; y < p; ++y) {
    if ((x * y) % p == 1) return y;
  }
  return 0;
}

/// Residue of a p-integral rational: numerator times the searched inverse of the denominator.
inline std::uint64_t naive_residue(const Rat& x, std::uint64_t p) {
  mpz_class n = x.get_num() % static_cast<unsigned long>(p);
  if (n < 0) n += p;
  mpz_class d = x.get_den() % static_cast<unsigned long>(p);
  return (n.get_ui() * brute_inverse(d.get_ui(), p)) % p;
}

// ---- determinants and resultants -------------------------------------------

/// Leibniz expansion over all permutations.
inline Rat leibniz_det(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Rat term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Res(a0 X^2 + a1 XY + a2 Y^2, b0 X^2 + b1 XY + b2 Y^2) in closed form.
inline Rat closed_form_resultant(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
  const Rat u = a[0] * b[2] - a[2] * b[0];
  const Rat v = a[0] * b[1] - a[1] * b[0];
  const Rat w = a[1] * b[2] - a[2] * b[1];
  return u * u - v * w;
}

// ---- polynomials ------------------------------------------------------------

/// prod (T - r_i), leading coefficient first.
inline std::vector<Rat> expand_roots(const std::vector<Rat>& roots) {
  std::vector<Rat> c{Rat(1)};
  for (const Rat& r : roots) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

/// phi'(alpha) for a finite fixed point alpha with G(alpha, 1) != 0, by the quotient rule.
inline Rat multiplier_at(const quadcrucial::Lift& l, const Rat& z) {
  const auto& f = l.f();
  const auto& g = l.g();
  const Rat fz = f[0] * z * z + f[1] * z + f[2];
  const Rat gz = g[0] * z * z + g[1] * z + g[2];
  const Rat df = 2 * f[0] * z + f[1];
  const Rat dg = 2 * g[0] * z + g[1];
  return (df * gz - fz * dg) / (gz * gz);
}

/// Multiplier at infinity when it is fixed (b0 = 0, a0 != 0): 1/phi(1/w) has derivative
/// b1 / a0 at w = 0.
inline Rat multiplier_at_infinity(const quadcrucial::Lift& l) { return l.g()[1] / l.f()[0]; }

// ---- random inputs ------------------------------------------------------------

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// +-(a/b) with 1 <= a, b <= bound.
  Rat small_rat(long bound = 30) {
    Rat r(integer(1, bound), integer(1, bound));
    r.canonicalize();
    return coin() ? Rat(-r) : r;
  }

  /// small_rat scaled by p^k, k in [-kmax, kmax]. Zero with probability 1/zero_odds.
  Rat padic_rat(const quadcrucial::PrimeCtx& ctx, long kmax = 3, long zero_odds = 0) {
    if (zero_odds > 0 && integer(1, zero_odds) == 1) return Rat(0);
    return Rat(small_rat() * ctx.power(integer(-kmax, kmax)));
  }

  /// A rational with valuation exactly v.
  Rat with_valuation(const quadcrucial::PrimeCtx& ctx, long v) {
    const long p = static_cast<long>(ctx.p());
    long a = 0, b = 0;
    do a = integer(1, 40); while (a % p == 0);
    do b = integer(1, 40); while (b % p == 0);
    Rat r(a, b);
    r.canonicalize();
    if (coin()) r = -r;
    return Rat(r * ctx.power(v));
  }

  /// A p-integral rational reducing to `residue` (mod p); zero is possible when residue is 0.
  Rat with_residue(const quadcrucial::PrimeCtx& ctx, long residue) {
    const long p = static_cast<long>(ctx.p());
    long b = 0;
    do b = integer(1, 25); while (b % p == 0);
    // a/b = residue mod p  <=>  a = residue * b mod p
    const long a = residue * b % p + p * integer(-6, 6);
    Rat r(a, b);
    r.canonicalize();
    return r;
  }

  quadcrucial::Lift lift(const quadcrucial::PrimeCtx& ctx) {
    for (;;) {
      std::array<Rat, 3> f, g;
      for (auto& c : f) c = padic_rat(ctx, 2, 4);
      for (auto& c : g) c = padic_rat(ctx, 2, 4);
      if (closed_form_resultant(f, g) != 0) return quadcrucial::Lift(f, g);
    }
  }

  quadcrucial::Mobius mobius(const quadcrucial::PrimeCtx& ctx) {
    for (;;) {
      Rat a = padic_rat(ctx, 2, 4), b = padic_rat(ctx, 2, 4), c = padic_rat(ctx, 2, 4), d = padic_rat(ctx, 2, 4);
      if (a * d - b * c != 0) return quadcrucial::Mobius(a, b, c, d);
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline const std::array<std::uint64_t, 5> kPrimes{2, 3, 5, 7, 13};

}  // namespace qc_test
