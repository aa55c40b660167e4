#pragma once

// Small exact-algebra helpers over Q: dense univariate polynomials and determinants.

#include <span>
#include <vector>

#include "quadcrucial/padic.hpp"

namespace quadcrucial {

/// Dense univariate polynomial over Q, coefficients in ascending powers. The zero
/// polynomial has no coefficients; otherwise the top coefficient is nonzero.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> ascending);
  static QPoly constant(const Rat& c);
  /// The monomial c * z^k.
  static QPoly monomial(const Rat& c, int k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of z^k; zero outside the stored range.
  Rat coeff(int k) const;
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  Rat leading() const;
  Rat operator()(const Rat& z) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rat& c, const QPoly& a);
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

/// Determinant of a square matrix by fraction-exact Gaussian elimination.
Rat determinant(std::vector<std::vector<Rat>> m);

/// The unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
QPoly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

}  // namespace quadcrucial
