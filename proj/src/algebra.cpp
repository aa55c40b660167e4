#include "quadcrucial/algebra.hpp"

#include <algorithm>
#include <utility>

#include "quadcrucial/errors.hpp"

namespace quadcrucial {

QPoly::QPoly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) { trim(); }

QPoly QPoly::constant(const Rat& c) { return QPoly(std::vector<Rat>{c}); }

QPoly QPoly::monomial(const Rat& c, int k) {
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat QPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat QPoly::leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

Rat QPoly::operator()(const Rat& z) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a) {
  std::vector<Rat> out(a.coeffs_);
  for (auto& c : out) c = -c;
  return QPoly(std::move(out));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly operator*(const Rat& c, const QPoly& a) { return QPoly::constant(c) * a; }

Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InputError("determinant of a non-square matrix");
  }
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rat factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

QPoly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  if (xs.size() != ys.size()) throw InputError("interpolation needs as many values as nodes");
  QPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly basis = QPoly::constant(Rat(1));
    Rat scale(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * QPoly(std::vector<Rat>{Rat(-xs[j]), Rat(1)});
      scale *= xs[i] - xs[j];
    }
    if (scale == 0) throw InputError("interpolation nodes must be distinct");
    result = result + Rat(ys[i] / scale) * basis;
  }
  return result;
}

}  // namespace quadcrucial
