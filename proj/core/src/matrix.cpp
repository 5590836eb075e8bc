#include "polarlink/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace polarlink {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : RationalMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("matrix must be square");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = Rational(v);
    ++r;
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Rational RationalMatrix::determinant() const {
  RationalMatrix a = *this;
  Rational det(1);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) return Rational(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n_; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) return std::nullopt;
    for (std::size_t c = 0; c < n_; ++c) {
      std::swap(a(pivot, c), a(col, c));
      std::swap(inv(pivot, c), inv(col, c));
    }
    const Rational scale = a(col, col);
    for (std::size_t c = 0; c < n_; ++c) {
      a(col, c) /= scale;
      inv(col, c) /= scale;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < n_; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  RationalMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < n_; ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) s += ",";
      s += (*this)(r, c).str();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace polarlink
