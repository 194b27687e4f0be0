#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "incgeo/rational.hpp"

namespace incgeo {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline QVec qvec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline QVec qvec_scale(const QVec& a, const Rational& c) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}
inline Rational qvec_dot(const QVec& a, const QVec& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline bool qvec_is_zero(const QVec& a) {
  for (const auto& c : a)
    if (sgn(c) != 0) return false;
  return true;
}
inline QVec qvec_cross(const QVec& a, const QVec& b) {
  if (a.size() != 3 || b.size() != 3) throw std::invalid_argument("cross product needs 3-vectors");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<size_t> rref(QMat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && sgn(m[sel][c]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Rational inv = m[r][c];
    for (size_t j = 0; j < cols; ++j) m[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline size_t rank(QMat m) { return rref(m).size(); }

// Any solution of A x = b, if consistent.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (a.empty()) return QVec{};
  const size_t rows = a.size(), cols = a[0].size();
  QMat aug = a;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  for (size_t i = 0; i < rows; ++i) {
    bool all_zero = true;
    for (size_t j = 0; j < cols; ++j)
      if (sgn(aug[i][j]) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero && sgn(aug[i][cols]) != 0) return std::nullopt;
  }
  QVec x(cols, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < cols) x[pivots[i]] = aug[i][cols];
  }
  return x;
}

// Basis of the nullspace of A (columns = unknowns).
inline std::vector<QVec> nullspace(const QMat& a) {
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  QMat m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (size_t freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    QVec v(cols, Rational(0));
    v[freec] = Rational(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][freec];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace incgeo
