#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hsoc/gf.hpp"

namespace hsoc {

// Dense row-major matrix over the tower field.  A matrix whose entries all
// lie in F_q stays in F_q under elimination, so the same routines serve both
// levels of the tower.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr F, std::size_t rows, std::size_t cols)
      : F_(std::move(F)), r_(rows), c_(cols), a_(rows * cols, 0) {}

  static Matrix from_rows(FieldPtr F, const std::vector<std::vector<Fel>>& rows) {
    std::size_t n = rows.empty() ? 0 : rows[0].size();
    Matrix m(std::move(F), rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n) throw error("ragged row lengths");
      std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + i * n);
    }
    return m;
  }

  const FieldPtr& field() const { return F_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  Fel at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Fel& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  std::span<const Fel> row(std::size_t i) const { return {a_.data() + i * c_, c_}; }
  std::span<Fel> row(std::size_t i) { return {a_.data() + i * c_, c_}; }

  std::vector<Fel> col(std::size_t j) const {
    std::vector<Fel> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
  }

  bool operator==(const Matrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }

 private:
  FieldPtr F_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Fel> a_;
};

namespace detail {
inline void require_same_field(const Matrix& a, const Matrix& b) {
  if (!a.field() || !b.field() || !a.field()->same_rep(*b.field()))
    throw error("operands belong to different fields");
}
}  // namespace detail

struct Rref {
  Matrix mat;
  std::vector<std::size_t> pivots;
};

inline Rref rref(const Matrix& A) {
  Rref out{A, {}};
  Matrix& R = out.mat;
  if (R.rows() == 0 || R.cols() == 0) return out;
  const Field& F = *R.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
    std::size_t s = r;
    while (s < R.rows() && R.at(s, c) == 0) ++s;
    if (s == R.rows()) continue;
    if (s != r)
      for (std::size_t j = 0; j < R.cols(); ++j) std::swap(R.at(s, j), R.at(r, j));
    Fel iv = F.inv(R.at(r, c));
    if (iv != 1)
      for (std::size_t j = c; j < R.cols(); ++j) R.at(r, j) = F.mul(R.at(r, j), iv);
    for (std::size_t i = 0; i < R.rows(); ++i) {
      if (i == r) continue;
      Fel f = R.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < R.cols(); ++j)
        R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

inline std::size_t rank(const Matrix& A) { return rref(A).pivots.size(); }

inline Matrix transpose(const Matrix& A) {
  Matrix T(A.field(), A.cols(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) T.at(j, i) = A.at(i, j);
  return T;
}

// Basis of {x : A x = 0} as the rows of a matrix, brought to reduced echelon
// form so kernels compare exactly across machines and generators.
inline Matrix right_kernel(const Matrix& A) {
  auto [R, piv] = rref(A);
  const Field& F = *A.field();
  const std::size_t n = A.cols(), rk = piv.size();
  std::vector<char> is_piv(n, 0);
  for (auto c : piv) is_piv[c] = 1;
  Matrix K(A.field(), n - rk, n);
  std::size_t out = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    K.at(out, f) = 1;
    for (std::size_t t = 0; t < rk; ++t) K.at(out, piv[t]) = F.neg(R.at(t, f));
    ++out;
  }
  return rref(K).mat;
}

inline Matrix left_kernel(const Matrix& A) { return right_kernel(transpose(A)); }

inline Matrix mat_mul(const Matrix& A, const Matrix& B) {
  detail::require_same_field(A, B);
  if (A.cols() != B.rows()) throw error("dimension mismatch in matrix product");
  const Field& F = *A.field();
  Matrix C(A.field(), A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t t = 0; t < A.cols(); ++t) {
      Fel a = A.at(i, t);
      if (a == 0) continue;
      for (std::size_t j = 0; j < B.cols(); ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(a, B.at(t, j)));
    }
  return C;
}

inline Matrix vstack(const Matrix& A, const Matrix& B) {
  detail::require_same_field(A, B);
  if (A.cols() != B.cols()) throw error("dimension mismatch in vstack");
  Matrix C(A.field(), A.rows() + B.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = A.at(i, j);
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) C.at(A.rows() + i, j) = B.at(i, j);
  return C;
}

// Membership tester for the row space of a fixed matrix; precomputes the
// echelon form once so repeated queries are cheap.
class SpanChecker {
 public:
  explicit SpanChecker(const Matrix& rows) : red_(rref(rows)) {}

  bool contains(std::span<const Fel> v) const {
    const Matrix& R = red_.mat;
    if (v.size() != R.cols()) throw error("vector length mismatch in span test");
    const Field& F = *R.field();
    std::vector<Fel> w(v.begin(), v.end());
    for (std::size_t t = 0; t < red_.pivots.size(); ++t) {
      Fel f = w[red_.pivots[t]];
      if (f == 0) continue;
      for (std::size_t j = red_.pivots[t]; j < w.size(); ++j)
        w[j] = F.sub(w[j], F.mul(f, R.at(t, j)));
    }
    for (Fel x : w)
      if (x != 0) return false;
    return true;
  }

  const Rref& reduced() const { return red_; }

 private:
  Rref red_;
};

inline bool in_span(const Matrix& rows, std::span<const Fel> v) {
  return SpanChecker(rows).contains(v);
}

inline bool same_row_space(const Matrix& A, const Matrix& B) {
  detail::require_same_field(A, B);
  if (A.cols() != B.cols()) return false;
  std::size_t ra = rank(A), rb = rank(B);
  return ra == rb && rank(vstack(A, B)) == ra;
}

}  // namespace hsoc
