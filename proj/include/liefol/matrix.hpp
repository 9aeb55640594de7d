#ifndef LIEFOL_MATRIX_HPP
#define LIEFOL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace liefol {

/// Pivot selection policy. Elimination is exact, so pivoting only has to be
/// deterministic; for rational functions we prefer low-degree entries to
/// bound coefficient growth.
template <class F>
struct FieldTraits {
  static long pivot_weight(const F&) { return 0; }
};

/// Dense row-major matrix over an exact field F. F must provide +, -, *, /,
/// equality and construction from int.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, F(0)) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix initializer");
      for (const auto& x : row) e_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const std::vector<F>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!(x == F(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& a = (*this)(i, k);
        if (a == F(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
      }
    return r;
  }
  Matrix scaled(const F& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
  }

  /// Stacks other below this matrix.
  Matrix vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw InputError("vstack column mismatch");
    Matrix r(rows_ + o.rows_, cols_);
    r.e_ = e_;
    r.e_.insert(r.e_.end(), o.e_.begin(), o.e_.end());
    return r;
  }

  std::vector<F> mul_vec(const std::vector<F>& v) const {
    if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
    std::vector<F> r(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == F(0))) r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> e_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

template <class F>
bool is_zero_vec(const std::vector<F>& v) {
  for (const auto& x : v)
    if (!(x == F(0))) return false;
  return true;
}

template <class F>
struct RrefResult {
  Matrix<F> rref;
  std::vector<std::size_t> pivot_cols;
  /// Pivot entries in elimination order, before normalization; exposed so
  /// specialization arguments can avoid their zeros.
  std::vector<F> pivot_values;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. The RREF of a
/// matrix is unique, so downstream canonical forms do not depend on the pivot
/// policy.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> out;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t best = nr;
    long best_w = 0;
    for (std::size_t i = r; i < nr; ++i) {
      if (m(i, c) == F(0)) continue;
      long w = FieldTraits<F>::pivot_weight(m(i, c));
      if (best == nr || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best == nr) continue;
    if (best != r)
      for (std::size_t j = 0; j < nc; ++j) std::swap(m(r, j), m(best, j));
    out.pivot_values.push_back(m(r, c));
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < nc; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m(i, c) == F(0)) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < nc; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivot_cols.size();
}

/// Basis of the right null space {v : m v = 0}, canonical: vector k carries a
/// 1 at the k-th free column, the pivot coordinates read off the RREF, and
/// zeros at the other free columns.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  const auto red = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> out;
  for (std::size_t c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(nc, F(0));
    v[c] = F(1);
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
      v[red.pivot_cols[r]] = F(0) - red.rref(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  F det = F(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!(m(i, c) == F(0))) {
        piv = i;
        break;
      }
    if (piv == n) return F(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = F(0) - det;
    }
    det = det * m(c, c);
    const F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == F(0)) continue;
      const F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

/// Row-span helper: reduces vectors against the RREF of a fixed generating
/// set while tracking the transform back to the original rows. Used for
/// structure constants, closure checks and quotient projections.
template <class F>
class RowSpan {
 public:
  explicit RowSpan(const Matrix<F>& generators) : gens_(generators) {
    // Augment with the identity so the RREF rows stay expressed in terms of
    // the original generators: rref([A | I]) = [R | T] with R = T A.
    Matrix<F> aug(gens_.rows(), gens_.cols() + gens_.rows());
    for (std::size_t i = 0; i < gens_.rows(); ++i) {
      for (std::size_t j = 0; j < gens_.cols(); ++j) aug(i, j) = gens_(i, j);
      aug(i, gens_.cols() + i) = F(1);
    }
    // Eliminate on the generator columns only.
    std::size_t r = 0;
    for (std::size_t c = 0; c < gens_.cols() && r < aug.rows(); ++c) {
      std::size_t best = aug.rows();
      long best_w = 0;
      for (std::size_t i = r; i < aug.rows(); ++i) {
        if (aug(i, c) == F(0)) continue;
        long w = FieldTraits<F>::pivot_weight(aug(i, c));
        if (best == aug.rows() || w < best_w) {
          best = i;
          best_w = w;
        }
      }
      if (best == aug.rows()) continue;
      if (best != r)
        for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(r, j), aug(best, j));
      const F inv = F(1) / aug(r, c);
      for (std::size_t j = 0; j < aug.cols(); ++j) aug(r, j) = aug(r, j) * inv;
      for (std::size_t i = 0; i < aug.rows(); ++i) {
        if (i == r || aug(i, c) == F(0)) continue;
        const F f = aug(i, c);
        for (std::size_t j = 0; j < aug.cols(); ++j) aug(i, j) = aug(i, j) - f * aug(r, j);
      }
      pivot_cols_.push_back(c);
      ++r;
    }
    rref_ = Matrix<F>(r, gens_.cols());
    transform_ = Matrix<F>(r, gens_.rows());
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < gens_.cols(); ++j) rref_(i, j) = aug(i, j);
      for (std::size_t j = 0; j < gens_.rows(); ++j) transform_(i, j) = aug(i, gens_.cols() + j);
    }
  }

  std::size_t rank() const { return pivot_cols_.size(); }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
  const Matrix<F>& rref_rows() const { return rref_; }

  struct Reduction {
    bool in_span = false;
    std::vector<F> coords;    // coefficients on the ORIGINAL generators
    std::vector<F> residual;  // v minus its span part; zero iff in_span
  };

  Reduction reduce(std::vector<F> v) const {
    if (v.size() != gens_.cols()) throw InputError("RowSpan::reduce length mismatch");
    std::vector<F> rref_coeff(rank(), F(0));
    for (std::size_t r = 0; r < rank(); ++r) {
      const F c = v[pivot_cols_[r]];
      if (c == F(0)) continue;
      rref_coeff[r] = c;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * rref_(r, j);
    }
    Reduction out;
    out.residual = std::move(v);
    out.in_span = is_zero_vec(out.residual);
    out.coords.assign(gens_.rows(), F(0));
    for (std::size_t r = 0; r < rank(); ++r)
      for (std::size_t j = 0; j < gens_.rows(); ++j)
        out.coords[j] = out.coords[j] + rref_coeff[r] * transform_(r, j);
    return out;
  }

 private:
  Matrix<F> gens_;
  Matrix<F> rref_;
  Matrix<F> transform_;
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace liefol

#endif
