#ifndef LIEFOL_LIE_ALGEBRA_HPP
#define LIEFOL_LIE_ALGEBRA_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace liefol {

struct BracketTerm {
  std::size_t k;
  Rational c;
};

/// Finite-dimensional Lie algebra over Q by structure constants:
/// [e_i, e_j] = sum_k c_ij^k e_k, stored sparsely per (i, j).
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> names = {})
      : dim_(dim), names_(std::move(names)), table_(dim, std::vector<std::vector<BracketTerm>>(dim)) {
    if (names_.empty())
      for (std::size_t i = 0; i < dim_; ++i) names_.push_back("e" + std::to_string(i));
    if (names_.size() != dim_) throw InputError("name count does not match dimension");
  }

  static LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

  /// sl_2 with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  static LieAlgebra sl2() {
    LieAlgebra L(3, {"h", "e", "f"});
    L.set_bracket_pair(0, 1, {{1, Rational(2)}});
    L.set_bracket_pair(0, 2, {{2, Rational(-2)}});
    L.set_bracket_pair(1, 2, {{0, Rational(1)}});
    return L;
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }

  /// Sets exactly the (i, j) slot; callers wanting antisymmetry by
  /// construction use set_bracket_pair.
  void set_bracket(std::size_t i, std::size_t j, std::vector<BracketTerm> terms) {
    table_[i][j] = std::move(terms);
  }
  void set_bracket_pair(std::size_t i, std::size_t j, const std::vector<BracketTerm>& terms) {
    table_[i][j] = terms;
    auto neg = terms;
    for (auto& t : neg) t.c = -t.c;
    table_[j][i] = std::move(neg);
  }

  const std::vector<BracketTerm>& bracket_basis(std::size_t i, std::size_t j) const {
    return table_[i][j];
  }

  QVector bracket(const QVector& u, const QVector& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw InputError("bracket operand length mismatch");
    QVector out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j] == 0) continue;
        const Rational f = u[i] * v[j];
        for (const auto& t : table_[i][j]) out[t.k] += f * t.c;
      }
    }
    return out;
  }

  QMatrix ad(std::size_t i) const {
    QMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : table_[i][j]) m(t.k, j) = t.c;
    return m;
  }
  QMatrix ad(const QVector& v) const {
    QMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& t : table_[i][j]) m(t.k, j) += v[i] * t.c;
    }
    return m;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<std::vector<BracketTerm>>> table_;
};

// -------------------------------------------------------------- validation

struct ValidationIssue {
  enum Kind { Antisymmetry, Jacobi } kind;
  std::size_t i, j, k;  // k unused for antisymmetry
  QVector residual;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Confirms antisymmetry and the Jacobi identity on all basis triples;
/// violations are report content, not exceptions.
inline ValidationReport validate(const LieAlgebra& L) {
  ValidationReport rep;
  const std::size_t n = L.dim();
  auto expand = [&](std::size_t i, std::size_t j) {
    QVector v(n, Rational(0));
    for (const auto& t : L.bracket_basis(i, j)) v[t.k] += t.c;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      QVector sum = expand(i, j);
      if (i != j) {  // c_ij^k + c_ji^k = 0; on the diagonal [x, x] = 0
        const QVector ji = expand(j, i);
        for (std::size_t k = 0; k < n; ++k) sum[k] += ji[k];
      }
      if (!is_zero_vec(sum))
        rep.issues.push_back({ValidationIssue::Antisymmetry, i, j, 0, std::move(sum)});
    }
  QVector ei(n, Rational(0)), ej(n, Rational(0)), ek(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::fill(ei.begin(), ei.end(), Rational(0));
        std::fill(ej.begin(), ej.end(), Rational(0));
        std::fill(ek.begin(), ek.end(), Rational(0));
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        QVector acc = L.bracket(ei, L.bracket(ej, ek));
        const QVector t2 = L.bracket(ej, L.bracket(ek, ei));
        const QVector t3 = L.bracket(ek, L.bracket(ei, ej));
        for (std::size_t l = 0; l < n; ++l) acc[l] += t2[l] + t3[l];
        if (!is_zero_vec(acc))
          rep.issues.push_back({ValidationIssue::Jacobi, i, j, k, std::move(acc)});
      }
  return rep;
}

// ------------------------------------------------------------- subalgebras

/// Subalgebra of `parent` spanned by the rows of `basis` (coordinates in the
/// parent basis). The parent is held by value; everything is immutable.
struct Subalgebra {
  LieAlgebra parent;
  QMatrix basis;

  std::size_t dim() const { return basis.rows(); }
};

struct ClosureWitness {
  std::size_t i, j;
  QVector residual;
};

struct ClosureResult {
  bool closed = false;
  std::optional<ClosureWitness> witness;
  /// Structure constants of the subalgebra in its own basis; meaningful only
  /// when closed.
  LieAlgebra induced;
};

inline ClosureResult subalgebra_closure_check(const Subalgebra& g) {
  const std::size_t d = g.basis.rows();
  if (rank(g.basis) != d) throw MathError("subalgebra basis rows are dependent");
  const RowSpan<Rational> span(g.basis);
  ClosureResult out;
  out.induced = LieAlgebra(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const QVector br = g.parent.bracket(g.basis.row(i), g.basis.row(j));
      auto red = span.reduce(br);
      if (!red.in_span) {
        out.closed = false;
        out.witness = ClosureWitness{i, j, std::move(red.residual)};
        return out;
      }
      std::vector<BracketTerm> terms;
      for (std::size_t k = 0; k < d; ++k)
        if (red.coords[k] != 0) terms.push_back({k, red.coords[k]});
      out.induced.set_bracket(i, j, std::move(terms));
    }
  out.closed = true;
  return out;
}

// ----------------------------------------------------------------- modules

/// g-module by action matrices, one per basis element of the acting algebra.
struct GModule {
  LieAlgebra acting;
  std::size_t dim = 0;
  std::vector<QMatrix> action;
};

inline bool representation_law_holds(const GModule& M) {
  const std::size_t d = M.acting.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      QMatrix lhs(M.dim, M.dim);
      for (const auto& t : M.acting.bracket_basis(i, j))
        lhs = lhs + M.action[t.k].scaled(t.c);
      const QMatrix rhs = M.action[i] * M.action[j] - M.action[j] * M.action[i];
      if (lhs != rhs) return false;
    }
  return true;
}

/// Trivial module of a given dimension (every action matrix zero).
inline GModule trivial_module(const LieAlgebra& g, std::size_t dim) {
  return GModule{g, dim, std::vector<QMatrix>(g.dim(), QMatrix(dim, dim))};
}

/// The g-module L/g in the canonical complement basis: the parent's standard
/// basis vectors at the non-pivot columns of g's row echelon form.
inline GModule quotient_module(const Subalgebra& g) {
  auto closure = subalgebra_closure_check(g);
  if (!closure.closed) throw MathError("quotient_module: subalgebra is not bracket-closed");
  const std::size_t n = g.parent.dim();
  const RowSpan<Rational> span(g.basis);
  std::vector<bool> is_pivot(n, false);
  for (auto c : span.pivot_cols()) is_pivot[c] = true;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  GModule M;
  M.acting = closure.induced;
  M.dim = comp.size();
  for (std::size_t i = 0; i < g.basis.rows(); ++i) {
    QMatrix a(M.dim, M.dim);
    for (std::size_t j = 0; j < comp.size(); ++j) {
      QVector e(n, Rational(0));
      e[comp[j]] = 1;
      const auto red = span.reduce(g.parent.bracket(g.basis.row(i), e));
      for (std::size_t l = 0; l < comp.size(); ++l) a(l, j) = red.residual[comp[l]];
    }
    M.action.push_back(std::move(a));
  }
  if (!representation_law_holds(M))
    throw MathError("quotient module violates the representation law (the parent table "
                    "likely fails the Jacobi identity)");
  return M;
}

inline GModule adjoint_module(const LieAlgebra& L) {
  GModule M;
  M.acting = L;
  M.dim = L.dim();
  for (std::size_t i = 0; i < L.dim(); ++i) M.action.push_back(L.ad(i));
  if (!representation_law_holds(M))
    throw MathError("adjoint module violates the representation law (the table fails "
                    "the Jacobi identity)");
  return M;
}

// ------------------------------------------------------- Killing form

inline QMatrix killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<QMatrix> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad(i));
  QMatrix K(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational tr(0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) tr += ads[i](a, b) * ads[j](b, a);
      K(i, j) = tr;
      K(j, i) = tr;
    }
  return K;
}

/// Cartan's criterion: semisimple iff the Killing form is nondegenerate.
inline bool is_semisimple(const LieAlgebra& L) {
  if (L.dim() == 0) return false;
  return determinant(killing_form(L)) != 0;
}

// ------------------------------------------------- algebras from matrices

/// Matrix realization: basis matrices plus the abstract algebra whose
/// structure constants come from their commutators.
struct MatrixAlgebra {
  std::vector<QMatrix> basis;
  LieAlgebra algebra;
};

inline QVector flatten(const QMatrix& m) {
  QVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

inline QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

inline LieAlgebra lie_from_matrices(const std::vector<QMatrix>& mats,
                                    std::vector<std::string> names = {}) {
  if (mats.empty()) return LieAlgebra(0);
  const std::size_t d = mats.size();
  QMatrix flat(d, mats.front().rows() * mats.front().cols());
  for (std::size_t i = 0; i < d; ++i) flat.set_row(i, flatten(mats[i]));
  const RowSpan<Rational> span(flat);
  if (span.rank() != d) throw MathError("matrix family is linearly dependent");
  LieAlgebra L(d, std::move(names));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto red = span.reduce(flatten(commutator(mats[i], mats[j])));
      if (!red.in_span) throw MathError("matrix family is not closed under commutators");
      std::vector<BracketTerm> terms;
      for (std::size_t k = 0; k < d; ++k)
        if (red.coords[k] != 0) terms.push_back({k, red.coords[k]});
      L.set_bracket(i, j, std::move(terms));
    }
  return L;
}

/// Traceless n x n matrices: off-diagonal elementary matrices in (i, j) lex
/// order followed by H_k = E_kk - E_(k+1)(k+1).
inline MatrixAlgebra sl_matrices(std::size_t n) {
  if (n < 2) throw InputError("sl(n) needs n >= 2");
  std::vector<QMatrix> basis;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      QMatrix m(n, n);
      m(i, j) = 1;
      basis.push_back(std::move(m));
      names.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
    }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    QMatrix m(n, n);
    m(k, k) = 1;
    m(k + 1, k + 1) = -1;
    basis.push_back(std::move(m));
    names.push_back("H" + std::to_string(k));
  }
  LieAlgebra alg = lie_from_matrices(basis, std::move(names));
  return {std::move(basis), std::move(alg)};
}

/// {A : A^T B + B A = 0} for a symmetric invertible B, basis ordered by the
/// position of the leading entry (canonical kernel order).
inline MatrixAlgebra so_from_form(const QMatrix& B) {
  const std::size_t n = B.rows();
  if (B.cols() != n) throw MathError("so_from_form: B must be square");
  if (B != B.transpose()) throw MathError("so_from_form: B must be symmetric");
  if (determinant(B) == 0) throw MathError("so_from_form: B must be invertible");
  QMatrix sys(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t row = a * n + b;
      for (std::size_t k = 0; k < n; ++k) {
        sys(row, k * n + a) += B(k, b);  // A[k][a] B[k][b]
        sys(row, k * n + b) += B(a, k);  // B[a][k] A[k][b]
      }
    }
  std::vector<QMatrix> basis;
  std::vector<std::string> names;
  std::size_t idx = 0;
  for (const auto& v : kernel_basis(sys)) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    basis.push_back(std::move(m));
    names.push_back("s" + std::to_string(idx++));
  }
  LieAlgebra alg = lie_from_matrices(basis, std::move(names));
  return {std::move(basis), std::move(alg)};
}

/// h, e, f acting on the degree-m monomial basis u^m, u^(m-1) v, ..., v^m,
/// plus their coordinates inside sl(m+1).
struct Sl2SymPower {
  QMatrix h, e, f;
  MatrixAlgebra ambient;    // sl(m+1)
  Subalgebra embedding;     // span{h, e, f} inside ambient.algebra
};

inline Sl2SymPower sl2_sym_power(std::size_t m) {
  if (m < 1) throw InputError("sl2_sym_power needs m >= 1");
  const std::size_t n = m + 1;
  QMatrix h(n, n), e(n, n), f(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    h(k, k) = Rational(static_cast<long>(m) - 2 * static_cast<long>(k));
    if (k >= 1) e(k - 1, k) = Rational(static_cast<long>(k));
    if (k < m) f(k + 1, k) = Rational(static_cast<long>(m - k));
  }
  Sl2SymPower out{h, e, f, sl_matrices(n), {}};
  QMatrix flat(out.ambient.basis.size(), n * n);
  for (std::size_t i = 0; i < out.ambient.basis.size(); ++i)
    flat.set_row(i, flatten(out.ambient.basis[i]));
  const RowSpan<Rational> span(flat);
  QMatrix rows(3, out.ambient.basis.size());
  const QMatrix* mats[3] = {&out.h, &out.e, &out.f};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto red = span.reduce(flatten(*mats[i]));
    if (!red.in_span) throw InternalError("sym power matrix is not traceless");
    rows.set_row(i, red.coords);
  }
  out.embedding = Subalgebra{out.ambient.algebra, std::move(rows)};
  return out;
}

/// Matrix of ad(x) acting on the span of a matrix family, written in that
/// family's basis.
inline QMatrix adjoint_matrix(const MatrixAlgebra& A, const QMatrix& x) {
  const std::size_t d = A.basis.size();
  QMatrix flat(d, A.basis.front().rows() * A.basis.front().cols());
  for (std::size_t i = 0; i < d; ++i) flat.set_row(i, flatten(A.basis[i]));
  const RowSpan<Rational> span(flat);
  QMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto red = span.reduce(flatten(commutator(x, A.basis[j])));
    if (!red.in_span) throw MathError("adjoint_matrix: family is not ad(x)-stable");
    for (std::size_t k = 0; k < d; ++k) out(k, j) = red.coords[k];
  }
  return out;
}

/// The symmetric B with X^T B + B X = 0 for every representation matrix X.
/// Errors out when no such form exists or the solution is not unique.
inline QMatrix invariant_symmetric_form(const std::vector<QMatrix>& rep) {
  if (rep.empty()) throw InputError("invariant_symmetric_form: empty representation");
  const std::size_t n = rep.front().rows();
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) idx.emplace_back(i, j);
  auto pos = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    // position of (i, j) in the upper-triangular enumeration
    return i * n - i * (i + 1) / 2 + j;
  };
  QMatrix sys(rep.size() * n * n, idx.size());
  std::size_t row = 0;
  for (const auto& X : rep) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t k = 0; k < n; ++k) {
          if (X(k, a) != 0) sys(row, pos(k, b)) += X(k, a);
          if (X(k, b) != 0) sys(row, pos(a, k)) += X(k, b);
        }
        ++row;
      }
  }
  const auto ker = kernel_basis(sys);
  if (ker.empty()) throw MathError("no invariant symmetric form");
  if (ker.size() > 1) throw MathError("invariant symmetric form is not unique");
  QMatrix B(n, n);
  for (std::size_t t = 0; t < idx.size(); ++t) {
    B(idx[t].first, idx[t].second) = ker[0][t];
    B(idx[t].second, idx[t].first) = ker[0][t];
  }
  return B;
}

// --------------------------------------------------- inner automorphisms

/// exp(ad x) for an ad-nilpotent element, summed exactly. An automorphism of
/// L since ad x is a derivation.
inline QMatrix exp_ad_nilpotent(const LieAlgebra& L, const QVector& x) {
  const QMatrix a = L.ad(x);
  QMatrix acc = QMatrix::identity(L.dim());
  QMatrix power = QMatrix::identity(L.dim());
  Rational factorial(1);
  for (std::size_t k = 1; k <= L.dim() + 1; ++k) {
    power = power * a;
    if (power.is_zero()) return acc;
    factorial *= Rational(static_cast<long>(k));
    acc = acc + power.scaled(Rational(1) / factorial);
  }
  throw MathError("exp_ad_nilpotent: element is not ad-nilpotent");
}

}  // namespace liefol

#endif
