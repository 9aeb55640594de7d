#ifndef LIEFOL_VFIELD_HPP
#define LIEFOL_VFIELD_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace liefol {

/// Homogeneous polynomial vector field on P^n, stored as an honest field on
/// C^(n+1): component i is the coefficient of d/dx_i. The Euler field is
/// never quotiented out of the representation; it is appended at evaluation
/// time instead.
struct PolyVectorField {
  std::size_t n = 0;   // ambient projective dimension
  bool param = false;  // carries the parameter t
  std::vector<MultiPoly> comps;

  static PolyVectorField zero(std::size_t n, bool param = false) {
    return {n, param, std::vector<MultiPoly>(n + 1, MultiPoly(n + 1, param))};
  }

  bool is_zero() const {
    for (const auto& c : comps)
      if (!c.is_zero()) return false;
    return true;
  }

  bool operator==(const PolyVectorField& o) const {
    return n == o.n && param == o.param && comps == o.comps;
  }
  bool operator!=(const PolyVectorField& o) const { return !(*this == o); }

  PolyVectorField operator+(const PolyVectorField& o) const {
    PolyVectorField r = *this;
    for (std::size_t i = 0; i <= n; ++i) r.comps[i] = r.comps[i] + o.comps[i];
    return r;
  }
  PolyVectorField operator-(const PolyVectorField& o) const {
    PolyVectorField r = *this;
    for (std::size_t i = 0; i <= n; ++i) r.comps[i] = r.comps[i] - o.comps[i];
    return r;
  }
  PolyVectorField scaled(const Rational& s) const {
    PolyVectorField r = *this;
    for (auto& c : r.comps) c = c.scaled(s);
    return r;
  }

  /// Common homogeneity degree of the nonzero components (t ignored);
  /// nullopt when mixed, -1 for the zero field.
  std::optional<long> degree() const {
    long deg = -1;
    for (const auto& c : comps) {
      const auto d = c.homogeneous_degree();
      if (!d) return std::nullopt;
      if (*d == -1) continue;
      if (deg == -1) deg = *d;
      else if (deg != *d) return std::nullopt;
    }
    return deg;
  }

  PolyVectorField substitute_param(const Rational& t0) const {
    PolyVectorField r;
    r.n = n;
    r.param = false;
    for (const auto& c : comps) r.comps.push_back(c.substitute_param(t0));
    return r;
  }
};

inline PolyVectorField euler_field(std::size_t n, bool param = false) {
  PolyVectorField e = PolyVectorField::zero(n, param);
  for (std::size_t i = 0; i <= n; ++i) e.comps[i] = MultiPoly::variable(n + 1, param, i);
  return e;
}

/// [X,Y]_i = sum_j X_j dY_i/dx_j - Y_j dX_i/dx_j.
inline PolyVectorField bracket_vf(const PolyVectorField& X, const PolyVectorField& Y) {
  if (X.n != Y.n || X.param != Y.param) throw InputError("bracket_vf: ambient mismatch");
  PolyVectorField r = PolyVectorField::zero(X.n, X.param);
  for (std::size_t i = 0; i <= X.n; ++i) {
    MultiPoly acc(X.n + 1, X.param);
    for (std::size_t j = 0; j <= X.n; ++j) {
      if (!X.comps[j].is_zero()) acc = acc + X.comps[j] * Y.comps[i].partial(j);
      if (!Y.comps[j].is_zero()) acc = acc - Y.comps[j] * X.comps[i].partial(j);
    }
    r.comps[i] = std::move(acc);
  }
  return r;
}

/// The linear field of a matrix: (X_A)_i = sum_j A[i][j] x_j.
inline PolyVectorField field_from_matrix(const QMatrix& A, bool param = false) {
  const std::size_t n = A.rows() - 1;
  if (A.cols() != n + 1) throw InputError("field_from_matrix: matrix must be square");
  PolyVectorField f = PolyVectorField::zero(n, param);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      if (A(i, j) != 0)
        f.comps[i] = f.comps[i] + MultiPoly::variable(n + 1, param, j).scaled(A(i, j));
  return f;
}

/// Coefficient matrix of a linear (degree-1, parameter-free) field.
inline QMatrix matrix_of_linear_field(const PolyVectorField& f) {
  if (f.param) throw MathError("matrix_of_linear_field: field carries a parameter");
  QMatrix A(f.n + 1, f.n + 1);
  for (std::size_t i = 0; i <= f.n; ++i) {
    for (const auto& [m, c] : f.comps[i].terms()) {
      std::size_t var = m.size(), total = 0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        total += m[j];
        if (m[j] == 1) var = j;
      }
      if (total != 1) throw MathError("matrix_of_linear_field: field is not linear");
      A(i, var) = c;
    }
  }
  return A;
}

/// Linear fields of a matrix family together with the Lie algebra structure
/// computed on the field side (so no matrix-vs-field sign convention leaks:
/// [X_A, X_B] = X_(BA-AB)).
struct LinearFieldAlgebra {
  std::vector<PolyVectorField> fields;
  LieAlgebra algebra;
};

inline LinearFieldAlgebra linear_fields_from_matrices(const std::vector<QMatrix>& mats,
                                                      std::vector<std::string> names = {}) {
  if (mats.empty()) throw InputError("linear_fields_from_matrices: empty family");
  const std::size_t n = mats.front().rows() - 1;
  LinearFieldAlgebra out;
  for (const auto& A : mats) {
    if (A.rows() != n + 1 || A.cols() != n + 1)
      throw InputError("linear_fields_from_matrices: size mismatch");
    out.fields.push_back(field_from_matrix(A));
  }
  const std::size_t d = mats.size();
  QMatrix flat(d, (n + 1) * (n + 1));
  for (std::size_t i = 0; i < d; ++i) flat.set_row(i, flatten(matrix_of_linear_field(out.fields[i])));
  const RowSpan<Rational> span(flat);
  if (span.rank() != d) throw MathError("field family is linearly dependent");
  out.algebra = LieAlgebra(d, std::move(names));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto red =
          span.reduce(flatten(matrix_of_linear_field(bracket_vf(out.fields[i], out.fields[j]))));
      if (!red.in_span) throw MathError("field family is not bracket-closed");
      std::vector<BracketTerm> terms;
      for (std::size_t k = 0; k < d; ++k)
        if (red.coords[k] != 0) terms.push_back({k, red.coords[k]});
      out.algebra.set_bracket(i, j, std::move(terms));
    }
  return out;
}

// ------------------------------------------------------------------ points

struct ProjPoint {
  QVector coords;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ":";
      s += coords[i].str();
    }
    return s;
  }
};

inline bool proj_equal(const ProjPoint& a, const ProjPoint& b) {
  if (a.coords.size() != b.coords.size()) return false;
  std::size_t i = 0;
  while (i < a.coords.size() && a.coords[i] == 0 && b.coords[i] == 0) ++i;
  if (i == a.coords.size()) return true;
  if (a.coords[i] == 0 || b.coords[i] == 0) return false;
  const Rational s = b.coords[i] / a.coords[i];
  for (std::size_t j = 0; j < a.coords.size(); ++j)
    if (a.coords[j] * s != b.coords[j]) return false;
  return true;
}

/// Deterministic seeded integer draws. mt19937_64 is fully specified by the
/// standard and the modulo reduction avoids the implementation-defined
/// std::uniform_int_distribution, so reports are byte-identical everywhere.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}
  long int_in(long lo, long hi) {
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

/// Pseudo-random rational points with integer coordinates in [-10^4, 10^4],
/// zero vectors rejected. Zariski-open conditions fail only on measure-zero
/// sets, so bounded height is enough.
inline std::vector<ProjPoint> random_proj_points(std::size_t n, std::size_t count,
                                                 std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<ProjPoint> pts;
  while (pts.size() < count) {
    QVector v(n + 1);
    for (auto& x : v) x = Rational(rng.int_in(-10000, 10000));
    if (!is_zero_vec(v)) pts.push_back(ProjPoint{std::move(v)});
  }
  return pts;
}

inline QVector evaluate_field(const PolyVectorField& f, const ProjPoint& p) {
  QVector v;
  v.reserve(f.n + 1);
  for (const auto& c : f.comps) v.push_back(c.eval(p.coords));
  return v;
}

/// Field values at p with the Euler row E(p) = p appended last; the tangent
/// rank at p is rank(result) - 1.
inline QMatrix evaluate_mod_euler(const std::vector<PolyVectorField>& fields, const ProjPoint& p) {
  if (is_zero_vec(p.coords)) throw InputError("evaluate_mod_euler: zero point");
  const std::size_t m = p.coords.size();
  QMatrix out(fields.size() + 1, m);
  for (std::size_t i = 0; i < fields.size(); ++i) out.set_row(i, evaluate_field(fields[i], p));
  out.set_row(fields.size(), p.coords);
  return out;
}

inline std::size_t tangent_rank(const std::vector<PolyVectorField>& fields, const ProjPoint& p) {
  return rank(evaluate_mod_euler(fields, p)) - 1;
}

struct OrbitSample {
  ProjPoint point;
  std::size_t rank;
};

struct OrbitDimResult {
  std::size_t dim = 0;
  std::vector<OrbitSample> log;
};

/// Maximum tangent rank over the given sample points.
inline OrbitDimResult generic_orbit_dim(const std::vector<PolyVectorField>& fields,
                                        const std::vector<ProjPoint>& pts) {
  OrbitDimResult out;
  for (const auto& p : pts) {
    const std::size_t r = tangent_rank(fields, p);
    out.dim = std::max(out.dim, r);
    out.log.push_back({p, r});
  }
  return out;
}

// ----------------------------------------------------------------- quadric

struct QuadricModel {
  QMatrix B;  // symmetric invertible; Q = {x^T B x = 0} in P^(rows-1)
};

inline Rational quadric_eval(const QuadricModel& Q, const QVector& x) {
  Rational acc(0);
  const std::size_t n = Q.B.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) acc += x[i] * Q.B(i, j) * x[j];
  }
  return acc;
}

namespace detail {

inline std::optional<QVector> isotropic_base_point(const QuadricModel& Q) {
  const std::size_t n = Q.B.rows();
  std::vector<QVector> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    QVector v(n, Rational(0));
    v[i] = 1;
    candidates.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        QVector v(n, Rational(0));
        v[i] = 1;
        v[j] = s;
        candidates.push_back(std::move(v));
      }
  for (auto& v : candidates)
    if (quadric_eval(Q, v) == 0) return v;
  return std::nullopt;
}

}  // namespace detail

/// Rational point on Q by the stereographic construction: intersect the line
/// through a fixed isotropic base point and a seeded random direction with
/// the quadric.
inline ProjPoint quadric_point(const QuadricModel& Q, SeededRng& rng) {
  const auto base = detail::isotropic_base_point(Q);
  if (!base) throw MathError("no rational isotropic base point found in the search set");
  const std::size_t n = Q.B.rows();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    QVector v(n);
    for (auto& x : v) x = Rational(rng.int_in(-10000, 10000));
    if (is_zero_vec(v)) continue;
    // (p0 + s v)^T B (p0 + s v) = 2 s p0^T B v + s^2 v^T B v
    Rational cross(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cross += (*base)[i] * Q.B(i, j) * v[j];
    const Rational vBv = quadric_eval(Q, v);
    if (vBv == 0 || cross == 0) continue;
    const Rational s = Rational(-2) * cross / vBv;
    QVector q = *base;
    for (std::size_t i = 0; i < n; ++i) q[i] += s * v[i];
    if (is_zero_vec(q) || proj_equal(ProjPoint{q}, ProjPoint{*base})) continue;
    return ProjPoint{std::move(q)};
  }
  throw InternalError("quadric_point: no admissible direction found");
}

inline std::vector<ProjPoint> quadric_points(const QuadricModel& Q, std::size_t count,
                                             std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<ProjPoint> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(quadric_point(Q, rng));
  return pts;
}

// --------------------------------------------------------- tangent algebra

struct TangentAlgebraResult {
  Subalgebra algebra;           // inside the ambient field algebra
  bool maximal = false;         // result dimension == dim g
  bool stabilized = false;      // the last window of samples did not shrink it
  std::vector<std::size_t> dim_log;
  bool closure_ok = false;
  std::optional<ClosureWitness> closure_witness;
};

/// Over-approximation of the global fields tangent to the foliation of g:
/// all Y in L with Y(p) in span(g(p), E(p)) at every sample point. Decreasing
/// in the number of samples; the verdict is probabilistic (necessary
/// conditions at N points).
inline TangentAlgebraResult tangent_algebra(const LinearFieldAlgebra& L, const QMatrix& g_rows,
                                            const std::vector<ProjPoint>& pts,
                                            std::size_t stab_window = 5) {
  const std::size_t d = L.fields.size();
  if (g_rows.cols() != d) throw InputError("tangent_algebra: subalgebra row length mismatch");
  std::vector<QVector> constraints;
  TangentAlgebraResult out;
  for (const auto& p : pts) {
    const std::size_t m = p.coords.size();
    QMatrix values(d, m);
    for (std::size_t i = 0; i < d; ++i) values.set_row(i, evaluate_field(L.fields[i], p));
    QMatrix span_rows = (g_rows * values);
    QMatrix euler_row(1, m);
    euler_row.set_row(0, p.coords);
    span_rows = span_rows.vstack(euler_row);
    for (const auto& c : kernel_basis(span_rows)) constraints.push_back(values.mul_vec(c));
    QMatrix cmat(constraints.size(), d);
    for (std::size_t i = 0; i < constraints.size(); ++i) cmat.set_row(i, constraints[i]);
    out.dim_log.push_back(d - rank(cmat));
  }
  QMatrix cmat(constraints.size(), d);
  for (std::size_t i = 0; i < constraints.size(); ++i) cmat.set_row(i, constraints[i]);
  const auto ker = kernel_basis(cmat);
  QMatrix basis(ker.size(), d);
  for (std::size_t i = 0; i < ker.size(); ++i) basis.set_row(i, ker[i]);
  out.algebra = Subalgebra{L.algebra, std::move(basis)};
  out.maximal = (ker.size() == g_rows.rows());
  out.stabilized = out.dim_log.size() >= stab_window;
  if (out.stabilized) {
    const std::size_t last = out.dim_log.back();
    for (std::size_t i = out.dim_log.size() - stab_window; i < out.dim_log.size(); ++i)
      if (out.dim_log[i] != last) out.stabilized = false;
  }
  {
    const RowSpan<Rational> span(out.algebra.basis);
    for (std::size_t i = 0; i < g_rows.rows(); ++i)
      if (!span.reduce(g_rows.row(i)).in_span)
        throw InternalError("tangent_algebra: result does not contain g");
  }
  auto closure = subalgebra_closure_check(out.algebra);
  out.closure_ok = closure.closed;
  out.closure_witness = closure.witness;
  return out;
}

// --------------------------------------------------- hyperplane restriction

/// Restriction to {x_i = 0}, valid when every field is tangent to the
/// hyperplane (x_i divides the i-th component). Drops coordinate i.
inline std::vector<PolyVectorField> restrict_to_hyperplane(
    const std::vector<PolyVectorField>& fields, std::size_t i) {
  std::vector<PolyVectorField> out;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const auto& F = fields[f];
    if (i > F.n) throw InputError("restrict_to_hyperplane: coordinate out of range");
    const MultiPoly residual = F.comps[i].set_var_zero(i);
    if (!residual.is_zero())
      throw MathError("hyperplane x" + std::to_string(i) + " is not invariant: field #" +
                      std::to_string(f) + " has residual component " + residual.str());
    PolyVectorField r;
    r.n = F.n - 1;
    r.param = F.param;
    for (std::size_t j = 0; j <= F.n; ++j) {
      if (j == i) continue;
      r.comps.push_back(F.comps[j].set_var_zero(i).drop_var(i));
    }
    out.push_back(std::move(r));
  }
  return out;
}

// -------------------------------------------------- adjoint kernel sections

struct AdjointKernelReport {
  bool nilpotent = false;
  bool regular = false;
  std::size_t centralizer_dim = 0;
  std::size_t kernel_dim = 0;            // of the anchor evaluation at p
  std::vector<QMatrix> sections;         // Z_k(p), k = 1..n-1
  bool sections_commute = false;
  bool sections_independent = false;
};

/// Pointwise checks for the adjoint family of sl_n on P(sl_n). The point p
/// is given by its n^2 - 1 coordinates in the sl_matrices(n) basis. The
/// sections use the traceless normalization Z_k(p) = p^k - (tr(p^k)/n) Id.
inline AdjointKernelReport adjoint_kernel_sections(std::size_t n, const ProjPoint& p) {
  const auto sl = sl_matrices(n);
  const std::size_t d = sl.basis.size();
  if (p.coords.size() != d) throw InputError("adjoint point has wrong coordinate count");
  QMatrix P(n, n);
  for (std::size_t i = 0; i < d; ++i)
    if (p.coords[i] != 0) P = P + sl.basis[i].scaled(p.coords[i]);
  if (P.is_zero()) throw InputError("adjoint_kernel_sections: zero point");

  AdjointKernelReport rep;
  QMatrix power = P;
  for (std::size_t k = 1; k < n; ++k) power = power * P;
  rep.nilpotent = power.is_zero();  // p^n = 0 exactly

  power = QMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * P;
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += power(i, i);
    rep.sections.push_back(power - QMatrix::identity(n).scaled(tr / Rational(static_cast<long>(n))));
  }
  rep.sections_commute = true;
  for (const auto& Z : rep.sections)
    if (!commutator(Z, P).is_zero()) rep.sections_commute = false;
  {
    QMatrix flat(rep.sections.size(), n * n);
    for (std::size_t i = 0; i < rep.sections.size(); ++i) flat.set_row(i, flatten(rep.sections[i]));
    rep.sections_independent = (rank(flat) == rep.sections.size());
  }

  QMatrix flat_sl(d, n * n);
  for (std::size_t i = 0; i < d; ++i) flat_sl.set_row(i, flatten(sl.basis[i]));
  const RowSpan<Rational> span(flat_sl);

  // centralizer of p inside sl_n: left kernel of the rows [B_i, P]
  QMatrix comm_rows(d, n * n);
  for (std::size_t i = 0; i < d; ++i) comm_rows.set_row(i, flatten(commutator(sl.basis[i], P)));
  rep.centralizer_dim = d - rank(comm_rows);
  rep.regular = (rep.centralizer_dim == n - 1);

  // anchor evaluation at p: rows are sl-basis values [B_i, p] in sl
  // coordinates, Euler row appended
  QMatrix values(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto red = span.reduce(flatten(commutator(sl.basis[i], P)));
    if (!red.in_span) throw InternalError("adjoint value is not traceless");
    values.set_row(i, red.coords);
  }
  QMatrix euler(1, d);
  euler.set_row(0, p.coords);
  rep.kernel_dim = (d + 1) - rank(values.vstack(euler));
  return rep;
}

}  // namespace liefol

#endif
