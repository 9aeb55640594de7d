#ifndef LIEFOL_COHOMOLOGY_HPP
#define LIEFOL_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "ratfunc.hpp"
#include "vfield.hpp"

namespace liefol {

namespace detail {

inline std::vector<std::vector<std::size_t>> subsets_lex(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > d) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i-- > 0) {
      if (cur[i] != i + d - k) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

}  // namespace detail

/// Matrix of the degree-k Chevalley-Eilenberg differential
/// C^k(g, M) -> C^(k+1)(g, M) in the basis ordered by (lexicographic
/// k-subset of the g-basis) x (M-basis):
///   (d f)(x_1 ^ ... ^ x_(k+1)) = sum_i (-1)^(i+1) x_i . f(.. x_i-hat ..)
///     + sum_(i<j) (-1)^(i+j) f([x_i, x_j] ^ .. x_i-hat .. x_j-hat ..).
inline QMatrix ce_differential(const GModule& M, std::size_t k) {
  if (!representation_law_holds(M))
    throw MathError("ce_differential: module violates the representation law");
  const std::size_t d = M.acting.dim();
  const std::size_t m = M.dim;
  const auto rows_sets = detail::subsets_lex(d, k + 1);
  const auto cols_sets = detail::subsets_lex(d, k);
  std::map<std::vector<std::size_t>, std::size_t> col_index;
  for (std::size_t s = 0; s < cols_sets.size(); ++s) col_index[cols_sets[s]] = s;

  QMatrix out(rows_sets.size() * m, cols_sets.size() * m);
  for (std::size_t r = 0; r < rows_sets.size(); ++r) {
    const auto& T = rows_sets[r];
    // first sum: remove one generator, act with it on the value
    for (std::size_t i = 0; i < T.size(); ++i) {
      std::vector<std::size_t> S;
      S.reserve(k);
      for (std::size_t l = 0; l < T.size(); ++l)
        if (l != i) S.push_back(T[l]);
      const std::size_t cblock = col_index.at(S);
      const int sign = (i % 2 == 0) ? 1 : -1;  // (-1)^(i+1) with 1-based i
      const QMatrix& act = M.action[T[i]];
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          if (act(a, b) != 0)
            out(r * m + a, cblock * m + b) += sign > 0 ? act(a, b) : -act(a, b);
    }
    // second sum: insert the bracket of two generators in front
    for (std::size_t i = 0; i < T.size(); ++i)
      for (std::size_t j = i + 1; j < T.size(); ++j) {
        std::vector<std::size_t> R;
        R.reserve(k >= 1 ? k - 1 : 0);
        for (std::size_t l = 0; l < T.size(); ++l)
          if (l != i && l != j) R.push_back(T[l]);
        const int pair_sign = ((i + j) % 2 == 0) ? 1 : -1;  // (-1)^(i+j), 1-based
        for (const auto& term : M.acting.bracket_basis(T[i], T[j])) {
          bool repeated = false;
          std::size_t below = 0;
          for (auto x : R) {
            if (x == term.k) repeated = true;
            if (x < term.k) ++below;
          }
          if (repeated) continue;
          std::vector<std::size_t> S = R;
          S.insert(S.begin() + below, term.k);
          const int insert_sign = (below % 2 == 0) ? 1 : -1;
          const Rational coeff = term.c * pair_sign * insert_sign;
          const std::size_t cblock = col_index.at(S);
          for (std::size_t a = 0; a < m; ++a) out(r * m + a, cblock * m + a) += coeff;
        }
      }
  }
  return out;
}

/// The complex C^0 .. C^max_degree with differentials delta^0 ..
/// delta^(max_degree-1); construction audits delta.delta = 0 exactly.
struct CEComplex {
  GModule module;
  std::size_t max_degree = 2;
  std::vector<QMatrix> differentials;
};

inline CEComplex build_ce_complex(const GModule& M, std::size_t max_degree = 2) {
  if (max_degree < 2) throw InputError("CE complex needs max_degree >= 2");
  CEComplex c{M, max_degree, {}};
  for (std::size_t k = 0; k + 1 <= max_degree; ++k) c.differentials.push_back(ce_differential(M, k));
  for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k)
    if (!(c.differentials[k + 1] * c.differentials[k]).is_zero())
      throw InternalError("CE complex broken: delta^" + std::to_string(k + 1) + " . delta^" +
                          std::to_string(k) + " != 0");
  return c;
}

struct CohomologyDims {
  std::size_t z = 0, b = 0, h = 0;
};

inline CohomologyDims cohomology_dims(const GModule& M, std::size_t k) {
  const std::size_t ck = detail::subsets_lex(M.acting.dim(), k).size() * M.dim;
  const QMatrix dk = ce_differential(M, k);
  CohomologyDims out;
  out.z = ck - rank(dk);
  out.b = (k == 0) ? 0 : rank(ce_differential(M, k - 1));
  out.h = out.z - out.b;
  return out;
}

/// Dimension of the invariant subspace M^g (common kernel of the actions).
inline std::size_t invariant_dimension(const GModule& M) {
  QMatrix stacked(M.action.size() * M.dim, M.dim);
  for (std::size_t i = 0; i < M.action.size(); ++i)
    for (std::size_t a = 0; a < M.dim; ++a)
      for (std::size_t b = 0; b < M.dim; ++b) stacked(i * M.dim + a, b) = M.action[i](a, b);
  return M.dim - rank(stacked);
}

// ---------------------------------------------------------------- rigidity

/// dim Z^1(g, L/g) is the tangent space to the variety of subalgebras at g,
/// dim B^1 the tangent space to the automorphism orbit; g is rigid exactly
/// when they agree.
struct RigidityReport {
  std::size_t dim_L = 0, dim_g = 0, dim_M = 0;
  std::size_t dim_Z1 = 0, dim_B1 = 0, dim_H1 = 0;
  std::size_t dim_invariants = 0;  // dim (L/g)^g
  bool rigid = false;
};

inline RigidityReport rigidity_verdict(const Subalgebra& g) {
  const GModule M = quotient_module(g);
  RigidityReport rep;
  rep.dim_L = g.parent.dim();
  rep.dim_g = g.dim();
  rep.dim_M = M.dim;
  const QMatrix d0 = ce_differential(M, 0);
  const QMatrix d1 = ce_differential(M, 1);
  if (!(d1 * d0).is_zero()) throw InternalError("CE complex broken: delta^1 . delta^0 != 0");
  rep.dim_B1 = rank(d0);
  rep.dim_Z1 = g.dim() * M.dim - rank(d1);
  rep.dim_H1 = rep.dim_Z1 - rep.dim_B1;
  rep.dim_invariants = M.dim - rep.dim_B1;
  rep.rigid = (rep.dim_Z1 == rep.dim_B1);
  return rep;
}

// --------------------------------------------- families of fields over Q(t)

/// Bracket table of a parameterized field family over Q(t):
/// [X_i, X_j] = sum_k table[i][j][k] X_k, or the first pair whose bracket
/// leaves the Q(t)-span.
struct FamilyClosureResult {
  bool closed = false;
  std::vector<std::vector<std::vector<RatFunc>>> table;
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  PolyVectorField witness_bracket;
};

namespace detail {

/// Groups the terms of a (possibly parameterized) polynomial by x-monomial;
/// the t-exponents of each group assemble into a Q[t] coefficient.
inline std::map<Mono, QPoly> param_coeffs(const MultiPoly& p) {
  std::map<Mono, std::vector<Rational>> acc;
  for (const auto& [m, c] : p.terms()) {
    Mono xm = m;
    unsigned tdeg = 0;
    if (p.has_param()) {
      tdeg = m.back();
      xm.pop_back();
    }
    auto& v = acc[xm];
    if (v.size() <= tdeg) v.resize(tdeg + 1, Rational(0));
    v[tdeg] += c;
  }
  std::map<Mono, QPoly> out;
  for (auto& [m, v] : acc) out.emplace(m, QPoly(std::move(v)));
  return out;
}

}  // namespace detail

inline FamilyClosureResult family_closure_check(const std::vector<PolyVectorField>& fields) {
  if (fields.empty()) throw InputError("family_closure_check: empty family");
  const std::size_t d = fields.size();

  // column set: (component, x-monomial) pairs over generators and brackets
  std::map<std::pair<std::size_t, Mono>, std::size_t> columns;
  auto visit = [&](const PolyVectorField& f) {
    for (std::size_t i = 0; i < f.comps.size(); ++i)
      for (const auto& [m, q] : detail::param_coeffs(f.comps[i]))
        columns.emplace(std::make_pair(i, m), 0);
  };
  for (const auto& f : fields) visit(f);
  std::vector<std::vector<PolyVectorField>> brackets(d, std::vector<PolyVectorField>());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      brackets[i].push_back(bracket_vf(fields[i], fields[j]));
      visit(brackets[i].back());
    }
  std::size_t idx = 0;
  for (auto& [key, v] : columns) v = idx++;

  auto coord_row = [&](const PolyVectorField& f) {
    std::vector<RatFunc> row(columns.size(), RatFunc());
    for (std::size_t i = 0; i < f.comps.size(); ++i)
      for (const auto& [m, q] : detail::param_coeffs(f.comps[i]))
        row[columns.at(std::make_pair(i, m))] = RatFunc(q);
    return row;
  };

  RatFuncMatrix G(d, columns.size());
  for (std::size_t i = 0; i < d; ++i) G.set_row(i, coord_row(fields[i]));
  if (rank_ratfunc(G).rank != d)
    throw MathError("family generators are linearly dependent over Q(t)");

  const RowSpan<RatFunc> span(G);
  FamilyClosureResult out;
  out.table.assign(d, std::vector<std::vector<RatFunc>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto red = span.reduce(coord_row(brackets[i][j]));
      if (!red.in_span) {
        out.closed = false;
        out.witness_pair = {i, j};
        out.witness_bracket = brackets[i][j];
        return out;
      }
      out.table[i][j] = std::move(red.coords);
    }
  out.closed = true;
  return out;
}

/// Specializes a Q(t) bracket table at t0. Throws on a pole.
inline std::vector<std::vector<QVector>> specialize_table(
    const std::vector<std::vector<std::vector<RatFunc>>>& table, const Rational& t0) {
  std::vector<std::vector<QVector>> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    for (const auto& row : table[i]) {
      QVector v;
      for (const auto& f : row) {
        const auto val = f.eval(t0);
        if (!val) throw MathError("bracket table has a pole at t = " + t0.str());
        v.push_back(*val);
      }
      out[i].push_back(std::move(v));
    }
  return out;
}

}  // namespace liefol

#endif
