#ifndef LIEFOL_DIFF_FORM_HPP
#define LIEFOL_DIFF_FORM_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "vfield.hpp"

namespace liefol {

/// Alternating q-form on C^(n+1) with polynomial coefficients, keyed by
/// strictly increasing index tuples (antisymmetry lives in the key
/// normalization).
class DiffForm {
 public:
  DiffForm() = default;
  DiffForm(std::size_t n, std::size_t q) : n_(n), q_(q) {}

  /// dx_0 ^ ... ^ dx_n.
  static DiffForm volume(std::size_t n) {
    DiffForm w(n, n + 1);
    std::vector<unsigned> all(n + 1);
    for (std::size_t i = 0; i <= n; ++i) all[i] = static_cast<unsigned>(i);
    w.coeff_.emplace(std::move(all), MultiPoly::constant(n + 1, false, Rational(1)));
    return w;
  }

  std::size_t ambient() const { return n_; }
  std::size_t degree() const { return q_; }
  bool is_zero() const { return coeff_.empty(); }
  const std::map<std::vector<unsigned>, MultiPoly>& coefficients() const { return coeff_; }

  bool operator==(const DiffForm& o) const {
    return n_ == o.n_ && q_ == o.q_ && coeff_ == o.coeff_;
  }
  bool operator!=(const DiffForm& o) const { return !(*this == o); }

  void add_term(const std::vector<unsigned>& idx, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto it = coeff_.find(idx);
    if (it == coeff_.end()) {
      coeff_.emplace(idx, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) coeff_.erase(it);
    }
  }

  DiffForm operator+(const DiffForm& o) const {
    require_same_space(o);
    if (q_ != o.q_) throw InputError("form degrees disagree");
    DiffForm r = *this;
    for (const auto& [idx, c] : o.coeff_) r.add_term(idx, c);
    return r;
  }

  DiffForm scaled(const Rational& s) const {
    DiffForm r(n_, q_);
    if (s == 0) return r;
    for (const auto& [idx, c] : coeff_) r.coeff_.emplace(idx, c.scaled(s));
    return r;
  }

  /// Interior product i_X: (i_X w)(v_2..v_q) = w(X, v_2..v_q).
  DiffForm interior(const PolyVectorField& X) const {
    if (X.n != n_) throw InputError("interior product: ambient mismatch");
    if (q_ == 0) throw InputError("interior product of a 0-form");
    DiffForm r(n_, q_ - 1);
    for (const auto& [idx, c] : coeff_)
      for (std::size_t l = 0; l < idx.size(); ++l) {
        const auto& xl = X.comps[idx[l]];
        if (xl.is_zero()) continue;
        std::vector<unsigned> rest;
        rest.reserve(idx.size() - 1);
        for (std::size_t t = 0; t < idx.size(); ++t)
          if (t != l) rest.push_back(idx[t]);
        const MultiPoly term = c * xl;
        r.add_term(rest, (l % 2 == 0) ? term : -term);
      }
    return r;
  }

  DiffForm wedge(const DiffForm& o) const {
    require_same_space(o);
    DiffForm r(n_, q_ + o.q_);
    for (const auto& [ia, ca] : coeff_)
      for (const auto& [ib, cb] : o.coeff_) {
        // count inversions of the concatenation; repeated indices kill the term
        bool repeated = false;
        std::size_t inversions = 0;
        for (unsigned a : ia)
          for (unsigned b : ib) {
            if (a == b) repeated = true;
            if (a > b) ++inversions;
          }
        if (repeated) continue;
        std::vector<unsigned> merged;
        merged.reserve(ia.size() + ib.size());
        std::merge(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(merged));
        const MultiPoly prod = ca * cb;
        r.add_term(merged, (inversions % 2 == 0) ? prod : -prod);
      }
    return r;
  }

  DiffForm exterior_derivative() const {
    DiffForm r(n_, q_ + 1);
    for (const auto& [idx, c] : coeff_)
      for (unsigned j = 0; j <= n_; ++j) {
        const MultiPoly p = c.partial(j);
        if (p.is_zero()) continue;
        bool repeated = false;
        std::size_t below = 0;
        for (unsigned x : idx) {
          if (x == j) repeated = true;
          if (x < j) ++below;
        }
        if (repeated) continue;
        std::vector<unsigned> key = idx;
        key.insert(key.begin() + below, j);
        r.add_term(key, (below % 2 == 0) ? p : -p);
      }
    return r;
  }

  /// Constant form of the values at p; zero coefficients are dropped, so an
  /// empty map means the form vanishes at p.
  std::map<std::vector<unsigned>, Rational> evaluate(const ProjPoint& p) const {
    std::map<std::vector<unsigned>, Rational> out;
    for (const auto& [idx, c] : coeff_) {
      const Rational v = c.eval(p.coords);
      if (v != 0) out.emplace(idx, v);
    }
    return out;
  }

  /// Common homogeneity degree of the coefficients; nullopt if mixed, -1 for
  /// the zero form.
  std::optional<long> coefficient_degree() const {
    long deg = -1;
    for (const auto& [idx, c] : coeff_) {
      const auto d = c.homogeneous_degree();
      if (!d) return std::nullopt;
      if (deg == -1) deg = *d;
      else if (deg != *d) return std::nullopt;
    }
    return deg;
  }

  std::string str() const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (const auto& [idx, c] : coeff_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (unsigned i : idx) out += " dx" + std::to_string(i);
    }
    return out;
  }

 private:
  void require_same_space(const DiffForm& o) const {
    if (n_ != o.n_) throw InputError("forms live on different ambients");
  }

  std::size_t n_ = 0, q_ = 0;
  std::map<std::vector<unsigned>, MultiPoly> coeff_;
};

// --------------------------------------------------------- defining 1-form

struct OneFormResult {
  DiffForm omega;     // content-reduced defining form
  DiffForm raw;       // before content removal
  MultiPoly content;  // extracted common polynomial factor
};

/// Defining twisted 1-form of the distribution spanned by n-1 fields on P^n:
/// omega = i_(X_(n-1)) ... i_(X_1) i_E (dx_0 ^ ... ^ dx_n), divided by the
/// polynomial content of its coefficients so that the divisorial part of the
/// singular locus is removed.
inline OneFormResult defining_one_form(const std::vector<PolyVectorField>& fields) {
  if (fields.empty()) throw InputError("defining_one_form: no fields");
  const std::size_t n = fields.front().n;
  if (fields.size() != n - 1)
    throw InputError("defining_one_form needs exactly n-1 fields on P^n");
  for (const auto& f : fields) {
    if (f.n != n) throw InputError("defining_one_form: ambient mismatch");
    if (f.param) throw InputError("defining_one_form: specialize the parameter first");
  }
  DiffForm w = DiffForm::volume(n).interior(euler_field(n));
  for (const auto& f : fields) w = w.interior(f);
  if (w.is_zero())
    throw MathError("fields are dependent everywhere: the defining form vanishes");
  std::vector<MultiPoly> coeffs;
  for (const auto& [idx, c] : w.coefficients()) coeffs.push_back(c);
  const auto reduced = content_and_primitive(coeffs);
  DiffForm out(n, 1);
  std::size_t pos = 0;
  for (const auto& [idx, c] : w.coefficients()) out.add_term(idx, reduced.primitive[pos++]);
  return {std::move(out), std::move(w), reduced.content};
}

// ----------------------------------------------------------- integrability

struct FrobeniusResult {
  bool integrable = false;
  DiffForm residual;  // omega ^ d omega, zero iff integrable
};

/// Frobenius condition for a 1-form: omega ^ d omega = 0.
inline FrobeniusResult frobenius_check(const DiffForm& omega) {
  if (omega.degree() != 1) throw InputError("frobenius_check: only q = 1 is supported");
  DiffForm res = omega.wedge(omega.exterior_derivative());
  return {res.is_zero(), std::move(res)};
}

// ------------------------------------------------------------- singularity

/// Generators of the ideal of Z(omega) = Sing(F): the coefficients.
inline std::vector<MultiPoly> singular_ideal(const DiffForm& omega) {
  std::vector<MultiPoly> out;
  for (const auto& [idx, c] : omega.coefficients()) out.push_back(c);
  return out;
}

enum class PointClass { Regular, Kupka, NonKupkaSingular };

inline const char* point_class_name(PointClass c) {
  switch (c) {
    case PointClass::Regular: return "REGULAR";
    case PointClass::Kupka: return "KUPKA";
    default: return "NON-KUPKA-SINGULAR";
  }
}

/// Kupka classification: omega(p) = 0 and d omega(p) != 0.
inline std::vector<PointClass> kupka_classify(const DiffForm& omega,
                                              const std::vector<ProjPoint>& pts) {
  const DiffForm dw = omega.exterior_derivative();
  std::vector<PointClass> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    if (!omega.evaluate(p).empty())
      out.push_back(PointClass::Regular);
    else if (!dw.evaluate(p).empty())
      out.push_back(PointClass::Kupka);
    else
      out.push_back(PointClass::NonKupkaSingular);
  }
  return out;
}

}  // namespace liefol

#endif
