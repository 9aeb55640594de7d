#ifndef LIEFOL_RATFUNC_HPP
#define LIEFOL_RATFUNC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace liefol {

/// Univariate polynomial over Q in the parameter t. Coefficients ascending,
/// no trailing zeros; the zero polynomial has degree -1.
class QPoly {
 public:
  QPoly() = default;
  QPoly(int v) { if (v != 0) c_.push_back(Rational(v)); }
  QPoly(const Rational& v) { if (v != 0) c_.push_back(v); }
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly t() { return QPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(std::size_t k) const {
    static const Rational zero(0);
    return k < c_.size() ? c_[k] : zero;
  }
  const Rational& leading() const { return c_.back(); }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly operator+(const QPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
  }
  QPoly operator-(const QPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return QPoly(std::move(r));
  }
  QPoly operator-() const { return QPoly(0) - *this; }
  QPoly operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
  }
  QPoly scaled(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return QPoly(std::move(r));
  }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
    if (d.is_zero()) throw MathError("QPoly division by zero");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo;
    if (degree() >= d.degree())
      quo.assign(static_cast<std::size_t>(degree() - d.degree()) + 1, Rational(0));
    while (static_cast<long>(rem.size()) - 1 >= d.degree()) {
      if (rem.back() == 0) {
        rem.pop_back();
        continue;
      }
      const std::size_t shift = rem.size() - 1 - static_cast<std::size_t>(d.degree());
      const Rational f = rem.back() / d.leading();
      quo[shift] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i) rem[shift + i] -= f * d.c_[i];
      rem.pop_back();
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
  }

  QPoly monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
  }

  Rational eval(const Rational& t0) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t0 + c_[i];
    return acc;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rational& a = c_[i];
      if (a == 0) continue;
      const bool lead = out.empty();
      Rational mag = a < 0 ? Rational(-a) : a;
      if (!lead) out += (a < 0) ? " - " : " + ";
      else if (a < 0) out += "-";
      if (i == 0) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Element of Q(t), kept reduced: gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(int v) : num_(v), den_(1) {}
  RatFunc(const Rational& v) : num_(v), den_(1) {}
  RatFunc(QPoly num) : num_(std::move(num)), den_(1) {}
  RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MathError("RatFunc with zero denominator");
    normalize();
  }

  static RatFunc t() { return RatFunc(QPoly::t()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
  RatFunc operator/(const RatFunc& o) const {
    if (o.is_zero()) throw MathError("RatFunc division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
  }

  /// Value at t0, or nullopt on a pole.
  std::optional<Rational> eval(const Rational& t0) const {
    const Rational d = den_.eval(t0);
    if (d == 0) return std::nullopt;
    return num_.eval(t0) / d;
  }

  std::string str() const {
    if (den_ == QPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = QPoly(1);
      return;
    }
    const QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
      den_ = den_.scaled(Rational(1) / lead);
      num_ = num_.scaled(Rational(1) / lead);
    }
  }

  QPoly num_, den_;
};

/// Low-degree pivots keep Q(t) elimination from blowing up.
template <>
struct FieldTraits<RatFunc> {
  static long pivot_weight(const RatFunc& f) { return f.num().degree() + f.den().degree(); }
};

using RatFuncMatrix = Matrix<RatFunc>;

struct RatFuncRank {
  std::size_t rank;
  std::vector<RatFunc> pivots;
};

/// Rank over Q(t). The recorded pivots are the admissibility certificate for
/// specialization: any t0 avoiding their numerator and denominator roots
/// specializes to a rational matrix of the same rank.
inline RatFuncRank rank_ratfunc(const RatFuncMatrix& m) {
  auto red = rref(m);
  return {red.pivot_cols.size(), std::move(red.pivot_values)};
}

}  // namespace liefol

#endif
