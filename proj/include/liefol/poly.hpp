#ifndef LIEFOL_POLY_HPP
#define LIEFOL_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace liefol {

/// Exponent vector. When a polynomial carries the parameter t, the t
/// exponent sits in the last slot.
using Mono = std::vector<unsigned>;

/// Graded lexicographic, x0 > x1 > ... > xn > t, descending: the leading
/// monomial iterates first, which fixes canonical printing.
struct GrlexDesc {
  bool operator()(const Mono& a, const Mono& b) const {
    unsigned long da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db;
    return a > b;  // lexicographic, earlier variables more significant
  }
};

/// Multivariate polynomial over Q in x0..x(nx-1), optionally extended by the
/// parameter t (which counts as projective degree 0 in homogeneity audits).
class MultiPoly {
 public:
  MultiPoly() : nx_(0), param_(false) {}
  MultiPoly(std::size_t nx, bool param) : nx_(nx), param_(param) {}

  static MultiPoly constant(std::size_t nx, bool param, const Rational& c) {
    MultiPoly p(nx, param);
    if (c != 0) p.terms_[Mono(p.slots(), 0)] = c;
    return p;
  }
  static MultiPoly variable(std::size_t nx, bool param, std::size_t i) {
    if (i >= nx) throw InputError("variable index out of range");
    MultiPoly p(nx, param);
    Mono m(p.slots(), 0);
    m[i] = 1;
    p.terms_[m] = Rational(1);
    return p;
  }
  static MultiPoly parameter(std::size_t nx) {
    MultiPoly p(nx, true);
    Mono m(p.slots(), 0);
    m.back() = 1;
    p.terms_[m] = Rational(1);
    return p;
  }

  std::size_t nvars() const { return nx_; }
  bool has_param() const { return param_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rational, GrlexDesc>& terms() const { return terms_; }

  bool operator==(const MultiPoly& o) const {
    return nx_ == o.nx_ && param_ == o.param_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly operator+(const MultiPoly& o) const {
    require_compatible(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    require_compatible(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(nx_, param_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    require_compatible(o);
    MultiPoly r(nx_, param_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Mono m(slots());
        for (std::size_t i = 0; i < slots(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  MultiPoly scaled(const Rational& s) const {
    MultiPoly r(nx_, param_);
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
    return r;
  }
  MultiPoly pow(unsigned e) const {
    MultiPoly acc = constant(nx_, param_, Rational(1));
    MultiPoly base = *this;
    while (e) {
      if (e & 1u) acc = acc * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return acc;
  }

  MultiPoly partial(std::size_t var) const {
    if (var >= nx_) throw InputError("partial derivative: variable index out of range");
    MultiPoly r(nx_, param_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Mono d = m;
      --d[var];
      r.add_term(d, c * Rational(m[var]));
    }
    return r;
  }

  Rational eval(const std::vector<Rational>& xs,
                const std::optional<Rational>& t0 = std::nullopt) const {
    if (xs.size() != nx_) throw InputError("evaluation point length mismatch");
    if (param_ && !t0) throw InputError("evaluation needs a parameter value");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < nx_; ++i)
        for (unsigned k = 0; k < m[i]; ++k) term *= xs[i];
      if (param_)
        for (unsigned k = 0; k < m.back(); ++k) term *= *t0;
      acc += term;
    }
    return acc;
  }

  /// Specializes t := t0, dropping the parameter slot.
  MultiPoly substitute_param(const Rational& t0) const {
    if (!param_) throw InputError("substitute_param on a parameter-free polynomial");
    MultiPoly r(nx_, false);
    for (const auto& [m, c] : terms_) {
      Rational f = c;
      for (unsigned k = 0; k < m.back(); ++k) f *= t0;
      Mono mm(m.begin(), m.end() - 1);
      r.add_term(mm, f);
    }
    return r;
  }

  MultiPoly set_var_zero(std::size_t var) const {
    if (var >= nx_) throw InputError("set_var_zero: variable index out of range");
    MultiPoly r(nx_, param_);
    for (const auto& [m, c] : terms_)
      if (m[var] == 0) r.terms_[m] = c;
    return r;
  }

  /// Removes an unused variable slot (all exponents at var must be zero).
  MultiPoly drop_var(std::size_t var) const {
    MultiPoly r(nx_ - 1, param_);
    for (const auto& [m, c] : terms_) {
      if (m[var] != 0) throw InternalError("drop_var on a live variable");
      Mono mm;
      mm.reserve(slots() - 1);
      for (std::size_t i = 0; i < slots(); ++i)
        if (i != var) mm.push_back(m[i]);
      r.terms_[mm] = c;
    }
    return r;
  }

  long degree_in(std::size_t slot) const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[slot]));
    return d;
  }

  /// Projective degree, ignoring t. Returns -1 for the zero polynomial and
  /// nullopt when the terms do not share one x-degree.
  std::optional<long> homogeneous_degree() const {
    if (terms_.empty()) return -1;
    long deg = -2;
    for (const auto& [m, c] : terms_) {
      long d = 0;
      for (std::size_t i = 0; i < nx_; ++i) d += m[i];
      if (deg == -2) deg = d;
      else if (deg != d) return std::nullopt;
    }
    return deg;
  }

  std::pair<Mono, Rational> leading_term() const {
    if (terms_.empty()) throw MathError("leading term of the zero polynomial");
    return *terms_.begin();
  }

  void add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Canonical printing: grlex-descending terms. The output re-parses to the
  /// same polynomial (a leading negative coefficient is spelled "-1*...").
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const Rational mag = c < 0 ? Rational(-c) : c;
      std::string vars;
      for (std::size_t i = 0; i < slots(); ++i) {
        if (m[i] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += (param_ && i + 1 == slots()) ? "t" : "x" + std::to_string(i);
        if (m[i] > 1) vars += "^" + std::to_string(m[i]);
      }
      std::string body;
      if (vars.empty()) {
        body = mag.str();
      } else if (mag == 1 && !(first && c < 0)) {
        body = vars;
      } else {
        body = mag.str() + "*" + vars;
      }
      if (first) {
        out = (c < 0 ? "-" : "") + body;
        first = false;
      } else {
        out += (c < 0 ? " - " : " + ") + body;
      }
    }
    return out;
  }

  std::size_t slots() const { return nx_ + (param_ ? 1 : 0); }

 private:
  void require_compatible(const MultiPoly& o) const {
    if (nx_ != o.nx_ || param_ != o.param_)
      throw InputError("polynomial variable counts disagree");
  }

  std::size_t nx_;
  bool param_;
  std::map<Mono, Rational, GrlexDesc> terms_;
};

// ------------------------------------------------------------------ parser

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& src, std::size_t nx, bool param)
      : s_(src), nx_(nx), param_(param) {}

  MultiPoly parse() {
    skip_ws();
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    return p;
  }

 private:
  static constexpr unsigned kMaxExponent = 4096;

  MultiPoly expr() {
    MultiPoly p = term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        p = p + term();
      } else if (peek() == '-') {
        ++pos_;
        p = p - term();
      } else {
        return p;
      }
    }
  }

  MultiPoly term() {
    MultiPoly p = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        p = p * factor();
      } else {
        return p;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      b = b.pow(parse_uint("exponent"));
    }
    return b;
  }

  MultiPoly base() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return p;
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      const unsigned idx = parse_uint("variable index", /*adjacent=*/true);
      if (idx >= nx_)
        throw ParseError("unknown variable x" + std::to_string(idx), at);
      return MultiPoly::variable(nx_, param_, idx);
    }
    if (c == 't') {
      if (!param_) throw ParseError("unknown variable t", pos_);
      ++pos_;
      return MultiPoly::parameter(nx_);
    }
    if (c == '-' || is_digit(c)) return rational_literal();
    throw ParseError(std::string("unexpected character '") + (c ? std::string(1, c) : "end") + "'",
                     pos_);
  }

  MultiPoly rational_literal() {
    const std::size_t at = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
      if (!is_digit(peek())) throw ParseError("expected integer after '-'", pos_);
    }
    BigInt num = parse_bigint();
    BigInt den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (!is_digit(peek())) throw ParseError("expected denominator", pos_);
      den = parse_bigint();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    Rational q = Rational(num) / Rational(den);
    if (neg) q = -q;
    return MultiPoly::constant(nx_, param_, q);
  }

  BigInt parse_bigint() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    return BigInt(s_.substr(start, pos_ - start));
  }

  unsigned parse_uint(const char* what, bool adjacent = false) {
    if (!adjacent) skip_ws();
    if (!is_digit(peek()))
      throw ParseError(std::string("expected ") + what, pos_);
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    const std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 6) throw ParseError(std::string(what) + " overflow", start);
    const unsigned long v = std::stoul(digits);
    if (v > kMaxExponent) throw ParseError(std::string(what) + " overflow", start);
    return static_cast<unsigned>(v);
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
      ++pos_;
  }

  const std::string& s_;
  std::size_t nx_;
  bool param_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar (whitespace insignificant, no implicit multiplication):
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := rational | var | '(' expr ')'
///   var      := 'x' uint | 't'
///   rational := int ('/' uint)?
inline MultiPoly parse_poly(const std::string& src, std::size_t nx, bool has_param) {
  return detail::PolyParser(src, nx, has_param).parse();
}

// ------------------------------------------------------------- gcd/content

namespace detail {

/// Exact division, valid when divisor | dividend (grlex leading terms peel).
inline MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw MathError("division by the zero polynomial");
  MultiPoly q(p.nvars(), p.has_param());
  MultiPoly r = p;
  const auto [dm, dc] = d.leading_term();
  while (!r.is_zero()) {
    const auto [rm, rc] = r.leading_term();
    Mono qm(rm.size());
    for (std::size_t i = 0; i < rm.size(); ++i) {
      if (rm[i] < dm[i]) throw InternalError("exact_divide: not divisible");
      qm[i] = rm[i] - dm[i];
    }
    MultiPoly qt(p.nvars(), p.has_param());
    qt.add_term(qm, rc / dc);
    q = q + qt;
    r = r - qt * d;
  }
  return q;
}

inline MultiPoly normalize_leading_one(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading_term().second);
}

inline MultiPoly var_power(std::size_t nx, bool param, std::size_t slot, unsigned e) {
  MultiPoly p(nx, param);
  Mono m(nx + (param ? 1 : 0), 0);
  m[slot] = e;
  p.add_term(m, Rational(1));
  return p;
}

/// Coefficients of p viewed in R[v]; each coefficient has v-exponent zero.
inline std::map<unsigned, MultiPoly> coeffs_in_var(const MultiPoly& p, std::size_t v) {
  std::map<unsigned, MultiPoly> out;
  for (const auto& [m, c] : p.terms()) {
    Mono mm = m;
    const unsigned k = mm[v];
    mm[v] = 0;
    auto it = out.find(k);
    if (it == out.end()) it = out.emplace(k, MultiPoly(p.nvars(), p.has_param())).first;
    it->second.add_term(mm, c);
  }
  return out;
}

inline MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

inline MultiPoly content_in_var(const MultiPoly& p, std::size_t v) {
  MultiPoly g(p.nvars(), p.has_param());
  for (const auto& [k, coeff] : coeffs_in_var(p, v)) g = gcd_impl(g, coeff);
  return g;
}

inline MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, std::size_t v) {
  const long db = b.degree_in(v);
  const auto bcoeffs = coeffs_in_var(b, v);
  const MultiPoly lb = bcoeffs.rbegin()->second;
  while (!a.is_zero()) {
    const long da = a.degree_in(v);
    if (da < db) break;
    const auto acoeffs = coeffs_in_var(a, v);
    const MultiPoly la = acoeffs.rbegin()->second;
    const MultiPoly shift =
        var_power(a.nvars(), a.has_param(), v, static_cast<unsigned>(da - db));
    a = lb * a - la * shift * b;
  }
  return a;
}

inline bool is_constant(const MultiPoly& p) {
  if (p.is_zero()) return false;
  const auto [m, c] = p.leading_term();
  for (unsigned e : m)
    if (e) return false;
  return p.term_count() == 1;
}

inline MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return normalize_leading_one(b);
  if (b.is_zero()) return normalize_leading_one(a);
  if (is_constant(a) || is_constant(b))
    return MultiPoly::constant(a.nvars(), a.has_param(), Rational(1));
  const std::size_t slots = a.slots();
  std::size_t v = slots;
  for (std::size_t i = slots; i-- > 0;)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      v = i;
      break;
    }
  if (v == slots) return MultiPoly::constant(a.nvars(), a.has_param(), Rational(1));
  if (a.degree_in(v) == 0) return gcd_impl(a, content_in_var(b, v));
  if (b.degree_in(v) == 0) return gcd_impl(content_in_var(a, v), b);

  const MultiPoly ca = content_in_var(a, v);
  const MultiPoly cb = content_in_var(b, v);
  const MultiPoly c = gcd_impl(ca, cb);
  MultiPoly A = exact_divide(a, ca);
  MultiPoly B = exact_divide(b, cb);
  while (!B.is_zero()) {
    MultiPoly R = pseudo_rem(A, B, v);
    A = std::move(B);
    if (R.is_zero()) {
      B = R;
    } else {
      B = exact_divide(R, content_in_var(R, v));
    }
  }
  return normalize_leading_one(c * A);
}

}  // namespace detail

/// Polynomial gcd over Q[x0..xn(,t)], normalized to leading coefficient 1 on
/// the grlex-leading monomial.
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  return detail::gcd_impl(a, b);
}

struct ContentResult {
  MultiPoly content;
  std::vector<MultiPoly> primitive;
};

/// Common polynomial divisor of a family plus the reduced entries, with
/// content * primitive[i] = input[i] exactly.
inline ContentResult content_and_primitive(const std::vector<MultiPoly>& ps) {
  if (ps.empty()) throw MathError("content of an empty family");
  MultiPoly g(ps.front().nvars(), ps.front().has_param());
  for (const auto& p : ps) g = detail::gcd_impl(g, p);
  if (g.is_zero()) throw MathError("content of an all-zero family");
  ContentResult out{g, {}};
  out.primitive.reserve(ps.size());
  for (const auto& p : ps)
    out.primitive.push_back(p.is_zero() ? p : detail::exact_divide(p, g));
  return out;
}

}  // namespace liefol

#endif
