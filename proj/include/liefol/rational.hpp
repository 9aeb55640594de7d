#ifndef LIEFOL_RATIONAL_HPP
#define LIEFOL_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "errors.hpp"

namespace liefol {

/// Arbitrary-precision rational. The GMP backend keeps every value in
/// canonical form: gcd(|num|, den) = 1 and den >= 1.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p", "-p" or "p/q". Rejects zero denominators before GMP sees them.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return Rational(num) / Rational(den);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("invalid rational literal '" + s + "'");
  }
}

}  // namespace liefol

#endif
