#ifndef SOLVCOH_RATIONAL_HPP
#define SOLVCOH_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace solvcoh {

/// Arbitrary-precision rational, always kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

class SolvcohError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw SolvcohError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or an integer literal; throws on malformed input.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw SolvcohError("malformed rational literal '" + text + "'");
  if (q.get_den() == 0) throw SolvcohError("rational with zero denominator '" + text + "'");
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational abs_value(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

/// Exact square root when q is the square of a rational.
inline bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

namespace detail {
// unqualified calls so overloads for other scalar types are found by ADL at instantiation
template <class T>
bool scalar_is_zero(const T& x) {
  return is_zero(x);
}
template <class T>
std::string scalar_to_string(const T& x) {
  return to_string(x);
}
}  // namespace detail

}  // namespace solvcoh

#endif
