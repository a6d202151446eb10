#ifndef SOLVCOH_UNIRATIONAL_HPP
#define SOLVCOH_UNIRATIONAL_HPP

#include "solvcoh/poly.hpp"
#include "solvcoh/rational.hpp"

#include <string>

namespace solvcoh {

/// Element of Q(x), kept in lowest terms with a monic denominator.
class UniRationalFunction {
 public:
  UniRationalFunction() : num_(), den_(UniPoly::constant(Rational(1))) {}
  UniRationalFunction(long c) : num_(UniPoly::constant(Rational(c))), den_(UniPoly::constant(Rational(1))) {}
  UniRationalFunction(const Rational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(Rational(1))) {}
  UniRationalFunction(UniPoly n) : num_(std::move(n)), den_(UniPoly::constant(Rational(1))) {}
  UniRationalFunction(UniPoly n, UniPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  static UniRationalFunction x() { return UniRationalFunction(UniPoly::x()); }

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  UniRationalFunction operator-() const { return UniRationalFunction(-num_, den_); }
  friend UniRationalFunction operator+(const UniRationalFunction& a, const UniRationalFunction& b) {
    return UniRationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend UniRationalFunction operator-(const UniRationalFunction& a, const UniRationalFunction& b) { return a + (-b); }
  friend UniRationalFunction operator*(const UniRationalFunction& a, const UniRationalFunction& b) {
    return UniRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend UniRationalFunction operator/(const UniRationalFunction& a, const UniRationalFunction& b) {
    if (b.is_zero()) throw SolvcohError("division by zero in Q(x)");
    return UniRationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const UniRationalFunction& a, const UniRationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const UniRationalFunction& a, const UniRationalFunction& b) { return !(a == b); }

  Rational evaluate(const Rational& t) const {
    Rational d = den_(t);
    if (sgn(d) == 0) throw SolvcohError("evaluation at a pole");
    return num_(t) / d;
  }
  std::string to_string() const {
    if (den_.degree() == 0) return num_.to_string("t");
    return "(" + num_.to_string("t") + ")/(" + den_.to_string("t") + ")";
  }

 private:
  void reduce() {
    if (den_.is_zero()) throw SolvcohError("zero denominator in Q(x)");
    if (num_.is_zero()) {
      den_ = UniPoly::constant(Rational(1));
      return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    Rational l = den_.leading();
    if (l != 1) {
      Rational inv = Rational(1) / l;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }
  UniPoly num_, den_;
};

inline bool is_zero(const UniRationalFunction& f) { return f.is_zero(); }
inline std::string to_string(const UniRationalFunction& f) { return f.to_string(); }

}  // namespace solvcoh

#endif
