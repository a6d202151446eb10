#ifndef SOLVCOH_MPOLY_HPP
#define SOLVCOH_MPOLY_HPP

#include "solvcoh/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace solvcoh {

using Exponent = std::vector<int>;

/// Graded lexicographic order on exponent vectors, missing entries read as zero.
struct DegLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      int x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
      if (x != y) return x < y;
    }
    return false;
  }
};

/// Multivariate polynomial over Q in variables indexed 0, 1, ...
class MPoly {
 public:
  using Terms = std::map<Exponent, Rational, DegLex>;

  MPoly() = default;
  MPoly(long c) { add_term({}, Rational(c)); }
  MPoly(const Rational& c) { add_term({}, c); }
  static MPoly var(std::size_t i, int power = 1) {
    Exponent e(i + 1, 0);
    e[i] = power;
    MPoly p;
    p.add_term(e, Rational(1));
    return p;
  }
  static MPoly monomial(const Rational& c, Exponent e) {
    MPoly p;
    p.add_term(std::move(e), c);
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
  Rational constant_value() const {
    auto it = t_.find(Exponent{});
    return it == t_.end() ? Rational(0) : it->second;
  }
  bool is_monomial() const { return t_.size() == 1; }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  std::size_t num_vars() const {
    std::size_t n = 0;
    for (const auto& [e, c] : t_) n = std::max(n, e.size());
    return n;
  }
  /// Leading term in deglex.
  const std::pair<const Exponent, Rational>& leading() const { return *t_.rbegin(); }

  void add_term(Exponent e, const Rational& c) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    if (sgn(c) == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (sgn(it->second) == 0) t_.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        Exponent e(std::max(ea.size(), eb.size()), 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a.t_ == b.t_); }

  MPoly scaled(const Rational& s) const {
    MPoly r;
    for (const auto& [e, c] : t_) r.add_term(e, c * s);
    return r;
  }

  /// Positive rational q such that this / q has coprime integer coefficients.
  Rational content() const {
    Integer g = 0, l = 1;
    for (const auto& [e, c] : t_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    if (g == 0) return Rational(1);
    Rational q(g, l);
    q.canonicalize();
    return q;
  }

  /// Componentwise minimum exponent over all terms.
  Exponent monomial_gcd() const {
    if (t_.empty()) return {};
    Exponent g = t_.begin()->first;
    for (const auto& [e, c] : t_) {
      g.resize(std::min(g.size(), e.size()));
      for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
    }
    while (!g.empty() && g.back() == 0) g.pop_back();
    return g;
  }
  MPoly divide_monomial(const Exponent& m) const {
    MPoly r;
    for (const auto& [e, c] : t_) {
      Exponent d = e;
      for (std::size_t i = 0; i < m.size(); ++i) d[i] -= m[i];
      r.add_term(std::move(d), c);
    }
    return r;
  }

  MPoly pow(int n) const {
    MPoly r(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  /// Replaces variable i by q.
  MPoly substitute(std::size_t i, const MPoly& q) const {
    MPoly r;
    std::vector<MPoly> powers{MPoly(1)};
    for (const auto& [e, c] : t_) {
      int k = i < e.size() ? e[i] : 0;
      while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * q);
      Exponent rest = e;
      if (i < rest.size()) rest[i] = 0;
      r += MPoly::monomial(c, rest) * powers[k];
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& x) const {
    Rational s = 0;
    for (const auto& [e, c] : t_) {
      Rational m = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m *= x.at(i);
      s += m;
    }
    return s;
  }
  double evaluate_double(const std::vector<double>& x) const {
    double s = 0;
    for (const auto& [e, c] : t_) {
      double m = c.get_d();
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m *= x.at(i);
      s += m;
    }
    return s;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational a = c;
      if (!first) {
        os << (sgn(a) < 0 ? " - " : " + ");
        a = abs_value(a);
      }
      first = false;
      bool unit = e.empty() ? false : (a == 1 || a == -1);
      if (!unit) os << a.get_str();
      else if (a == -1) os << "-";
      bool star = !unit;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (star) os << "*";
        star = true;
        os << (i < names.size() ? names[i] : "x" + std::to_string(i));
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  Terms t_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }
inline std::string to_string(const MPoly& p) { return p.to_string(); }

/// Quotient a / b when b divides a exactly; throws otherwise.
inline MPoly exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw SolvcohError("division by the zero polynomial");
  const auto& [lb, cb] = b.leading();
  MPoly q, r = a;
  while (!r.is_zero()) {
    const auto& [lr, cr] = r.leading();
    Exponent e(std::max(lr.size(), lb.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = (i < lr.size() ? lr[i] : 0) - (i < lb.size() ? lb[i] : 0);
      if (e[i] < 0) throw SolvcohError("polynomial division is not exact");
    }
    MPoly t = MPoly::monomial(cr / cb, e);
    q += t;
    r -= t * b;
  }
  return q;
}

/// Quotient of multivariate polynomials, normalised by content and common monomial factors.
class SymbolicRationalFunction {
 public:
  SymbolicRationalFunction() : num_(0), den_(1) {}
  SymbolicRationalFunction(long c) : num_(c), den_(1) {}
  SymbolicRationalFunction(const Rational& c) : num_(c), den_(1) {}
  SymbolicRationalFunction(MPoly n) : num_(std::move(n)), den_(1) {}
  SymbolicRationalFunction(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) { normalise(); }

  static SymbolicRationalFunction var(std::size_t i) { return SymbolicRationalFunction(MPoly::var(i)); }

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  SymbolicRationalFunction operator-() const { return SymbolicRationalFunction(-num_, den_); }
  friend SymbolicRationalFunction operator+(const SymbolicRationalFunction& a, const SymbolicRationalFunction& b) {
    if (a.den_ == b.den_) return SymbolicRationalFunction(a.num_ + b.num_, a.den_);
    return SymbolicRationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend SymbolicRationalFunction operator-(const SymbolicRationalFunction& a, const SymbolicRationalFunction& b) {
    return a + (-b);
  }
  friend SymbolicRationalFunction operator*(const SymbolicRationalFunction& a, const SymbolicRationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return SymbolicRationalFunction();
    return SymbolicRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend SymbolicRationalFunction operator/(const SymbolicRationalFunction& a, const SymbolicRationalFunction& b) {
    if (b.is_zero()) throw SolvcohError("symbolic division by an identically zero function");
    return SymbolicRationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  SymbolicRationalFunction& operator+=(const SymbolicRationalFunction& o) { return *this = *this + o; }
  SymbolicRationalFunction& operator-=(const SymbolicRationalFunction& o) { return *this = *this - o; }
  SymbolicRationalFunction& operator*=(const SymbolicRationalFunction& o) { return *this = *this * o; }
  /// Exact equality by cross multiplication.
  friend bool operator==(const SymbolicRationalFunction& a, const SymbolicRationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const SymbolicRationalFunction& a, const SymbolicRationalFunction& b) { return !(a == b); }

  SymbolicRationalFunction substitute(std::size_t i, const MPoly& q) const {
    return SymbolicRationalFunction(num_.substitute(i, q), den_.substitute(i, q));
  }
  SymbolicRationalFunction substitute(std::size_t i, const SymbolicRationalFunction& q) const {
    // homogenise numerator and denominator by den(q)^max degree in variable i
    auto degree_in = [i](const MPoly& p) {
      int d = 0;
      for (const auto& [e, c] : p.terms()) d = std::max(d, i < e.size() ? e[i] : 0);
      return d;
    };
    int d = std::max(degree_in(num_), degree_in(den_));
    auto lift = [&](const MPoly& p) {
      MPoly r;
      for (const auto& [e, c] : p.terms()) {
        int k = i < e.size() ? e[i] : 0;
        Exponent rest = e;
        if (i < rest.size()) rest[i] = 0;
        r += MPoly::monomial(c, rest) * q.num_.pow(k) * q.den_.pow(d - k);
      }
      return r;
    };
    return SymbolicRationalFunction(lift(num_), lift(den_));
  }
  Rational evaluate(const std::vector<Rational>& x) const {
    Rational d = den_.evaluate(x);
    if (sgn(d) == 0) throw SolvcohError("symbolic evaluation at a pole");
    return num_.evaluate(x) / d;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (den_ == MPoly(1)) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
  }

 private:
  void normalise() {
    if (den_.is_zero()) throw SolvcohError("symbolic rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = MPoly(1);
      return;
    }
    Exponent gn = num_.monomial_gcd(), gd = den_.monomial_gcd();
    Exponent g(std::min(gn.size(), gd.size()));
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(gn[i], gd[i]);
    if (!g.empty()) {
      num_ = num_.divide_monomial(g);
      den_ = den_.divide_monomial(g);
    }
    Rational c = den_.content();
    if (sgn(den_.leading().second) < 0) c = -c;
    if (c != 1) {
      Rational inv = Rational(1) / c;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
    // a constant multiple relation between num and den collapses to a constant
    if (!den_.is_constant() && num_.terms().size() == den_.terms().size()) {
      Rational ratio = num_.leading().second / den_.leading().second;
      if (num_ == den_.scaled(ratio)) {
        num_ = MPoly(ratio);
        den_ = MPoly(1);
      }
    }
  }
  MPoly num_, den_;
};

inline bool is_zero(const SymbolicRationalFunction& f) { return f.is_zero(); }
inline std::string to_string(const SymbolicRationalFunction& f) { return f.to_string(); }

}  // namespace solvcoh

#endif
