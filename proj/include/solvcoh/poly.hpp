#ifndef SOLVCOH_POLY_HPP
#define SOLVCOH_POLY_HPP

#include "solvcoh/rational.hpp"

#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace solvcoh {

/// Dense univariate polynomial over a field T, coefficients stored low degree first.
/// The leading coefficient is nonzero unless the polynomial is zero (empty storage).
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
  static Poly monomial(const T& a, int deg) {
    std::vector<T> v(deg + 1, T(0));
    v[deg] = a;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalar_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> r = p.c_;
    for (auto& a : r) a = s * a;
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!detail::scalar_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw SolvcohError("polynomial division by zero");
    Poly q, r = *this;
    if (r.degree() < d.degree()) return {q, r};
    std::vector<T> qc(r.degree() - d.degree() + 1, T(0));
    T inv_lead = T(1) / d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int shift = r.degree() - d.degree();
      T f = r.leading() * inv_lead;
      qc[shift] = f;
      std::vector<T> rc = r.c_;
      for (int i = 0; i <= d.degree(); ++i) rc[i + shift] = rc[i + shift] - f * d.c_[i];
      rc.pop_back();
      r = Poly(std::move(rc));
    }
    return {Poly(std::move(qc)), r};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly monic() const {
    if (is_zero()) return *this;
    return (T(1) / leading()) * *this;
  }
  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = T(static_cast<long>(i)) * c_[i];
    return Poly(std::move(r));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      if (detail::scalar_is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << detail::scalar_to_string(c_[i]) << ")";
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> ext_gcd(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0 = Poly<T>::constant(T(1)), s1;
  Poly<T> t0, t1 = Poly<T>::constant(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1;
    Poly<T> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = T(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

template <class T>
Poly<T> squarefree_part(const Poly<T>& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

/// Yun's squarefree decomposition: p = lc * prod_i f_i^i, returned as f_1, f_2, ... (some may be 1).
template <class T>
std::vector<Poly<T>> squarefree_decomposition(const Poly<T>& p) {
  std::vector<Poly<T>> out;
  if (p.degree() <= 0) return out;
  Poly<T> a = p.monic();
  Poly<T> b = gcd(a, a.derivative());
  Poly<T> c = a / b;
  Poly<T> d = a.derivative() / b - c.derivative();
  while (c.degree() > 0) {
    Poly<T> f = gcd(c, d);
    out.push_back(f);
    c = c / f;
    d = d / f - c.derivative();
  }
  return out;
}

template <class T>
Poly<T> pow(const Poly<T>& p, int e) {
  Poly<T> r = Poly<T>::constant(T(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

using UniPoly = Poly<Rational>;

inline bool has_integer_coefficients(const UniPoly& p) {
  for (const auto& a : p.coeffs())
    if (!is_integer(a)) return false;
  return true;
}

}  // namespace solvcoh

#endif
