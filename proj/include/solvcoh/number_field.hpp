#ifndef SOLVCOH_NUMBER_FIELD_HPP
#define SOLVCOH_NUMBER_FIELD_HPP

#include "solvcoh/poly.hpp"
#include "solvcoh/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <string>

namespace solvcoh {

/// Q[x]/(m) for a monic irreducible m, with a chosen complex embedding of x.
struct NumberField {
  UniPoly modulus;
  std::string name;
  std::complex<double> generator_value;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field. A null field means a rational constant, compatible with any field.
class NumberFieldElement {
 public:
  NumberFieldElement() = default;
  NumberFieldElement(long a) : rep_(UniPoly::constant(Rational(a))) {}
  NumberFieldElement(const Rational& a) : rep_(UniPoly::constant(a)) {}
  NumberFieldElement(NumberFieldPtr f, UniPoly rep) : field_(std::move(f)), rep_(std::move(rep)) { reduce(); }

  static NumberFieldElement generator(const NumberFieldPtr& f) { return NumberFieldElement(f, UniPoly::x()); }

  const NumberFieldPtr& field() const { return field_; }
  const UniPoly& rep() const { return rep_; }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const {
    if (!is_rational()) throw SolvcohError("number field element is not rational");
    return rep_.coeff(0);
  }

  std::complex<double> approx() const {
    std::complex<double> g = field_ ? field_->generator_value : std::complex<double>(0.0);
    std::complex<double> acc(0.0);
    for (int i = rep_.degree(); i >= 0; --i) acc = acc * g + std::complex<double>(rep_.coeff(i).get_d());
    return acc;
  }

  NumberFieldElement operator-() const { return NumberFieldElement(field_, -rep_); }
  friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
    return NumberFieldElement(join(a, b), a.rep_ + b.rep_);
  }
  friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
    return NumberFieldElement(join(a, b), a.rep_ - b.rep_);
  }
  friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
    return NumberFieldElement(join(a, b), a.rep_ * b.rep_);
  }
  NumberFieldElement inverse() const {
    if (rep_.is_zero()) throw SolvcohError("number field division by zero");
    if (is_rational()) return NumberFieldElement(field_, UniPoly::constant(Rational(1) / rep_.coeff(0)));
    auto [g, s, t] = ext_gcd(rep_, field_->modulus);
    if (g.degree() != 0) throw SolvcohError("modulus of " + field_->name + " is reducible");
    return NumberFieldElement(field_, s);
  }
  friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
    return a * b.inverse();
  }
  NumberFieldElement& operator+=(const NumberFieldElement& o) { return *this = *this + o; }
  NumberFieldElement& operator-=(const NumberFieldElement& o) { return *this = *this - o; }
  NumberFieldElement& operator*=(const NumberFieldElement& o) { return *this = *this * o; }
  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const NumberFieldElement& a, const NumberFieldElement& b) { return !(a.rep_ == b.rep_); }

 private:
  static NumberFieldPtr join(const NumberFieldElement& a, const NumberFieldElement& b) {
    if (!a.field_) return b.field_;
    if (!b.field_ || a.field_ == b.field_) return a.field_;
    if (a.field_->modulus == b.field_->modulus) return a.field_;
    throw SolvcohError("mixing elements of " + a.field_->name + " and " + b.field_->name);
  }
  void reduce() {
    if (field_ && rep_.degree() >= field_->modulus.degree()) rep_ = rep_ % field_->modulus;
  }
  NumberFieldPtr field_;
  UniPoly rep_;
};

inline bool is_zero(const NumberFieldElement& a) { return a.rep().is_zero(); }
inline std::string to_string(const NumberFieldElement& a) {
  if (a.is_rational()) return to_string(a.rational_value());
  return a.rep().to_string(a.field() ? a.field()->name.substr(0, 1) : "z");
}

/// Q(zeta_n) with zeta_n = exp(2 pi i / n); the modulus is the n-th cyclotomic polynomial.
inline NumberFieldPtr cyclotomic_field(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<UniPoly> phi(n + 1);
  for (int k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    UniPoly p = UniPoly::monomial(Rational(1), k) - UniPoly::constant(Rational(1));
    for (int d = 1; d < k; ++d)
      if (k % d == 0) p = p / phi[d];
    phi[k] = p;
  }
  auto f = std::make_shared<NumberField>();
  f->modulus = phi[n];
  f->name = "z" + std::to_string(n);
  f->generator_value = std::polar(1.0, 2.0 * 3.14159265358979323846 / n);
  return f;
}

inline const NumberFieldPtr& default_field() {
  static const NumberFieldPtr f = cyclotomic_field(24);
  return f;
}

/// zeta_24^k in the default field.
inline NumberFieldElement zeta24_power(long k) {
  k %= 24;
  if (k < 0) k += 24;
  return NumberFieldElement(default_field(), UniPoly::monomial(Rational(1), static_cast<int>(k)));
}

inline long twelfths(const Rational& q) {
  Rational k = q * 12;
  if (!is_integer(k)) throw SolvcohError("angle " + to_string(q) + "*pi is not a multiple of pi/12");
  return k.get_num().get_si();
}

/// cos(q pi) for q with denominator dividing 12.
inline NumberFieldElement cos_pi(const Rational& q) {
  long k = twelfths(q);
  return (zeta24_power(k) + zeta24_power(-k)) * NumberFieldElement(Rational(1, 2));
}

/// sin(q pi) for q with denominator dividing 12.
inline NumberFieldElement sin_pi(const Rational& q) {
  long k = twelfths(q);
  return (zeta24_power(k) - zeta24_power(-k)) / (NumberFieldElement(2) * zeta24_power(6));
}

/// All complex roots of a squarefree polynomial (Durand-Kerner, long double).
inline std::vector<std::complex<long double>> complex_roots(const UniPoly& f) {
  UniPoly m = f.monic();
  const int d = m.degree();
  std::vector<std::complex<long double>> z(d);
  for (int i = 0; i < d; ++i) z[i] = std::pow(std::complex<long double>(0.4L, 0.9L), i);
  auto ev = [&](std::complex<long double> x) {
    std::complex<long double> r = 0;
    for (int i = d; i >= 0; --i) r = r * x + static_cast<long double>(m.coeff(i).get_d());
    return r;
  };
  for (int it = 0; it < 2000; ++it) {
    long double delta = 0;
    for (int i = 0; i < d; ++i) {
      std::complex<long double> den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[i] - z[j];
      auto step = ev(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-18L) break;
  }
  return z;
}

/// Q[x]/(f) embedded at the root of f with the largest real part.
inline NumberFieldPtr stem_field(const UniPoly& f, const std::string& name) {
  auto z = complex_roots(f);
  auto best = *std::max_element(z.begin(), z.end(), [](auto a, auto b) { return a.real() < b.real(); });
  auto k = std::make_shared<NumberField>();
  k->modulus = f.monic();
  k->name = name;
  k->generator_value = std::complex<double>(static_cast<double>(best.real()), static_cast<double>(best.imag()));
  return k;
}

namespace detail {
inline Rational rationalize(long double x, long max_den = 100000) {
  // continued fraction convergents
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double r = x;
  for (int i = 0; i < 40; ++i) {
    long double a = std::floor(r);
    Integer ai(static_cast<double>(a));
    Integer h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::fabs(r - a) < 1e-15L) break;
    r = 1 / (r - a);
  }
  return Rational(h1, k1);
}
}  // namespace detail

/// Roots of f lying in K = Q[x]/(g), found numerically through the embeddings and verified exactly.
inline std::vector<NumberFieldElement> roots_in_field(const UniPoly& f, const NumberFieldPtr& K) {
  auto gz = complex_roots(K->modulus);
  auto fz = complex_roots(f);
  const int d = K->modulus.degree();
  std::vector<NumberFieldElement> out;
  auto is_new = [&](const NumberFieldElement& e) {
    for (const auto& o : out)
      if (is_zero(o - e)) return false;
    return true;
  };
  // images of the generator's conjugates: try every assignment g-root i -> f-root perm[i]
  std::vector<int> perm(d, 0);
  const int m = static_cast<int>(fz.size());
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      // Vandermonde solve  Σ_j c_j gz[i]^j = fz[perm[i]]
      std::vector<std::vector<std::complex<long double>>> a(d, std::vector<std::complex<long double>>(d + 1));
      for (int r = 0; r < d; ++r) {
        std::complex<long double> pw = 1;
        for (int c = 0; c < d; ++c, pw *= gz[r]) a[r][c] = pw;
        a[r][d] = fz[perm[r]];
      }
      for (int c = 0; c < d; ++c) {
        int piv = c;
        for (int r = c + 1; r < d; ++r)
          if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        if (std::abs(a[c][c]) < 1e-30L) return;
        for (int r = 0; r < d; ++r) {
          if (r == c) continue;
          auto fct = a[r][c] / a[c][c];
          for (int k = c; k <= d; ++k) a[r][k] -= fct * a[c][k];
        }
      }
      std::vector<Rational> coeffs;
      for (int c = 0; c < d; ++c) {
        auto v = a[c][d] / a[c][c];
        if (std::fabs(v.imag()) > 1e-8L) return;
        coeffs.push_back(detail::rationalize(v.real()));
      }
      NumberFieldElement e(K, UniPoly(coeffs));
      NumberFieldElement val(0);
      for (int i2 = f.degree(); i2 >= 0; --i2) val = val * e + NumberFieldElement(f.coeff(i2));
      if (is_zero(val) && is_new(e)) out.push_back(e);
      return;
    }
    for (int j = 0; j < m; ++j) {
      perm[i] = j;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace solvcoh

#endif
