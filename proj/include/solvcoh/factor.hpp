#ifndef SOLVCOH_FACTOR_HPP
#define SOLVCOH_FACTOR_HPP

#include "solvcoh/poly.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace solvcoh {

class UnsupportedFactor : public SolvcohError {
 public:
  using SolvcohError::SolvcohError;
};

struct PolyFactor {
  UniPoly factor;  // monic, irreducible over Q
  int multiplicity;
};

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) throw SolvcohError("divisors of zero requested");
  if (n > Integer("1000000000000")) throw UnsupportedFactor("integer too large for divisor enumeration");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Primitive integer polynomial proportional to p, positive leading coefficient.
inline std::vector<Integer> primitive_integer(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
  std::vector<Integer> v;
  for (const auto& c : p.coeffs()) v.push_back(Integer(c * l));
  Integer g = 0;
  for (const auto& c : v) g = gcd(g, c);
  for (auto& c : v) c /= g;
  if (v.back() < 0)
    for (auto& c : v) c = -c;
  return v;
}

inline Integer eval_int(const std::vector<Integer>& f, long x) {
  Integer r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
  return r;
}

/// Polynomial of degree ≤ n-1 through (xs[i], ys[i]).
inline UniPoly interpolate(const std::vector<long>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
  UniPoly r = UniPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) r = r * UniPoly(std::vector<Rational>{Rational(-xs[i]), Rational(1)}) + UniPoly::constant(dd[i]);
  return r;
}

inline std::optional<UniPoly> find_linear_factor(const UniPoly& f) {
  auto F = primitive_integer(f);
  if (F[0] == 0) return UniPoly::x();
  for (const auto& a : positive_divisors(F[0]))
    for (const auto& b : positive_divisors(F.back()))
      for (int s : {1, -1}) {
        Rational r = Rational(Integer(s * a), b);
        if (is_zero(f(r))) return UniPoly(std::vector<Rational>{-r, Rational(1)});
      }
  return std::nullopt;
}

/// Kronecker search for a monic rational factor of exact degree d.
inline std::optional<UniPoly> find_factor_of_degree(const UniPoly& f, int d) {
  auto F = primitive_integer(f);
  std::vector<std::pair<Integer, long>> pool;
  for (long x = -8; x <= 8; ++x) {
    Integer v = eval_int(F, x);
    if (v != 0) pool.push_back({abs(v), x});
  }
  std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
  if (static_cast<int>(pool.size()) < d + 1) return std::nullopt;
  std::vector<long> xs;
  std::vector<std::vector<Integer>> choices;
  double count = 1;
  for (int i = 0; i <= d; ++i) {
    xs.push_back(pool[i].second);
    auto divs = positive_divisors(eval_int(F, pool[i].second));
    std::vector<Integer> c;
    for (const auto& v : divs) {
      c.push_back(v);
      if (i > 0) c.push_back(-v);  // overall sign fixed at the first point
    }
    count *= static_cast<double>(c.size());
    choices.push_back(std::move(c));
  }
  if (count > 4e6) throw UnsupportedFactor("factor search space too large");
  std::vector<std::size_t> idx(d + 1, 0);
  std::vector<Integer> ys(d + 1);
  while (true) {
    for (int i = 0; i <= d; ++i) ys[i] = choices[i][idx[i]];
    UniPoly g = interpolate(xs, ys);
    if (g.degree() == d) {
      UniPoly m = g.monic();
      auto [q, r] = f.divmod(m);
      if (r.is_zero()) return m;
    }
    int i = 0;
    while (i <= d && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i > d) break;
  }
  return std::nullopt;
}

inline void split_squarefree(UniPoly f, std::vector<UniPoly>& out) {
  f = f.monic();
  while (f.degree() >= 1) {
    if (f.degree() == 1) {
      out.push_back(f);
      return;
    }
    if (auto l = find_linear_factor(f)) {
      out.push_back(*l);
      f = (f / *l).monic();
      continue;
    }
    bool found = false;
    for (int d = 2; 2 * d <= f.degree() && !found; ++d)
      if (auto g = find_factor_of_degree(f, d)) {
        split_squarefree(*g, out);
        f = (f / *g).monic();
        found = true;
      }
    if (!found) {
      out.push_back(f);
      return;
    }
  }
}

}  // namespace detail

/// Complete factorization over Q into monic irreducibles; the leading coefficient is dropped.
inline std::vector<PolyFactor> factor_over_q(const UniPoly& p) {
  std::vector<PolyFactor> out;
  if (p.degree() <= 0) return out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    std::vector<UniPoly> irr;
    detail::split_squarefree(parts[i], irr);
    for (auto& f : irr) out.push_back({f, static_cast<int>(i) + 1});
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.to_string() < b.factor.to_string();
  });
  return out;
}

}  // namespace solvcoh

#endif
