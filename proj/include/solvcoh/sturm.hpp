#ifndef SOLVCOH_STURM_HPP
#define SOLVCOH_STURM_HPP

#include "solvcoh/poly.hpp"
#include "solvcoh/rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace solvcoh {

enum class Relation { Greater, GreaterEq, Less, LessEq, NotEqual, Equal };

/// g(x) <rel> 0
struct PolyConstraint {
  UniPoly g;
  Relation rel;
};

inline PolyConstraint constrain(const UniPoly& g, Relation rel) { return {g, rel}; }
/// x <rel> c
inline PolyConstraint constrain_var(const Rational& c, Relation rel) {
  return {UniPoly::x() - UniPoly::constant(c), rel};
}

/// Root in the half-open interval (lo, hi], or exactly lo when exact is set.
struct RootInterval {
  Rational lo, hi;
  bool exact = false;
  double approx() const { return exact ? lo.get_d() : (lo.get_d() + hi.get_d()) / 2.0; }
};

struct SturmResult {
  bool satisfiable = false;
  std::vector<RootInterval> roots;      // all real roots of the squarefree part
  std::vector<RootInterval> witnesses;  // roots meeting every constraint
};

class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p) {
    if (p.is_zero()) throw SolvcohError("Sturm chain of the zero polynomial");
    chain_.push_back(p);
    if (p.degree() <= 0) return;
    chain_.push_back(p.derivative());
    while (true) {
      UniPoly r = chain_[chain_.size() - 2] % chain_.back();
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }
  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& q : chain_) {
      int s = sgn(q(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }
  /// Number of distinct real roots in (a, b] (p squarefree).
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
  const UniPoly& poly() const { return chain_.front(); }

 private:
  std::vector<UniPoly> chain_;
};

inline Rational cauchy_bound(const UniPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs_value(p.coeff(i) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

inline void refine_once(const SturmChain& sc, RootInterval& iv) {
  if (iv.exact) return;
  Rational mid = (iv.lo + iv.hi) / 2;
  if (sgn(sc.poly()(mid)) == 0 && sc.count(iv.lo, mid) == 1) {
    iv.lo = iv.hi = mid;
    iv.exact = true;
    return;
  }
  if (sc.count(iv.lo, mid) == 1)
    iv.hi = mid;
  else
    iv.lo = mid;
}

/// Isolating intervals for the real roots of the squarefree part of p, in increasing order.
inline std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw SolvcohError("root isolation of the zero polynomial");
  std::vector<RootInterval> out;
  UniPoly q = squarefree_part(p);
  if (q.degree() <= 0) return out;
  SturmChain sc(q);
  Rational b = cauchy_bound(q);
  std::vector<RootInterval> stack{{-b, b, false}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    int n = sc.count(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      if (sgn(q(iv.hi)) == 0) iv = {iv.hi, iv.hi, true};
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    stack.push_back({mid, iv.hi, false});
    stack.push_back({iv.lo, mid, false});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

/// Sign of g at the root of the squarefree q isolated by iv.
inline int sign_at_root(const UniPoly& q, RootInterval iv, const UniPoly& g) {
  if (iv.exact) return sgn(g(iv.lo));
  if (g.is_zero()) return 0;
  if (g.degree() == 0) return sgn(g.leading());
  UniPoly h = gcd(q, g);
  if (h.degree() > 0 && SturmChain(h).count(iv.lo, iv.hi) == 1) return 0;
  SturmChain sq(q);
  SturmChain sg(squarefree_part(g));
  while (sg.count(iv.lo, iv.hi) != 0 && !iv.exact) refine_once(sq, iv);
  if (iv.exact) return sgn(g(iv.lo));
  return sgn(g(iv.hi));
}

inline bool relation_holds(int s, Relation rel) {
  switch (rel) {
    case Relation::Greater: return s > 0;
    case Relation::GreaterEq: return s >= 0;
    case Relation::Less: return s < 0;
    case Relation::LessEq: return s <= 0;
    case Relation::NotEqual: return s != 0;
    case Relation::Equal: return s == 0;
  }
  return false;
}

/// Decides whether some real root of p meets all constraints.
inline SturmResult sturm_isolate(const UniPoly& p, const std::vector<PolyConstraint>& constraints) {
  if (p.is_zero()) throw SolvcohError("sturm_isolate on the zero polynomial");
  SturmResult res;
  UniPoly q = squarefree_part(p);
  res.roots = isolate_real_roots(q);
  for (const auto& iv : res.roots) {
    bool ok = true;
    for (const auto& c : constraints)
      if (!relation_holds(sign_at_root(q, iv, c.g), c.rel)) {
        ok = false;
        break;
      }
    if (ok) res.witnesses.push_back(iv);
  }
  res.satisfiable = !res.witnesses.empty();
  return res;
}

/// Narrows iv around its root of p until its width is below eps.
inline RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& eps) {
  SturmChain sc(squarefree_part(p));
  while (!iv.exact && iv.hi - iv.lo > eps) refine_once(sc, iv);
  return iv;
}

}  // namespace solvcoh

#endif
