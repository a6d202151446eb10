#ifndef SOLVCOH_LATTICE_SYMBOLIC_HPP
#define SOLVCOH_LATTICE_SYMBOLIC_HPP

#include "solvcoh/lie_algebra.hpp"
#include "solvcoh/monodromy.hpp"
#include "solvcoh/mpoly.hpp"
#include "solvcoh/sturm.hpp"

#include <sstream>

namespace solvcoh {

using SRF = SymbolicRationalFunction;

struct LatticeSystemResult {
  bool satisfiable = false;
  UniPoly eliminant;  // polynomial in s after eliminating r
  UniPoly r_of_s;     // r as a polynomial in s
  std::vector<RootInterval> witnesses;
  std::string derivation;
};

namespace detail {
inline UniPoly to_univariate(const MPoly& p, std::size_t var) {
  std::vector<Rational> c;
  for (const auto& [e, coef] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw SolvcohError("polynomial is not univariate");
    std::size_t d = var < e.size() ? e[var] : 0;
    if (c.size() <= d) c.resize(d + 1, Rational(0));
    c[d] += coef;
  }
  return UniPoly(c);
}

/// Solves p = 0 for a variable occurring linearly with a constant coefficient.
inline MPoly solve_linear(const MPoly& p, std::size_t var) {
  Rational coef = 0;
  MPoly rest;
  for (const auto& [e, c] : p.terms()) {
    int d = var < e.size() ? e[var] : 0;
    if (d == 0) {
      rest = rest + MPoly::monomial(c, e);
    } else if (d == 1) {
      Exponent f = e;
      f[var] = 0;
      while (!f.empty() && f.back() == 0) f.pop_back();
      if (!f.empty()) throw SolvcohError("variable does not occur with a constant coefficient");
      coef += c;
    } else {
      throw SolvcohError("variable occurs non-linearly");
    }
  }
  if (is_zero(coef)) throw SolvcohError("variable does not occur");
  return rest.scaled(-1 / coef);
}
}  // namespace detail

/// (s²+r)/s = h1, (rs+1)/s = h2, r > 0, 0 < s ≤ r²/4, s ≠ r−1, s ≠ 1.
inline LatticeSystemResult lattice_system_check(long h1, long h2) {
  const std::size_t S = 0, R = 1;
  MPoly s = MPoly::var(S), r = MPoly::var(R);
  // cleared denominators, valid since s > 0
  MPoly e1 = s * s + r - MPoly(h1) * s;
  MPoly e2 = r * s + MPoly(1) - MPoly(h2) * s;
  MPoly r_expr = detail::solve_linear(e1, R);
  MPoly elim = e2.substitute(R, r_expr);
  LatticeSystemResult out;
  out.eliminant = detail::to_univariate(elim, S).monic();
  out.r_of_s = detail::to_univariate(r_expr, S);
  std::vector<std::string> names{"s", "r"};
  out.derivation = "r = " + r_expr.to_string(names) + "; eliminant " + out.eliminant.to_string("s");
  const UniPoly& rs = out.r_of_s;
  UniPoly x = UniPoly::x(), one = UniPoly::constant(Rational(1));
  std::vector<PolyConstraint> cons{
      constrain(rs, Relation::Greater),
      constrain(x, Relation::Greater),
      constrain(rs * rs - Rational(4) * x, Relation::GreaterEq),
      constrain(x - rs + one, Relation::NotEqual),
      constrain(x - one, Relation::NotEqual),
  };
  auto res = sturm_isolate(out.eliminant, cons);
  out.satisfiable = res.satisfiable;
  out.witnesses = res.witnesses;
  return out;
}

/// Monic polynomial Π (x − e) over distinct e.
inline Poly<SRF> product_of_distinct(const std::vector<SRF>& roots) {
  std::vector<SRF> seen;
  Poly<SRF> p = Poly<SRF>::constant(SRF(1));
  for (const auto& e : roots) {
    bool dup = false;
    for (const auto& s : seen)
      if (s == e) dup = true;
    if (dup) continue;
    seen.push_back(e);
    p = p * Poly<SRF>(std::vector<SRF>{-e, SRF(1)});
  }
  return p;
}

struct SymbolicLatticeReport {
  LatticeReport report;
  std::vector<std::string> min_poly_coefficients;  // in the exponential symbols
  std::vector<std::string> steps;
};

/// g6.11 with s = s1/s2 at t̄ = 2π s2: both rotations are trivial and M = diag(α², P, P, Q, Q),
/// P = e^{2π s2 p}, Q = e^{2π s2 q}, α = 1/(PQ), β = α(P+Q). Integrality of the minimal polynomial forces a = 0.
inline SymbolicLatticeReport g611_rotation_period_check(const LieAlgebra& g) {
  if (g.name != "g6.11") throw SolvcohError("check applies to g6.11 only");
  if (g.irrational_symbols.count("s")) throw SolvcohError("s is declared irrational; pass it as a rational symbol");
  Rational a = g.parameters.at("a");
  Rational s = g.parameters.at("s");
  Integer s2 = s.get_den();
  const std::vector<std::string> names{"P", "Q"};
  SRF P = SRF::var(0), Q = SRF::var(1);
  SRF alpha = SRF(1) / (P * Q);
  SRF beta = alpha * (P + Q);
  SymbolicLatticeReport out;
  // rotation angles 2π s2 and 2π s2 s = 2π s1
  auto mp = product_of_distinct({alpha * alpha, P, P, Q, Q});
  for (int i = 0; i <= mp.degree(); ++i) out.min_poly_coefficients.push_back(mp.coeff(i).to_string(names));
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) throw SolvcohError("symbolic identity failed: " + what);
    out.steps.push_back(what);
  };
  check(mp.degree() == 3, "t = 2*pi*" + s2.get_str() + " makes both rotations trivial; minimal polynomial has degree 3");
  check(mp.coeff(0) == -alpha, "x^0 coefficient = -alpha, so alpha in Z");
  check(mp.coeff(2) == -(alpha * alpha * alpha + beta) / alpha, "x^2 coefficient = -(alpha^3 + beta)/alpha = -(alpha^2 + beta/alpha), so beta/alpha in Z and beta in Z");
  check(mp.coeff(1) == (alpha * alpha * beta + SRF(1)) / alpha, "x^1 coefficient = (alpha^2 beta + 1)/alpha");
  check(mp.coeff(1) - alpha * beta - SRF(1) / alpha == SRF(0), "x^1 coefficient = alpha beta + 1/alpha with alpha beta in Z, so 1/alpha in Z");
  out.steps.push_back("alpha = e^(-2 pi s2 (p+q)) > 0 with alpha, 1/alpha in Z forces alpha = 1");
  out.steps.push_back("alpha = 1 means p + q = 0, i.e. a = -2(p+q) = 0");
  out.report.reason = "minimal polynomial of exp(2*pi*" + s2.get_str() + "*A) cannot have integer coefficients unless a = 0";
  if (is_zero(a)) {
    out.report.verdict = LatticeVerdict::NecessaryPass;
    out.report.reason = "a = 0: the integrality argument does not exclude this case";
  } else {
    out.report.verdict = LatticeVerdict::NecessaryFail;
  }
  return out;
}

}  // namespace solvcoh

#endif
