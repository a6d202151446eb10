#ifndef SOLVCOH_MONODROMY_HPP
#define SOLVCOH_MONODROMY_HPP

#include "solvcoh/almost_abelian.hpp"
#include "solvcoh/number_field.hpp"

#include <functional>
#include <random>

namespace solvcoh {

using KElement = NumberFieldElement;
using KMatrix = Matrix<KElement>;

class TranscendentalEntry : public SolvcohError {
 public:
  using SolvcohError::SolvcohError;
};

/// Exact value of e^{πx} supplied by the caller, or nothing.
using ExpSurrogate = std::function<std::optional<KElement>(const Rational& x)>;

inline KElement demote(const KElement& a) { return a.is_rational() ? KElement(a.rational_value()) : a; }

inline KMatrix to_k(const RationalMatrix& m) {
  KMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = KElement(m(i, j));
  return r;
}

inline std::optional<RationalMatrix> as_rational(const KMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational()) return std::nullopt;
      r(i, j) = m(i, j).rational_value();
    }
  return r;
}

inline std::optional<UniPoly> as_rational(const Poly<KElement>& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) {
    if (!x.is_rational()) return std::nullopt;
    c.push_back(x.rational_value());
  }
  return UniPoly(c);
}

struct Monodromy {
  Rational q;  // t̄ = qπ
  KMatrix M;
  bool unipotent_rescaled = false;  // M = E·exp(N), conjugate over R to E·exp(qπN)
  std::vector<std::string> notes;
};

/// exp(qπ·A) on the ideal, exact over a number field.
inline Monodromy monodromy(const AlmostAbelianPresentation& p, const Rational& q, const ExpSurrogate& surrogate = {}) {
  const std::size_t n = p.n();
  Monodromy out{q, KMatrix(n, n), false, {}};
  auto real_exp = [&](const Rational& lambda) -> KElement {
    Rational x = q * lambda;
    if (is_zero(x)) return KElement(1);
    if (surrogate)
      if (auto v = surrogate(x)) return *v;
    throw TranscendentalEntry("entry e^(" + x.get_str() + "*pi) needs an exact surrogate");
  };
  for (const auto& r : p.compact.reals) {
    if (!r.value) {
      if (is_zero(q)) {
        out.M = out.M + to_k(r.projector);
        continue;
      }
      throw TranscendentalEntry("real eigenvalues of " + r.factor.to_string() + " are irrational");
    }
    KElement e = real_exp(*r.value);
    out.M = out.M + e * to_k(r.projector);
  }
  for (const auto& r : p.compact.rotations) {
    if (!r.rational_frequency() && !is_zero(q))
      throw TranscendentalEntry("rotation frequency " + r.frequency_string() + " is irrational");
    Rational b = r.b ? *r.b : Rational(0);
    KElement e = real_exp(r.re);
    KElement c = demote(cos_pi(q * b)), s = demote(sin_pi(q * b));
    RationalMatrix Ci = (p.S - r.re * RationalMatrix::identity(n)) * r.projector;
    KMatrix block = c * to_k(r.projector) + (s / KElement(b)) * to_k(Ci);
    out.M = out.M + e * block;
  }
  if (!p.N.is_zero() && !is_zero(q)) {
    RationalMatrix u = RationalMatrix::identity(n), term = RationalMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
      term = Rational(1, static_cast<long>(k)) * (term * p.N);
      u = u + term;
    }
    out.M = out.M * to_k(u);
    out.unipotent_rescaled = true;
    out.notes.push_back("nilpotent part exponentiated as exp(N), conjugate over R to exp(t N)");
  }
  return out;
}

/// e^{π x_i} ↦ i-th root of f in its stem field.
inline ExpSurrogate root_surrogate(const UniPoly& f, const std::vector<Rational>& exponents, const std::string& name = "t") {
  auto roots = roots_in_field(f, stem_field(f, name));
  if (roots.size() != exponents.size()) throw SolvcohError("surrogate needs one exponent per root");
  std::map<Rational, KElement> table;
  for (std::size_t i = 0; i < roots.size(); ++i) table.emplace(exponents[i], roots[i]);
  return [table](const Rational& x) -> std::optional<KElement> {
    auto it = table.find(x);
    if (it == table.end()) return std::nullopt;
    return it->second;
  };
}

inline RationalMatrix companion(const UniPoly& f) {
  UniPoly m = f.monic();
  const std::size_t d = m.degree();
  RationalMatrix c(d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -m.coeff(static_cast<int>(i));
  return c;
}

inline RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  RationalMatrix r(n, n);
  std::size_t o = 0;
  for (const auto& b : blocks) {
    r.set_block(o, o, b);
    o += b.rows();
  }
  return r;
}

/// Invertible P with M·P = P·E, searched in the solution space of the Sylvester equation.
inline std::optional<KMatrix> find_conjugator(const KMatrix& M, const KMatrix& E, unsigned seed = 1) {
  const std::size_t n = M.rows();
  if (E.rows() != n || !M.is_square() || !E.is_square()) return std::nullopt;
  KMatrix L(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        L(i * n + j, k * n + j) = L(i * n + j, k * n + j) + M(i, k);
        L(i * n + j, i * n + k) = L(i * n + j, i * n + k) - E(k, j);
      }
  auto ker = kernel(L);
  if (ker.empty()) return std::nullopt;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int attempt = 0; attempt < 40; ++attempt) {
    KMatrix P(n, n);
    for (const auto& v : ker) {
      KElement c = attempt == 0 ? KElement(1) : KElement(d(rng));
      for (std::size_t t = 0; t < n * n; ++t) P(t / n, t % n) = P(t / n, t % n) + c * v[t];
    }
    if (rank(P) == n) return P;
  }
  return std::nullopt;
}

enum class LatticeVerdict { NecessaryFail, NecessaryPass, VerifiedByWitness };

inline std::string to_string(LatticeVerdict v) {
  switch (v) {
    case LatticeVerdict::NecessaryFail: return "necessary-fail";
    case LatticeVerdict::NecessaryPass: return "necessary-pass";
    default: return "verified-by-witness";
  }
}

struct LatticeReport {
  LatticeVerdict verdict = LatticeVerdict::NecessaryFail;
  std::optional<UniPoly> char_poly, min_poly;
  std::string reason;
  std::optional<RationalMatrix> E;  // integer matrix
  std::optional<KMatrix> P;         // M P = P E
};

/// Rational canonical form ⊕ companion(d_j) from ranks of φ(M)^e over the field; empty if not defined over Q.
inline std::optional<RationalMatrix> rational_canonical_form(const KMatrix& M, const UniPoly& cp) {
  const std::size_t n = M.rows();
  std::vector<std::vector<std::size_t>> parts;  // block sizes per factor, descending
  auto fs = factor_over_q(cp);
  std::size_t k = 0;
  for (const auto& pf : fs) {
    Poly<KElement> phi;
    {
      std::vector<KElement> c;
      for (const auto& x : pf.factor.coeffs()) c.push_back(KElement(x));
      phi = Poly<KElement>(c);
    }
    KMatrix P = eval_poly(phi, M), Pe = KMatrix::identity(n);
    const std::size_t deg = pf.factor.degree();
    std::vector<std::size_t> ge;  // blocks of size ≥ e
    std::size_t prev = n;
    for (int e = 1; e <= pf.multiplicity; ++e) {
      Pe = Pe * P;
      std::size_t r = rank(Pe);
      if ((prev - r) % deg) return std::nullopt;
      ge.push_back((prev - r) / deg);
      prev = r;
    }
    std::vector<std::size_t> sizes;
    for (std::size_t e = ge.size(); e-- > 0;) {
      std::size_t exact = ge[e] - (e + 1 < ge.size() ? ge[e + 1] : 0);
      for (std::size_t t = 0; t < exact; ++t) sizes.push_back(e + 1);
    }
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    if (total != static_cast<std::size_t>(pf.multiplicity)) return std::nullopt;
    k = std::max(k, sizes.size());
    parts.push_back(sizes);
  }
  std::vector<RationalMatrix> blocks;
  for (std::size_t j = k; j-- > 0;) {  // smallest invariant factor first
    UniPoly d = UniPoly::constant(Rational(1));
    for (std::size_t f = 0; f < fs.size(); ++f)
      if (j < parts[f].size()) d = d * pow(fs[f].factor, static_cast<int>(parts[f][j]));
    if (d.degree() > 0) blocks.push_back(companion(d));
  }
  return block_diagonal(blocks);
}

inline bool is_integer_matrix(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

/// Integrality of char/min polynomials, then an integer conjugate: supplied, M itself, companion or rational canonical form.
inline LatticeReport lattice_integrality(const KMatrix& M, const std::optional<RationalMatrix>& witness = std::nullopt,
                                         const std::optional<KMatrix>& conjugator = std::nullopt) {
  LatticeReport rep;
  auto cp = as_rational(char_poly(M));
  auto mp = as_rational(min_poly(M));
  rep.char_poly = cp;
  rep.min_poly = mp;
  if (!cp || !has_integer_coefficients(*cp)) {
    rep.reason = "characteristic polynomial does not have integer coefficients";
    return rep;
  }
  if (!mp || !has_integer_coefficients(*mp)) {
    rep.reason = "minimal polynomial does not have integer coefficients";
    return rep;
  }
  if (abs_value(cp->coeff(0)) != 1) {
    rep.reason = "determinant is not a unit";
    return rep;
  }
  rep.verdict = LatticeVerdict::NecessaryPass;
  auto try_witness = [&](const RationalMatrix& E, const std::optional<KMatrix>& given, const std::string& how) {
    if (!is_integer_matrix(E)) return false;
    KMatrix Ek = to_k(E);
    std::optional<KMatrix> P = given ? given : find_conjugator(M, Ek);
    if (!P || rank(*P) != M.rows() || !(M * *P == *P * Ek)) return false;
    rep.verdict = LatticeVerdict::VerifiedByWitness;
    rep.E = E;
    rep.P = P;
    rep.reason = how;
    return true;
  };
  if (witness) {
    if (try_witness(*witness, conjugator, "supplied integer witness verified")) return rep;
    rep.reason = "supplied witness rejected";
  }
  if (auto r = as_rational(M); r && is_integer_matrix(*r)) {
    rep.verdict = LatticeVerdict::VerifiedByWitness;
    rep.E = *r;
    rep.P = KMatrix::identity(M.rows());
    rep.reason = "monodromy is an integer matrix";
    return rep;
  }
  if (*mp == *cp && try_witness(companion(*cp), std::nullopt, "companion matrix of the characteristic polynomial")) return rep;
  auto rcf = rational_canonical_form(M, *cp);
  if (!rcf) {
    rep.verdict = LatticeVerdict::NecessaryFail;
    rep.reason = "elementary divisors are not defined over Q";
    return rep;
  }
  if (try_witness(*rcf, std::nullopt, "rational canonical form")) return rep;
  if (rep.reason.empty()) rep.reason = "integrality conditions hold; no conjugator found";
  return rep;
}

}  // namespace solvcoh

#endif
