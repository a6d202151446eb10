#ifndef SOLVCOH_ALMOST_ABELIAN_HPP
#define SOLVCOH_ALMOST_ABELIAN_HPP

#include "solvcoh/factor.hpp"
#include "solvcoh/lie_algebra.hpp"
#include "solvcoh/matrix.hpp"
#include "solvcoh/sturm.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace solvcoh {

/// Index e such that the remaining basis vectors span an abelian ideal.
inline std::optional<std::size_t> find_acting_index(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t e = n; e-- > 0;) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (i == e) continue;
      if (!is_zero(g.structure_constant(i, e, e))) ok = false;
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (j != e && !g.bracket_is_zero(i, j)) ok = false;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

struct JordanChevalley {
  RationalMatrix S, N;
};

/// Newton iteration S ← S − p(S) p'(S)^{-1} with p the squarefree part of the characteristic polynomial.
inline JordanChevalley jordan_chevalley(const RationalMatrix& A) {
  if (!A.is_square()) throw SolvcohError("Jordan-Chevalley decomposition needs a square matrix");
  UniPoly p = squarefree_part(char_poly(A));
  UniPoly dp = p.derivative();
  RationalMatrix S = A;
  for (int it = 0; it < 64; ++it) {
    RationalMatrix ps = eval_poly(p, S);
    if (ps.is_zero()) return {S, A - S};
    S = S - ps * inverse(eval_poly(dp, S));
  }
  throw SolvcohError("Jordan-Chevalley iteration did not converge");
}

/// Eigenvalues a ± b i on one primary component of S.
struct RotationBlock {
  UniPoly factor;                 // x² − 2a x + a² + b²
  Rational re;                    // a
  Rational b_squared;             // b²
  std::optional<Rational> b;      // b ≥ 0 when rational
  std::optional<std::string> symbol;  // declared-irrational parameter standing for b
  std::size_t multiplicity = 0;   // number of 2-dim blocks
  RationalMatrix projector;
  bool rational_frequency() const { return b.has_value() && !symbol; }
  std::string frequency_string() const {
    if (symbol) return *symbol;
    if (b) return b->get_str();
    return "sqrt(" + b_squared.get_str() + ")";
  }
};

/// Real-rooted primary component of S.
struct RealBlock {
  UniPoly factor;
  std::optional<Rational> value;  // when the factor is linear
  std::size_t multiplicity = 0;
  RationalMatrix projector;
};

struct CompactPart {
  RationalMatrix C;
  std::vector<RotationBlock> rotations;
  std::vector<RealBlock> reals;
};

/// Compact part of a semisimple matrix: S − aI on each non-real quadratic component, 0 elsewhere.
inline CompactPart compact_part(const RationalMatrix& S, const LieAlgebra* source = nullptr) {
  const std::size_t n = S.rows();
  UniPoly m = min_poly(S);
  auto factors = factor_over_q(m);
  CompactPart out{RationalMatrix(n, n), {}, {}};
  for (const auto& f : factors)
    if (f.multiplicity != 1) throw SolvcohError("compact part requires a semisimple matrix");
  for (const auto& pf : factors) {
    const UniPoly& f = pf.factor;
    UniPoly cof = m / f;
    auto [gg, s, t] = ext_gcd(cof, f);
    (void)t;
    UniPoly e = (cof * s * UniPoly::constant(Rational(1) / gg.leading())) % m;
    RationalMatrix E = eval_poly(e, S);
    std::size_t dim = rank(E);
    if (f.degree() == 2) {
      Rational a = -f.coeff(1) / 2;
      Rational b2 = f.coeff(0) - a * a;
      if (sgn(b2) > 0) {
        RotationBlock rb{f, a, b2, std::nullopt, std::nullopt, dim / 2, E};
        Rational root;
        if (rational_sqrt(b2, root)) {
          rb.b = abs_value(root);
          if (source)
            for (const auto& name : source->irrational_symbols) {
              auto it = source->parameters.find(name);
              if (it != source->parameters.end() && abs_value(it->second) == *rb.b) rb.symbol = name;
            }
        }
        out.C = out.C + (S - a * RationalMatrix::identity(n)) * E;
        out.rotations.push_back(std::move(rb));
        continue;
      }
    }
    if (f.degree() >= 2 && static_cast<int>(isolate_real_roots(f).size()) != f.degree())
      throw UnsupportedFactor("irreducible factor " + f.to_string() + " of degree >= 3 with non-real roots");
    RealBlock rb{f, std::nullopt, dim / static_cast<std::size_t>(f.degree()), E};
    if (f.degree() == 1) rb.value = -f.coeff(0);
    out.reals.push_back(std::move(rb));
  }
  return out;
}

/// g = R X_e ⋉_A R^n with A's column i holding [X_{ideal[i]}, X_e].
struct AlmostAbelianPresentation {
  LieAlgebra g;
  std::size_t acting = 0;
  std::vector<std::size_t> ideal;
  RationalMatrix A, S, N, C;
  CompactPart compact;

  std::size_t n() const { return ideal.size(); }
  /// Compact part on blocks whose frequency is a genuine rational (declared-irrational blocks excluded).
  RationalMatrix rational_compact_part() const {
    RationalMatrix c(n(), n());
    for (const auto& r : compact.rotations)
      if (r.rational_frequency()) c = c + (S - r.re * RationalMatrix::identity(n())) * r.projector;
    return c;
  }
};

inline AlmostAbelianPresentation present(const LieAlgebra& g) {
  auto e = find_acting_index(g);
  if (!e) throw SolvcohError("algebra is not almost abelian");
  AlmostAbelianPresentation p;
  p.g = g;
  p.acting = *e;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (i != *e) p.ideal.push_back(i);
  const std::size_t n = p.ideal.size();
  p.A = RationalMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) p.A(r, c) = g.structure_constant(p.ideal[c], *e, p.ideal[r]);
  auto jc = jordan_chevalley(p.A);
  p.S = jc.S;
  p.N = jc.N;
  p.compact = compact_part(p.S, &g);
  p.C = p.compact.C;
  return p;
}

/// Replaces the action A by A' on the same basis.
inline LieAlgebra with_action(const AlmostAbelianPresentation& p, const RationalMatrix& a) {
  LieAlgebra h(p.g.dim());
  for (std::size_t c = 0; c < p.n(); ++c)
    for (std::size_t r = 0; r < p.n(); ++r)
      if (!is_zero(a(r, c))) h.add_bracket_term(p.ideal[c], p.acting, p.ideal[r], a(r, c));
  h.parameters = p.g.parameters;
  h.irrational_symbols = p.g.irrational_symbols;
  h.isomorphism_note = p.g.isomorphism_note;
  return h;
}

struct ModifyOptions {
  bool kill_irrational = false;  // also remove blocks with declared-irrational frequency
};

/// g̃ = R ⋉_{A−C} R^n.
inline LieAlgebra modify(const LieAlgebra& g, ModifyOptions opt = {}) {
  auto p = present(g);
  RationalMatrix c = opt.kill_irrational ? p.C : p.rational_compact_part();
  LieAlgebra h = with_action(p, p.A - c);
  h.name = g.name.empty() ? std::string() : (g.name.back() == '~' ? g.name : g.name + "~");
  return h;
}

struct MostowResult {
  bool holds = true;
  std::string witness;  // how πi arises when the condition fails
};

/// Decides whether πi is a Q-combination of the eigenvalues of qπ·A.
inline MostowResult mostow_test(const AlmostAbelianPresentation& p, const Rational& q) {
  // coordinates of q·b_j over Q in the basis {1, √d, declared symbols}
  std::map<std::string, std::size_t> axes{{"1", 0}};
  std::vector<std::pair<std::size_t, Rational>> coords;
  auto squarefree_core = [](const Rational& r, Rational& scale) {
    Integer num = r.get_num() * r.get_den(), core = 1, k = 1;
    for (Integer d = 2; d * d <= num; ++d)
      while (num % (d * d) == 0) {
        num /= d * d;
        k *= d;
      }
    core = num;
    scale = Rational(k, r.get_den());
    return core;
  };
  for (const auto& r : p.compact.rotations) {
    if (r.symbol) {
      auto [it, _] = axes.emplace("sym:" + *r.symbol, axes.size());
      coords.push_back({it->second, q});
    } else if (r.b) {
      coords.push_back({0, q * *r.b});
    } else {
      Rational scale;
      Integer core = squarefree_core(r.b_squared, scale);
      auto [it, _] = axes.emplace("sqrt:" + core.get_str(), axes.size());
      coords.push_back({it->second, q * scale});
    }
  }
  MostowResult res;
  if (coords.empty()) return res;
  std::vector<Vector> rows;
  for (const auto& [ax, v] : coords) {
    Vector row(axes.size(), Rational(0));
    row[ax] = v;
    rows.push_back(row);
  }
  std::size_t r0 = rank(RationalMatrix::from_rows(rows, axes.size()));
  Vector one(axes.size(), Rational(0));
  one[0] = 1;
  rows.push_back(one);
  std::size_t r1 = rank(RationalMatrix::from_rows(rows, axes.size()));
  res.holds = (r1 != r0);
  if (!res.holds)
    for (std::size_t j = 0; j < coords.size(); ++j)
      if (coords[j].first == 0 && !is_zero(coords[j].second)) {
        const auto& rb = p.compact.rotations[j];
        Rational f = 1 / (2 * coords[j].second);
        res.witness = "pi*i = " + f.get_str() + "*(lambda - conj(lambda)) with lambda = " + q.get_str() + "*pi*(" + rb.re.get_str() + " + " +
                      rb.b->get_str() + "i)";
        break;
      }
  return res;
}
inline MostowResult mostow_test(const LieAlgebra& g, const Rational& q) { return mostow_test(present(g), q); }

/// Zariski closure of the monodromy group connected: every finite-order rotation is trivial.
inline bool monodromy_closure_connected(const AlmostAbelianPresentation& p, const Rational& q) {
  for (const auto& r : p.compact.rotations)
    if (r.rational_frequency()) {
      Rational t = q * *r.b / 2;
      if (!is_integer(t)) return false;
    }
  return true;
}

}  // namespace solvcoh

#endif
