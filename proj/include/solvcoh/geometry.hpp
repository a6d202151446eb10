#ifndef SOLVCOH_GEOMETRY_HPP
#define SOLVCOH_GEOMETRY_HPP

#include "solvcoh/ce_complex.hpp"
#include "solvcoh/mpoly.hpp"

#include <functional>
#include <random>

namespace solvcoh {

/// Pfaffian of the skew matrix with entries a(i, j), i < j, over the index list.
template <class T>
T pfaffian(const std::vector<std::size_t>& idx, const std::function<T(std::size_t, std::size_t)>& a) {
  if (idx.empty()) return T(1);
  if (idx.size() % 2) return T(0);
  T sum(0);
  for (std::size_t k = 1; k < idx.size(); ++k) {
    T e = a(idx[0], idx[k]);
    if (detail::scalar_is_zero(e)) continue;
    std::vector<std::size_t> rest;
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != k) rest.push_back(idx[t]);
    T sub = pfaffian<T>(rest, a);
    if (k % 2) sum = sum + e * sub;
    else sum = sum - e * sub;
  }
  return sum;
}

/// Pf of a 2-form: ω^n / n! = Pf · α^{1…2n}.
inline Rational form_pfaffian(const ExteriorAlgebra& e, const Vector& omega) {
  std::vector<std::size_t> idx(e.n());
  for (std::size_t i = 0; i < e.n(); ++i) idx[i] = i;
  return pfaffian<Rational>(idx, [&](std::size_t i, std::size_t j) { return omega[e.index((Mask(1) << i) | (Mask(1) << j))]; });
}

/// Closed 2-forms Σ w_I b_I, with w_I named after the pivot monomial of the RREF row b_I.
struct TwoFormFamily {
  ExteriorPtr ext;
  std::vector<Vector> basis;
  std::vector<std::string> names;
  MPoly pfaffian;

  std::size_t size() const { return basis.size(); }
  Vector member(const std::vector<Rational>& w) const {
    Vector v(ext->size(2), Rational(0));
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += w[r] * basis[r][j];
    return v;
  }
  std::vector<MPoly> generic() const {
    std::vector<MPoly> v(ext->size(2));
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!is_zero(basis[r][j])) v[j] += MPoly::var(r).scaled(basis[r][j]);
    return v;
  }
  std::string generic_string() const {
    std::string s;
    auto g = generic();
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j].is_zero()) continue;
      std::string c = g[j].to_string(names);
      if (!s.empty()) s += " + ";
      s += (g[j].is_monomial() ? c : "(" + c + ")") + "*" + ext->mask_name(ext->mask(2, j));
    }
    return s.empty() ? "0" : s;
  }
};

inline TwoFormFamily closed_two_forms(const FiniteCdga& a) {
  const auto& e = *a.ambient;
  TwoFormFamily f{a.ambient, {}, {}, MPoly()};
  if (e.n() < 2) return f;
  const RationalMatrix& b = a.basis.at(2);
  std::vector<Vector> forms;
  for (const auto& c : kernel(e.d(2) * b.transpose())) forms.push_back(b.transpose().apply(c));
  if (!forms.empty()) {
    auto rr = rref(RationalMatrix::from_rows(forms, e.size(2)));
    for (std::size_t i = 0; i < rr.rank; ++i) {
      f.basis.push_back(rr.reduced.row(i));
      std::string nm = "w" + ExteriorAlgebra::mask_name(e.mask(2, rr.pivots[i])).substr(1);
      f.names.push_back(nm);
    }
  }
  auto g = f.generic();
  std::vector<std::size_t> idx(e.n());
  for (std::size_t i = 0; i < e.n(); ++i) idx[i] = i;
  f.pfaffian = pfaffian<MPoly>(idx, [&](std::size_t i, std::size_t j) { return g[e.index((Mask(1) << i) | (Mask(1) << j))]; });
  return f;
}
inline TwoFormFamily closed_two_forms(const LieAlgebra& g) { return closed_two_forms(FiniteCdga::of(g)); }

struct SymplecticResult {
  bool exists = false;
  TwoFormFamily family;
  std::string generic_form;
  std::string condition;  // open condition on the w's
  std::optional<Vector> sample;
  bool decided_by_sample = false;
};

/// Random rational point with integer coordinates in [-bound, bound].
inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t n, int bound = 5) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<Rational> x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

inline std::string nondegeneracy_condition(const MPoly& pf, const std::vector<std::string>& names) {
  if (pf.is_zero()) return "never";
  if (pf.is_constant()) return "always";
  if (pf.is_monomial()) {
    MPoly m = MPoly::monomial(Rational(1), pf.leading().first);
    return m.to_string(names) + " != 0";
  }
  return pf.to_string(names) + " != 0";
}

inline SymplecticResult symplectic_exists(const FiniteCdga& a, unsigned seed = 1) {
  const auto& e = *a.ambient;
  if (e.n() % 2) throw SolvcohError("symplectic forms need even dimension");
  SymplecticResult r;
  r.family = closed_two_forms(a);
  r.generic_form = r.family.generic_string();
  r.condition = nondegeneracy_condition(r.family.pfaffian, r.family.names);
  std::mt19937 rng(seed);
  for (int t = 0; t < 24 && !r.sample && r.family.size(); ++t) {
    Vector w = r.family.member(random_point(rng, r.family.size()));
    if (!is_zero(form_pfaffian(e, w))) {
      r.sample = w;
      r.decided_by_sample = true;
    }
  }
  r.exists = r.sample.has_value() || !r.family.pfaffian.is_zero();
  if (r.exists && !r.sample)
    for (int t = 0; t < 2000 && !r.sample; ++t) {
      Vector w = r.family.member(random_point(rng, r.family.size(), 50));
      if (!is_zero(form_pfaffian(e, w))) r.sample = w;
    }
  return r;
}
inline SymplecticResult symplectic_exists(const LieAlgebra& g, unsigned seed = 1) { return symplectic_exists(FiniteCdga::of(g), seed); }

struct LefschetzStep {
  std::size_t k = 0;
  RationalMatrix map;  // L^{n-k}: H^k → H^{2n-k}
  std::size_t rank = 0;
  bool isomorphism = false;
};

struct LefschetzReport {
  std::size_t half_dim = 0;
  bool top_power_nonzero = false;
  std::vector<LefschetzStep> steps;
  /// s-Lefschetz: isomorphisms for every k ≤ s.
  bool s_lefschetz(std::size_t s) const {
    for (const auto& st : steps)
      if (st.k <= s && !st.isomorphism) return false;
    return s < steps.size();
  }
  bool hard() const { return steps.size() == half_dim && s_lefschetz(half_dim - 1); }
};

/// Class of x ∪ ω^m.
inline Vector cup_power(const Cohomology& h, const Vector& omega, std::size_t m, std::size_t p, Vector x) {
  for (std::size_t i = 0; i < m; ++i) {
    x = h.cup(2, omega, p, x);
    p += 2;
    if (x.empty()) break;
  }
  return x;
}

inline LefschetzReport lefschetz_degree(const Cohomology& h, const Vector& omega, std::size_t s) {
  if (h.top() % 2) throw SolvcohError("Lefschetz maps need even dimension");
  if (omega.size() != h.betti(2)) throw SolvcohError("class does not lie in H^2");
  LefschetzReport r;
  const std::size_t n = h.top() / 2;
  r.half_dim = n;
  r.top_power_nonzero = !is_zero_vector(cup_power(h, omega, n, 0, Vector{Rational(1)}));
  for (std::size_t k = 0; k <= std::min(s, n - 1); ++k) {
    LefschetzStep st;
    st.k = k;
    const std::size_t bk = h.betti(k), bt = h.betti(2 * n - k);
    st.map = RationalMatrix(bt, bk);
    for (std::size_t j = 0; j < bk; ++j) {
      auto img = cup_power(h, omega, n - k, k, h.basis_class(k, j));
      for (std::size_t i = 0; i < img.size(); ++i) st.map(i, j) = img[i];
    }
    st.rank = rank(st.map);
    st.isomorphism = (bk == bt && st.rank == bk);
    r.steps.push_back(std::move(st));
  }
  return r;
}

/// Rank over Q(w) by fraction-free elimination.
inline std::size_t symbolic_rank(std::vector<std::vector<MPoly>> a) {
  if (a.empty()) return 0;
  const std::size_t nr = a.size(), nc = a[0].size();
  MPoly prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a[piv][c].is_zero()) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) a[i][j] = exact_divide(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
      a[i][c] = MPoly();
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

struct GenericLefschetz {
  TwoFormFamily family;
  std::vector<Vector> samples;  // symplectic representatives used
  std::vector<LefschetzReport> reports;
  std::vector<std::size_t> generic_rank;  // per k
  std::vector<bool> isomorphism;
  bool symbolic = false;  // ranks recomputed over Q(w)
  bool top_power_nonzero = false;

  bool s_lefschetz(std::size_t s) const {
    for (std::size_t k = 0; k <= s; ++k)
      if (k >= isomorphism.size() || !isomorphism[k]) return false;
    return true;
  }
};

/// Ranks of L^{n-k} over the rational function field in the w's.
inline std::vector<std::size_t> symbolic_lefschetz_ranks(const Cohomology& h, const TwoFormFamily& f, std::size_t s) {
  const std::size_t n = h.top() / 2, b2 = h.betti(2);
  std::vector<MPoly> w(b2);
  for (std::size_t r = 0; r < f.size(); ++r) {
    auto c = h.coords(2, f.basis[r]);
    for (std::size_t l = 0; l < b2; ++l)
      if (!is_zero(c[l])) w[l] += MPoly::var(r).scaled(c[l]);
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= std::min(s, n - 1); ++k) {
    std::vector<std::vector<MPoly>> cols;
    for (std::size_t j = 0; j < h.betti(k); ++j) {
      std::vector<MPoly> y(h.betti(k));
      y[j] = MPoly(1);
      std::size_t p = k;
      for (std::size_t step = 0; step < n - k; ++step) {
        std::vector<MPoly> next(h.betti(p + 2));
        for (std::size_t i = 0; i < b2; ++i) {
          if (w[i].is_zero()) continue;
          for (std::size_t t = 0; t < y.size(); ++t) {
            if (y[t].is_zero()) continue;
            auto c = h.cup(2, h.basis_class(2, i), p, h.basis_class(p, t));
            for (std::size_t l = 0; l < c.size(); ++l)
              if (!is_zero(c[l])) next[l] += (w[i] * y[t]).scaled(c[l]);
          }
        }
        y = std::move(next);
        p += 2;
      }
      cols.push_back(std::move(y));
    }
    out.push_back(symbolic_rank(cols));
  }
  return out;
}

/// Lefschetz verdicts for the generic closed 2-form; sampled, confirmed symbolically when samples disagree.
inline GenericLefschetz generic_lefschetz(const FiniteCdga& a, std::size_t s, unsigned seed = 1, std::size_t samples = 2,
                                          bool force_symbolic = false) {
  auto sym = symplectic_exists(a, seed);
  if (!sym.exists) throw SolvcohError("no symplectic form on this algebra");
  Cohomology h(a);
  const auto& e = *h.algebra().ambient;
  GenericLefschetz out;
  out.family = sym.family;
  std::mt19937 rng(seed + 7919);
  for (int t = 0; out.samples.size() < samples && t < 4000; ++t) {
    Vector w = out.family.member(random_point(rng, out.family.size(), 9));
    if (!is_zero(form_pfaffian(e, w))) out.samples.push_back(w);
  }
  for (const auto& w : out.samples) out.reports.push_back(lefschetz_degree(h, h.coords(2, w), s));
  bool agree = true;
  for (const auto& r : out.reports)
    for (std::size_t k = 0; k < r.steps.size(); ++k)
      if (r.steps[k].rank != out.reports[0].steps[k].rank) agree = false;
  const auto& first = out.reports.at(0);
  out.top_power_nonzero = first.top_power_nonzero;
  if (agree && !force_symbolic) {
    for (const auto& st : first.steps) out.generic_rank.push_back(st.rank);
  } else {
    out.symbolic = true;
    out.generic_rank = symbolic_lefschetz_ranks(h, out.family, s);
  }
  for (std::size_t k = 0; k < out.generic_rank.size(); ++k) {
    const std::size_t bk = h.betti(k), bt = h.betti(h.top() - k);
    out.isomorphism.push_back(bk == bt && out.generic_rank[k] == bk);
  }
  return out;
}
inline GenericLefschetz generic_lefschetz(const LieAlgebra& g, std::size_t s, unsigned seed = 1, std::size_t samples = 2,
                                          bool force_symbolic = false) {
  if (!symplectic_exists(g, seed).exists) throw SolvcohError("no symplectic form on " + (g.name.empty() ? std::string("this algebra") : g.name));
  return generic_lefschetz(FiniteCdga::of(g), s, seed, samples, force_symbolic);
}

/// ω and Ψ = ReΨ + i ImΨ.
struct SU3Candidate {
  Vector omega, re_psi, im_psi;
};

/// ω = e¹²+e³⁴+e⁵⁶, Ψ = (e¹+ie²)(e³+ie⁴)(e⁵+ie⁶) for the coframe e^i = Σ_j P(i,j) α^j.
inline SU3Candidate su3_from_coframe(const ExteriorAlgebra& e, const RationalMatrix& P) {
  if (e.n() != 6 || P.rows() != 6 || P.cols() != 6) throw SolvcohError("SU(3) coframes need dimension 6");
  std::vector<Vector> c(6);
  for (std::size_t i = 0; i < 6; ++i) c[i] = P.row(i);
  auto w2 = [&](std::size_t i, std::size_t j) { return e.wedge(1, c[i], 1, c[j]); };
  auto w3 = [&](std::size_t i, std::size_t j, std::size_t k) { return e.wedge(2, w2(i, j), 1, c[k]); };
  auto add = [](Vector a, const Vector& b, int s) {
    for (std::size_t t = 0; t < a.size(); ++t) a[t] += s * b[t];
    return a;
  };
  SU3Candidate x;
  x.omega = add(add(w2(0, 1), w2(2, 3), 1), w2(4, 5), 1);
  x.re_psi = add(add(add(w3(0, 2, 4), w3(0, 3, 5), -1), w3(1, 2, 5), -1), w3(1, 3, 4), -1);
  x.im_psi = add(add(add(w3(0, 2, 5), w3(0, 3, 4), 1), w3(1, 2, 4), 1), w3(1, 3, 5), -1);
  return x;
}

struct HalfFlatReport {
  bool d_omega_squared = false;  // d(ω∧ω) = 0
  bool d_re_psi = false;
  bool omega_re_psi = false;  // ω∧ReΨ = 0
  bool omega_im_psi = false;
  bool nondegenerate = false;
  bool d_omega = false;
  bool half_flat = false;
  bool symplectic_half_flat = false;
  std::string convention = "the omega-Omega condition is read as d(omega^omega) = 0";

  std::vector<std::pair<std::string, bool>> checks() const {
    return {{"d(omega^omega)=0", d_omega_squared}, {"d(Re Psi)=0", d_re_psi}, {"omega^Re Psi=0", omega_re_psi},
            {"omega^Im Psi=0", omega_im_psi},      {"omega nondegenerate", nondegenerate}, {"d omega=0", d_omega}};
  }
};

inline HalfFlatReport half_flat_verify(const LieAlgebra& g, const SU3Candidate& c) {
  ExteriorAlgebra e(g);
  if (e.n() != 6) throw SolvcohError("half-flat structures need dimension 6");
  if (c.omega.size() != e.size(2) || c.re_psi.size() != e.size(3) || c.im_psi.size() != e.size(3))
    throw SolvcohError("malformed SU(3) candidate");
  HalfFlatReport r;
  r.d_omega_squared = is_zero_vector(e.apply_d(4, e.wedge(2, c.omega, 2, c.omega)));
  r.d_re_psi = is_zero_vector(e.apply_d(3, c.re_psi));
  r.omega_re_psi = is_zero_vector(e.wedge(2, c.omega, 3, c.re_psi));
  r.omega_im_psi = is_zero_vector(e.wedge(2, c.omega, 3, c.im_psi));
  r.nondegenerate = !is_zero(form_pfaffian(e, c.omega));
  r.d_omega = is_zero_vector(e.apply_d(2, c.omega));
  r.half_flat = r.d_omega_squared && r.d_re_psi && r.omega_re_psi && r.omega_im_psi && r.nondegenerate;
  r.symplectic_half_flat = r.half_flat && r.d_omega;
  return r;
}

}  // namespace solvcoh

#endif
