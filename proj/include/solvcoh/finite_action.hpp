#ifndef SOLVCOH_FINITE_ACTION_HPP
#define SOLVCOH_FINITE_ACTION_HPP

#include "solvcoh/almost_abelian.hpp"
#include "solvcoh/ce_complex.hpp"
#include "solvcoh/monodromy.hpp"

namespace solvcoh {

/// Λ^pψ on the degree-p monomial basis, ψ given on degree 1 by columns.
inline KMatrix exterior_power(const ExteriorAlgebra& e, const KMatrix& psi, std::size_t p) {
  KMatrix m(e.size(p), e.size(p));
  std::vector<std::vector<KElement>> cols(e.n());
  for (std::size_t i = 0; i < e.n(); ++i) cols[i] = psi.col(i);
  for (std::size_t c = 0; c < e.size(p); ++c) {
    std::vector<KElement> v{KElement(1)};
    std::size_t deg = 0;
    for (Mask x = e.mask(p, c); x; x &= x - 1, ++deg) v = e.wedge(deg, v, 1, cols[std::countr_zero(x)]);
    for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

/// Finite-order automorphism of (Λg*, d) given on g*; column i is ψ(α^i).
class FiniteAction {
 public:
  FiniteAction(const LieAlgebra& target, KMatrix psi, std::size_t max_order = 720)
      : ext_(std::make_shared<ExteriorAlgebra>(target)), psi_(std::move(psi)) {
    const std::size_t n = ext_->n();
    if (psi_.rows() != n || psi_.cols() != n) throw SolvcohError("action matrix has the wrong size");
    KMatrix pw = psi_;
    order_ = 1;
    while (!(pw == KMatrix::identity(n))) {
      if (++order_ > max_order) throw SolvcohError("action is not of finite order");
      pw = pw * psi_;
    }
    for (std::size_t p = 0; p <= n; ++p) lambda_.push_back(exterior_power(*ext_, psi_, p));
    for (std::size_t p = 0; p < n; ++p) {
      KMatrix d = to_k(ext_->d(p));
      if (!(lambda_[p + 1] * d == d * lambda_[p])) throw SolvcohError("action does not commute with the differential");
    }
  }

  const ExteriorPtr& ext() const { return ext_; }
  std::size_t order() const { return order_; }
  const KMatrix& generator() const { return psi_; }
  /// Λ^pψ on the degree-p monomial basis.
  const KMatrix& on_degree(std::size_t p) const { return lambda_.at(p); }

  static FiniteAction identity(const LieAlgebra& g) { return FiniteAction(g, KMatrix::identity(g.dim())); }

 private:
  ExteriorPtr ext_;
  KMatrix psi_;
  std::size_t order_ = 1;
  std::vector<KMatrix> lambda_;
};

/// Deck action of Γ_{qπ}/Γ̃ on g̃*: the transpose of exp(qπ C) on the ideal, trivial on the acting covector.
inline KMatrix compact_action_matrix(const AlmostAbelianPresentation& p, const Rational& q) {
  const std::size_t n = p.g.dim();
  KMatrix psi = KMatrix::identity(n);
  KMatrix block(p.n(), p.n());
  for (const auto& r : p.compact.rotations) {
    if (!r.rational_frequency()) {
      block = block + to_k(r.projector);
      continue;
    }
    KElement c = demote(cos_pi(q * *r.b)), s = demote(sin_pi(q * *r.b));
    RationalMatrix Ci = (p.S - r.re * RationalMatrix::identity(p.n())) * r.projector;
    block = block + c * to_k(r.projector) + (s / KElement(*r.b)) * to_k(Ci);
  }
  for (const auto& r : p.compact.reals) block = block + to_k(r.projector);
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = 0; j < p.n(); ++j) psi(p.ideal[i], p.ideal[j]) = block(j, i);
  return psi;
}

/// ψ on the modification of g at t̄ = qπ.
inline FiniteAction compact_action(const LieAlgebra& g, const Rational& q) {
  auto p = present(g);
  return FiniteAction(modify(g), compact_action_matrix(p, q));
}

/// RREF basis of a K-subspace that must be defined over Q.
inline std::vector<Vector> rationalize(const std::vector<std::vector<KElement>>& basis, std::size_t width) {
  if (basis.empty()) return {};
  auto rr = rref(Matrix<KElement>::from_rows(basis, width));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < rr.rank; ++i) {
    Vector v(width);
    for (std::size_t j = 0; j < width; ++j) {
      if (!rr.reduced(i, j).is_rational()) throw SolvcohError("invariant subspace is not defined over Q");
      v[j] = rr.reduced(i, j).rational_value();
    }
    out.push_back(std::move(v));
  }
  return out;
}

struct InvariantCohomology {
  std::vector<std::size_t> betti;
  std::vector<std::vector<Vector>> classes;  // per degree, rational coordinates in the representative basis of H*(g̃)
  std::vector<std::vector<Vector>> forms;    // the corresponding representative forms
  std::vector<KMatrix> projectors;           // averaging projector on H^p
};

/// Action of ψ on H^p in the representative basis.
inline KMatrix action_on_cohomology(const BasicCohomology<KElement>& hk, const FiniteAction& act, std::size_t p) {
  const auto& d = hk.degree(p);
  KMatrix m(d.betti(), d.betti());
  for (std::size_t i = 0; i < d.betti(); ++i) {
    auto img = act.on_degree(p).apply(d.reps[i]);
    auto c = hk.coords(p, img);
    for (std::size_t j = 0; j < c.size(); ++j) m(j, i) = c[j];
  }
  return m;
}

/// H*(g̃)^{⟨ψ⟩} through the averaging projector on cohomology.
inline InvariantCohomology invariant_cohomology(const Cohomology& h, const FiniteAction& act) {
  auto hk = BasicCohomology<KElement>(BasicFiniteCdga<KElement>::full(act.ext()));
  InvariantCohomology out;
  const KElement inv_k = KElement(Rational(1, static_cast<long>(act.order())));
  for (std::size_t p = 0; p <= h.top(); ++p) {
    const std::size_t b = hk.betti(p);
    if (b != h.betti(p)) throw SolvcohError("cohomology mismatch between scalar fields");
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < h.degree(p).reps[i].size(); ++j)
        if (!(hk.degree(p).reps[i][j] == KElement(h.degree(p).reps[i][j]))) throw SolvcohError("representative bases differ between scalar fields");
    KMatrix a = action_on_cohomology(hk, act, p);
    KMatrix P(b, b), pw = KMatrix::identity(b);
    for (std::size_t j = 0; j < act.order(); ++j) {
      P = P + pw;
      pw = pw * a;
    }
    P = inv_k * P;
    std::vector<std::vector<KElement>> cols;
    for (std::size_t j = 0; j < b; ++j) cols.push_back(P.col(j));
    auto basis = b ? rationalize(cols, b) : std::vector<Vector>{};
    std::vector<Vector> forms;
    for (const auto& c : basis) forms.push_back(h.representative(p, c));
    out.betti.push_back(basis.size());
    out.classes.push_back(std::move(basis));
    out.forms.push_back(std::move(forms));
    out.projectors.push_back(std::move(P));
  }
  return out;
}

/// The sub-CDGA of ψ-invariant forms, ker(Λ^pψ − I) in each degree.
inline FiniteCdga invariant_cdga(const FiniteAction& act) {
  const auto& e = *act.ext();
  FiniteCdga a{act.ext(), {}};
  for (std::size_t p = 0; p <= e.n(); ++p) {
    KMatrix m = act.on_degree(p) - KMatrix::identity(e.size(p));
    auto ker = kernel(m);
    auto basis = rationalize(ker, e.size(p));
    a.basis.push_back(basis.empty() ? RationalMatrix(0, e.size(p)) : RationalMatrix::from_rows(basis, e.size(p)));
  }
  return a;
}

}  // namespace solvcoh

#endif
