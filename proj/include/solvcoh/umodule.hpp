#ifndef SOLVCOH_UMODULE_HPP
#define SOLVCOH_UMODULE_HPP

#include "solvcoh/finite_action.hpp"
#include "solvcoh/minimal_model.hpp"
#include "solvcoh/monodromy.hpp"

namespace solvcoh {

/// Per degree, the generalized 1-eigenspace of ρ.
struct NilpotentSubmodule {
  std::vector<std::vector<std::vector<KElement>>> basis;
  std::vector<std::optional<std::vector<Vector>>> rational;  // RREF basis when defined over Q

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& b : basis) d.push_back(b.size());
    return d;
  }
};

inline NilpotentSubmodule nilpotent_submodule_U(const std::vector<KMatrix>& rho) {
  NilpotentSubmodule u;
  for (const auto& r : rho) {
    if (!r.is_square()) throw SolvcohError("monodromy action must be square");
    const std::size_t n = r.rows();
    std::vector<std::vector<KElement>> ker;
    if (n) {
      KMatrix m = r - KMatrix::identity(n);
      ker = kernel(matrix_pow(m, static_cast<int>(n)));
    }
    std::optional<std::vector<Vector>> rat;
    try {
      rat = rationalize(ker, n);
    } catch (const SolvcohError&) {
      rat.reset();
    }
    u.basis.push_back(std::move(ker));
    u.rational.push_back(std::move(rat));
  }
  return u;
}

/// Λ^p(M^t) on the forms of the fiber R^n.
inline std::vector<KMatrix> fiber_representation(const Monodromy& m) {
  ExteriorAlgebra fiber(m.M.rows());
  KMatrix psi = m.M.transpose();
  std::vector<KMatrix> out;
  for (std::size_t p = 0; p <= fiber.n(); ++p) out.push_back(exterior_power(fiber, psi, p));
  return out;
}

/// Λ(α^e) ⊗ U inside the CE algebra of g̃.
inline FiniteCdga oprea_tralle_cdga(const AlmostAbelianPresentation& p, const NilpotentSubmodule& u) {
  auto ext = std::make_shared<ExteriorAlgebra>(modify(p.g));
  ExteriorAlgebra fiber(p.n());
  auto embed = [&](std::size_t deg, const Vector& v) {
    Vector out(ext->size(deg), Rational(0));
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (is_zero(v[j])) continue;
      Mask m = 0;
      for (Mask x = fiber.mask(deg, j); x; x &= x - 1) m |= Mask(1) << p.ideal[std::countr_zero(x)];
      out[ext->index(m)] = v[j];
    }
    return out;
  };
  FiniteCdga a{ext, {}};
  Vector base = ext->unit(1, Mask(1) << p.acting);
  for (std::size_t deg = 0; deg <= ext->n(); ++deg) {
    std::vector<Vector> rows;
    if (deg < u.rational.size()) {
      if (!u.rational[deg]) throw SolvcohError("nilpotent submodule is not defined over Q in degree " + std::to_string(deg));
      for (const auto& v : *u.rational[deg]) rows.push_back(embed(deg, v));
    }
    if (deg >= 1 && deg - 1 < u.rational.size())
      for (const auto& v : *u.rational[deg - 1]) rows.push_back(ext->wedge(1, base, deg - 1, embed(deg - 1, v)));
    if (rows.empty()) {
      a.basis.push_back(RationalMatrix(0, ext->size(deg)));
      continue;
    }
    auto rr = rref(RationalMatrix::from_rows(rows, ext->size(deg)));
    a.basis.push_back(rr.reduced.block(0, 0, rr.rank, ext->size(deg)));
  }
  return a;
}

struct OpreaTralleCheck {
  NilpotentSubmodule u;
  FiniteCdga cdga;
  std::vector<std::size_t> model_counts, invariant_counts;
  std::vector<std::size_t> model_betti, invariant_betti;
  std::string diagnostic;  // empty when both constructions agree
};

/// Builds the U-model at t̄ = qπ and compares it with the minimal model of the ψ-invariant CDGA.
inline OpreaTralleCheck oprea_tralle_check(const LieAlgebra& g, const Rational& q, const ExpSurrogate& sur, std::size_t cap) {
  auto p = present(g);
  OpreaTralleCheck c;
  c.u = nilpotent_submodule_U(fiber_representation(monodromy(p, q, sur)));
  c.cdga = oprea_tralle_cdga(p, c.u);
  auto inv = invariant_cdga(compact_action(g, q));
  auto mo = minimal_model(c.cdga, cap), mi = minimal_model(inv, cap);
  c.model_counts = mo.generator_counts();
  c.invariant_counts = mi.generator_counts();
  c.model_betti = graded_cohomology(c.cdga).betti_numbers();
  c.invariant_betti = graded_cohomology(inv).betti_numbers();
  if (c.model_counts != c.invariant_counts) c.diagnostic = "generator counts differ between the U-model and the invariant model";
  else if (c.model_betti != c.invariant_betti) c.diagnostic = "cohomology differs between the U-model and the invariant model";
  return c;
}

}  // namespace solvcoh

#endif
