#ifndef SOLVCOH_MINIMAL_MODEL_HPP
#define SOLVCOH_MINIMAL_MODEL_HPP

#include "solvcoh/free_cdga.hpp"

namespace solvcoh {

/// Minimal Sullivan algebra with a map φ into the source, quasi-isomorphic through the cap.
struct MinimalModel {
  FreeCdga model;
  CochainPtr source;
  std::vector<Vector> images;  // φ(v_i) in source coordinates
  std::size_t cap = 0;

  /// φ on a homogeneous element of degree p.
  Vector map(std::size_t p, const FreeElement& x) const {
    Vector out(source->dim(p), Rational(0));
    for (const auto& [m, c] : x) {
      Vector acc{Rational(1)};
      std::size_t deg = 0;
      for (std::size_t i = 0; i < m.size() && !acc.empty(); ++i)
        for (int e = 0; e < m[i] && !acc.empty(); ++e) {
          const std::size_t gd = model.generators()[i].degree;
          acc = deg + gd <= source->max_degree() + 1 ? source->mul(deg, acc, gd, images[i]) : Vector{};
          deg += gd;
        }
      if (acc.empty() || deg != p) continue;
      for (std::size_t j = 0; j < acc.size(); ++j) out[j] += c * acc[j];
    }
    return out;
  }
  std::vector<std::size_t> generator_counts() const { return model.generator_counts(static_cast<int>(cap)); }
};

struct MinimalModelOptions {
  std::size_t max_generators = 400;
  std::size_t max_monomials = 200000;
};

inline MinimalModel minimal_model(CochainPtr src, std::size_t cap, MinimalModelOptions opt = {}) {
  if (cap < 1) throw SolvcohError("model cap must be at least 1");
  if (src->dim(0) != 1) throw SolvcohError("source must have one-dimensional degree 0");
  GradedCohomology hs(src);
  if (hs.betti(0) != 1) throw SolvcohError("source must be connected");
  MinimalModel mm;
  mm.source = src;
  mm.cap = cap;
  auto src_coords = [&](std::size_t p, const Vector& v) {
    return p <= hs.top() ? hs.coords(p, v) : Vector{};
  };
  auto guard = [&] {
    if (mm.model.size() > opt.max_generators) throw SolvcohError("minimal model exceeds the generator limit before the cap");
  };
  for (std::size_t k = 1; k <= cap; ++k) {
    std::size_t fresh = 0;
    {
      FreeCochains fc(mm.model, k, opt.max_monomials);
      GradedCohomology hm(std::make_shared<FreeCochains>(fc));
      std::vector<Vector> rows;
      for (const auto& z : hm.degree(k).reps) {
        auto c = src_coords(k, mm.map(k, fc.to_element(k, z)));
        if (!c.empty()) rows.push_back(c);
      }
      std::size_t r0 = rows.empty() ? 0 : rank(RationalMatrix::from_rows(rows, hs.betti(k)));
      for (std::size_t i = 0; i < hs.betti(k); ++i) {
        rows.push_back(hs.basis_class(k, i));
        std::size_t r1 = rank(RationalMatrix::from_rows(rows, hs.betti(k)));
        if (r1 == r0) {
          rows.pop_back();
          continue;
        }
        r0 = r1;
        mm.model.add_generator("a" + std::to_string(k) + "_" + std::to_string(++fresh), static_cast<int>(k));
        mm.images.push_back(hs.representative(k, hs.basis_class(k, i)));
        guard();
      }
    }
    std::size_t killed = 0;
    while (true) {
      FreeCochains fc(mm.model, k + 1, opt.max_monomials);
      GradedCohomology hm(std::make_shared<FreeCochains>(fc));
      const auto& reps = hm.degree(k + 1).reps;
      const std::size_t bs = k + 1 <= hs.top() ? hs.betti(k + 1) : 0;
      RationalMatrix C(bs, reps.size());
      for (std::size_t i = 0; i < reps.size(); ++i) {
        auto c = src_coords(k + 1, mm.map(k + 1, fc.to_element(k + 1, reps[i])));
        for (std::size_t j = 0; j < c.size(); ++j) C(j, i) = c[j];
      }
      auto ker = bs ? kernel(C) : std::vector<Vector>{};
      if (!bs)
        for (std::size_t i = 0; i < reps.size(); ++i) ker.push_back(hm.basis_class(k + 1, i));
      if (ker.empty()) break;
      for (const auto& kv : ker) {
        Vector z = hm.representative(k + 1, kv);
        Vector target = mm.map(k + 1, fc.to_element(k + 1, z));
        Vector a(src->dim(k), Rational(0));
        if (!is_zero_vector(target)) {
          auto prim = hs.primitive(k + 1, target);
          if (!prim) throw SolvcohError("kernel class has no primitive in the source");
          a = *prim;
        }
        mm.model.add_generator("b" + std::to_string(k) + "_" + std::to_string(++killed), static_cast<int>(k), fc.to_element(k + 1, z));
        mm.images.push_back(a);
        guard();
      }
    }
  }
  return mm;
}

inline MinimalModel minimal_model(const FiniteCdga& a, std::size_t cap, MinimalModelOptions opt = {}) {
  return minimal_model(std::make_shared<SubCdgaCochains>(a), cap, opt);
}
inline MinimalModel minimal_model(const LieAlgebra& g, std::size_t cap, MinimalModelOptions opt = {}) {
  return minimal_model(FiniteCdga::of(g), cap, opt);
}
inline MinimalModel minimal_model(const FreeCdga& a, std::size_t cap, MinimalModelOptions opt = {}) {
  return minimal_model(std::make_shared<FreeCochains>(a, cap, opt.max_monomials), cap, opt);
}

/// φ∘d = d∘φ on every generator.
inline bool is_chain_map(const MinimalModel& mm) {
  for (std::size_t i = 0; i < mm.model.size(); ++i) {
    const std::size_t p = mm.model.generators()[i].degree;
    if (p + 1 > mm.source->max_degree() + 1) continue;
    Vector lhs = mm.map(p + 1, mm.model.differential(i));
    Vector rhs = p <= mm.source->max_degree() ? mm.source->apply_d(p, mm.images[i]) : Vector{};
    if (rhs.empty()) rhs.assign(lhs.size(), Rational(0));
    if (lhs != rhs) return false;
  }
  return true;
}

/// Per degree p ≤ cap: (b_p(model), b_p(source), rank of φ*).
struct QuasiIsoDegree {
  std::size_t model_betti, source_betti, rank;
  bool bijective() const { return model_betti == source_betti && rank == model_betti; }
};

inline std::vector<QuasiIsoDegree> quasi_isomorphism_check(const MinimalModel& mm) {
  FreeCochains fc(mm.model, mm.cap);
  GradedCohomology hm(std::make_shared<FreeCochains>(fc));
  GradedCohomology hs(mm.source);
  std::vector<QuasiIsoDegree> out;
  for (std::size_t p = 0; p <= mm.cap; ++p) {
    QuasiIsoDegree q{hm.betti(p), p <= hs.top() ? hs.betti(p) : 0, 0};
    if (q.source_betti) {
      std::vector<Vector> rows;
      for (const auto& z : hm.degree(p).reps) rows.push_back(hs.coords(p, mm.map(p, fc.to_element(p, z))));
      if (!rows.empty()) q.rank = rank(RationalMatrix::from_rows(rows, q.source_betti));
    }
    out.push_back(q);
  }
  return out;
}

}  // namespace solvcoh

#endif
