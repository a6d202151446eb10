#ifndef SOLVCOH_FORMALITY_HPP
#define SOLVCOH_FORMALITY_HPP

#include "solvcoh/massey.hpp"
#include "solvcoh/minimal_model.hpp"

namespace solvcoh {

enum class Formality { Formal, NotFormal, Unknown };

inline std::string to_string(Formality f) {
  switch (f) {
    case Formality::Formal: return "FORMAL";
    case Formality::NotFormal: return "NOT_FORMAL";
    default: return "UNKNOWN";
  }
}

struct FormalityOptions {
  std::optional<std::size_t> manifold_dim;  // enables the (n−1)-formality reduction
  std::vector<std::array<std::size_t, 3>> massey_degrees{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
};

struct FormalityReport {
  Formality verdict = Formality::Unknown;
  std::size_t cap = 0;
  std::optional<std::size_t> s;  // generators of degree ≤ s examined
  std::vector<std::string> closed_generators, other_generators;
  bool decomposition_available = true;  // d injective on the non-closed generators
  bool psi_well_defined = false;
  bool psi_isomorphism = false;
  std::vector<std::string> certificate;
  std::optional<std::string> psi_failure;  // closed element of the ideal that is not exact
  std::optional<MasseyTriple> massey;
  std::string massey_description;
};

/// ψ: closed generators to their classes, the rest to 0; Fernández–Muñoz s-formality with s = n−1 when the dimension is known.
inline FormalityReport formality_verdict(const MinimalModel& mm, const FormalityOptions& opt = {}) {
  FormalityReport rep;
  rep.cap = mm.cap;
  const auto& M = mm.model;
  std::size_t s = mm.cap;
  std::size_t check_to = mm.cap;
  if (opt.manifold_dim) {
    const std::size_t n = (*opt.manifold_dim + 1) / 2;
    s = n >= 1 ? n - 1 : 0;
    check_to = std::min(mm.cap, *opt.manifold_dim);
    rep.s = s;
  }
  auto fc = std::make_shared<FreeCochains>(M, mm.cap);
  GradedCohomology hm(fc);
  std::vector<bool> in_n(M.size(), false), low(M.size(), false);
  for (std::size_t i = 0; i < M.size(); ++i) {
    const auto& g = M.generators()[i];
    low[i] = static_cast<std::size_t>(g.degree) <= s;
    in_n[i] = !M.differential(i).empty();
    if (!low[i]) continue;
    (in_n[i] ? rep.other_generators : rep.closed_generators).push_back(g.name);
  }
  // d injective on span N^i
  for (int deg = 1; deg <= static_cast<int>(s) && deg <= static_cast<int>(mm.cap); ++deg) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < M.size(); ++i)
      if (in_n[i] && M.generators()[i].degree == deg) rows.push_back(fc->to_vector(deg + 1, M.differential(i)));
    if (!rows.empty() && rank(RationalMatrix::from_rows(rows, fc->dim(deg + 1))) != rows.size()) rep.decomposition_available = false;
  }
  auto uses = [&](const FreeMonomial& m, auto pred) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] && pred(i)) return true;
    return false;
  };
  auto project = [&](std::size_t p, const Vector& z) {  // drop monomials containing N
    Vector r = z;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (uses(fc->basis(p)[j], [&](std::size_t i) { return in_n[i]; })) r[j] = 0;
    return r;
  };
  if (rep.decomposition_available) {
    rep.psi_well_defined = true;
    for (std::size_t i = 0; i < M.size() && rep.psi_well_defined; ++i) {
      const std::size_t p = M.generators()[i].degree + 1;
      if (!low[i] || !in_n[i] || p > mm.cap) continue;
      if (!hm.is_coboundary(p, project(p, fc->to_vector(p, M.differential(i))))) rep.psi_well_defined = false;
    }
    // closed elements of I(N^{≤s}) inside Λ V^{≤s} must be exact
    for (std::size_t p = 1; p <= check_to && !rep.psi_failure; ++p) {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < fc->dim(p); ++j) {
        const auto& m = fc->basis(p)[j];
        if (uses(m, [&](std::size_t i) { return !low[i]; })) continue;
        if (uses(m, [&](std::size_t i) { return in_n[i]; })) cols.push_back(j);
      }
      if (cols.empty()) continue;
      RationalMatrix D(fc->d(p).rows(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < D.rows(); ++r) D(r, c) = fc->d(p)(r, cols[c]);
      auto ker = D.rows() ? kernel(D) : std::vector<Vector>{};
      if (!D.rows())
        for (std::size_t c = 0; c < cols.size(); ++c) {
          Vector e(cols.size(), Rational(0));
          e[c] = 1;
          ker.push_back(e);
        }
      for (const auto& k : ker) {
        Vector z(fc->dim(p), Rational(0));
        for (std::size_t c = 0; c < cols.size(); ++c) z[cols[c]] = k[c];
        if (!hm.is_coboundary(p, z)) {
          rep.psi_failure = "psi([" + fc->describe(p, z) + "]) = 0 but [" + fc->describe(p, z) + "] != 0";
          break;
        }
      }
    }
    rep.psi_isomorphism = !rep.psi_failure.has_value();
    if (!opt.manifold_dim) {
      // ψ* on H^p(M) → H^p(M), through the cap
      for (std::size_t p = 0; p <= mm.cap && rep.psi_isomorphism; ++p) {
        std::vector<Vector> rows;
        for (const auto& z : hm.degree(p).reps) rows.push_back(hm.coords(p, project(p, z)));
        if (!rows.empty() && rank(RationalMatrix::from_rows(rows, hm.betti(p))) != rows.size()) rep.psi_isomorphism = false;
      }
    }
  }
  if (rep.decomposition_available && rep.psi_well_defined && rep.psi_isomorphism) {
    rep.verdict = Formality::Formal;
    std::string c = "C = {", n = "N = {";
    for (std::size_t i = 0; i < rep.closed_generators.size(); ++i) c += (i ? ", " : "") + rep.closed_generators[i];
    for (std::size_t i = 0; i < rep.other_generators.size(); ++i) n += (i ? ", " : "") + rep.other_generators[i];
    rep.certificate.push_back(c + "}, " + n + "}");
    rep.certificate.push_back("psi: C -> classes, N -> 0 is a CDGA map");
    if (rep.s)
      rep.certificate.push_back("every closed element of I(N) in Lambda V^{<=" + std::to_string(*rep.s) + "} is exact through degree " +
                                std::to_string(check_to) + "; " + std::to_string(*rep.s) + "-formal, hence formal in dimension " +
                                std::to_string(*opt.manifold_dim));
    else
      rep.certificate.push_back("every closed element of I(N) is exact and psi* is bijective through degree " + std::to_string(mm.cap));
    return rep;
  }
  GradedCohomology hs(mm.source);
  auto scan = massey_scan(hs, opt.massey_degrees, 1);
  if (!scan.nonvanishing.empty()) {
    rep.verdict = Formality::NotFormal;
    rep.massey = scan.nonvanishing.front();
    rep.massey_description = describe(hs, *rep.massey);
  }
  return rep;
}

}  // namespace solvcoh

#endif
