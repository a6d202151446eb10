#ifndef SOLVCOH_MASSEY_HPP
#define SOLVCOH_MASSEY_HPP

#include "solvcoh/free_cdga.hpp"

#include <array>
#include <random>

namespace solvcoh {

class UndefinedMassey : public SolvcohError {
 public:
  using SolvcohError::SolvcohError;
};

/// ⟨a, b, c⟩ with dx = αβ, dy = βγ and representative (−1)^{|a|}(xγ − (−1)^{|a|} αy).
struct MasseyTriple {
  std::size_t p = 0, q = 0, r = 0;
  Vector a, b, c;       // classes
  Vector x, y;          // bounding cochains
  Vector representative;
  Vector value;         // class of the representative
  std::vector<Vector> indeterminacy;  // spanning set in H^{p+q+r-1}
  bool vanishes = true;

  std::size_t degree() const { return p + q + r - 1; }
};

namespace detail {
inline Vector add_scaled(Vector a, const Vector& b, const Rational& s) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

inline bool in_span(const std::vector<Vector>& rows, const Vector& v, std::size_t width) {
  if (is_zero_vector(v)) return true;
  if (rows.empty()) return false;
  std::size_t r0 = rank(RationalMatrix::from_rows(rows, width));
  auto all = rows;
  all.push_back(v);
  return rank(RationalMatrix::from_rows(all, width)) == r0;
}

inline Vector random_cocycle(const GradedCohomology& h, std::size_t p, std::mt19937& rng) {
  const auto& cocycles = h.degree(p).cocycles;
  Vector z(h.cochains().dim(p), Rational(0));
  std::uniform_int_distribution<int> d(-3, 3);
  for (const auto& c : cocycles) z = add_scaled(z, c, Rational(d(rng)));
  return z;
}
}  // namespace detail

/// Triple Massey product of classes; bounding cochains are perturbed by random cocycles when a seed is given.
inline MasseyTriple massey_triple(const GradedCohomology& h, std::size_t p, const Vector& a, std::size_t q, const Vector& b, std::size_t r,
                                  const Vector& c, std::optional<unsigned> seed = std::nullopt) {
  const auto& C = h.cochains();
  MasseyTriple t{p, q, r, a, b, c, {}, {}, {}, {}, {}, true};
  if (p == 0 || q == 0 || r == 0) throw UndefinedMassey("Massey products need classes of positive degree");
  const std::size_t N = t.degree();
  if (p + q > h.top() || q + r > h.top()) throw UndefinedMassey("Massey product beyond the available degrees");
  Vector al = h.representative(p, a), be = h.representative(q, b), ga = h.representative(r, c);
  Vector ab = C.mul(p, al, q, be), bc = C.mul(q, be, r, ga);
  auto x = h.primitive(p + q, ab);
  auto y = h.primitive(q + r, bc);
  if (!x) throw UndefinedMassey("[a][b] != 0");
  if (!y) throw UndefinedMassey("[b][c] != 0");
  if (x->empty()) x = Vector(C.dim(p + q - 1), Rational(0));
  if (y->empty()) y = Vector(C.dim(q + r - 1), Rational(0));
  if (seed) {
    std::mt19937 rng(*seed);
    x = detail::add_scaled(*x, detail::random_cocycle(h, p + q - 1, rng), 1);
    y = detail::add_scaled(*y, detail::random_cocycle(h, q + r - 1, rng), 1);
  }
  t.x = *x;
  t.y = *y;
  if (N > h.top()) return t;
  const Rational sp = p % 2 ? -1 : 1;
  Vector rep = detail::add_scaled(C.mul(p + q - 1, t.x, r, ga), C.mul(p, al, q + r - 1, t.y), -sp);
  for (auto& v : rep) v *= sp;
  t.representative = rep;
  if (!h.is_cocycle(N, rep)) throw SolvcohError("Massey representative is not closed");
  t.value = h.coords(N, rep);
  for (std::size_t j = 0; j < h.betti(q + r - 1); ++j) t.indeterminacy.push_back(h.cup(p, a, q + r - 1, h.basis_class(q + r - 1, j)));
  for (std::size_t j = 0; j < h.betti(p + q - 1); ++j) t.indeterminacy.push_back(h.cup(p + q - 1, h.basis_class(p + q - 1, j), r, c));
  t.vanishes = detail::in_span(t.indeterminacy, t.value, h.betti(N));
  return t;
}

/// Recomputes closedness, the bounding equations and non-membership from the stored cochains.
inline bool verify_massey(const GradedCohomology& h, const MasseyTriple& t) {
  const auto& C = h.cochains();
  Vector al = h.representative(t.p, t.a), be = h.representative(t.q, t.b), ga = h.representative(t.r, t.c);
  if (C.apply_d(t.p + t.q - 1, t.x) != C.mul(t.p, al, t.q, be)) return false;
  if (C.apply_d(t.q + t.r - 1, t.y) != C.mul(t.q, be, t.r, ga)) return false;
  const std::size_t N = t.degree();
  if (N > h.top()) return t.vanishes;
  Vector lhs = C.mul(t.p + t.q - 1, t.x, t.r, ga), rhs = C.mul(t.p, al, t.q + t.r - 1, t.y);
  const Rational sp = t.p % 2 ? -1 : 1;
  Vector rep = detail::add_scaled(lhs, rhs, -sp);
  for (auto& v : rep) v *= sp;
  if (rep != t.representative || !h.is_cocycle(N, rep)) return false;
  std::vector<Vector> span;
  for (std::size_t j = 0; j < h.betti(t.q + t.r - 1); ++j) span.push_back(h.cup(t.p, t.a, t.q + t.r - 1, h.basis_class(t.q + t.r - 1, j)));
  for (std::size_t j = 0; j < h.betti(t.p + t.q - 1); ++j) span.push_back(h.cup(t.p + t.q - 1, h.basis_class(t.p + t.q - 1, j), t.r, t.c));
  return detail::in_span(span, h.coords(N, rep), h.betti(N)) == t.vanishes;
}

inline std::string describe(const GradedCohomology& h, const MasseyTriple& t) {
  const auto& C = h.cochains();
  auto cls = [&](std::size_t p, const Vector& v) { return "[" + C.describe(p, h.representative(p, v)) + "]"; };
  std::string s = "<" + cls(t.p, t.a) + ", " + cls(t.q, t.b) + ", " + cls(t.r, t.c) + ">";
  if (t.representative.empty()) return s + " = 0 (beyond top degree)";
  return s + " contains [" + C.describe(t.degree(), t.representative) + "]" + (t.vanishes ? ", vanishes" : ", not in the indeterminacy");
}

struct MasseyScan {
  std::size_t defined = 0;
  std::vector<MasseyTriple> nonvanishing;
};

/// All triples of basis classes in the given degrees with vanishing pairwise products.
inline MasseyScan massey_scan(const GradedCohomology& h, const std::vector<std::array<std::size_t, 3>>& degrees = {{1, 1, 1}},
                              std::size_t stop_after = 0) {
  MasseyScan s;
  for (const auto& [p, q, r] : degrees) {
    if (p + q > h.top() || q + r > h.top() || p + q + r - 1 > h.top()) continue;
    for (std::size_t i = 0; i < h.betti(p); ++i)
      for (std::size_t j = 0; j < h.betti(q); ++j)
        for (std::size_t k = 0; k < h.betti(r); ++k) {
          auto a = h.basis_class(p, i), b = h.basis_class(q, j), c = h.basis_class(r, k);
          if (!is_zero_vector(h.cup(p, a, q, b)) || !is_zero_vector(h.cup(q, b, r, c))) continue;
          ++s.defined;
          auto t = massey_triple(h, p, a, q, b, r, c);
          if (!t.vanishes) {
            s.nonvanishing.push_back(std::move(t));
            if (stop_after && s.nonvanishing.size() >= stop_after) return s;
          }
        }
  }
  return s;
}

}  // namespace solvcoh

#endif
