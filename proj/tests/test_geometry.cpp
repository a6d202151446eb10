#include <catch2/catch_amalgamated.hpp>

#include "solvcoh/almost_abelian.hpp"
#include "solvcoh/catalog.hpp"
#include "solvcoh/geometry.hpp"

using namespace solvcoh;

namespace {

std::vector<LieAlgebra> zoo() {
  std::vector<LieAlgebra> v{abelian_algebra(6), abelian_algebra(4), abelian_algebra(2)};
  for (const auto& n : catalog_names()) {
    auto g = catalog_build(n);
    v.push_back(g);
    v.push_back(modify(g));
  }
  return v;
}

Vector standard_form(const ExteriorAlgebra& e) {
  Vector w(e.size(2), Rational(0));
  for (std::size_t i = 0; i + 1 < e.n(); i += 2) w[e.index((Mask(1) << i) | (Mask(1) << (i + 1)))] = 1;
  return w;
}

LieAlgebra heisenberg_plus_r3() {
  LieAlgebra g(6);
  g.add_bracket_term(0, 2, 5, Rational(-1));  // dα⁶ = α¹³
  return g;
}

}  // namespace

TEST_CASE("closed two-form families", "[geometry]") {
  for (const auto& g : zoo()) {
    auto f = closed_two_forms(g);
    ExteriorAlgebra e(g);
    for (const auto& b : f.basis) CHECK(is_zero_vector(e.apply_d(2, b)));
    auto gen = f.generic();
    std::vector<MPoly> dgen(e.size(3));
    for (std::size_t j = 0; j < gen.size(); ++j)
      for (std::size_t i = 0; i < dgen.size(); ++i)
        if (!is_zero(e.d(2)(i, j))) dgen[i] += gen[j].scaled(e.d(2)(i, j));
    for (const auto& x : dgen) CHECK(x.is_zero());
    if (!f.pfaffian.is_zero()) CHECK(f.pfaffian.total_degree() == static_cast<int>(e.n() / 2));
    // ω^n / n! = Pf · vol
    std::mt19937 rng(3);
    for (int t = 0; t < 5 && f.size(); ++t) {
      auto w = random_point(rng, f.size());
      auto form = f.member(w);
      Vector top{Rational(1)};
      std::size_t p = 0;
      for (std::size_t k = 0; k < e.n() / 2; ++k, p += 2) top = e.wedge(p, top, 2, form);
      Rational fact = 1;
      for (std::size_t k = 2; k <= e.n() / 2; ++k) fact *= Rational(static_cast<long>(k));
      CHECK(top[0] / fact == form_pfaffian(e, form));
      CHECK(f.pfaffian.evaluate(w) == form_pfaffian(e, form));
    }
  }
}

TEST_CASE("symplectic existence", "[geometry]") {
  auto g68 = catalog_build("g6.8");
  CHECK_FALSE(symplectic_exists(g68).exists);
  CHECK_FALSE(symplectic_exists(modify(g68)).exists);
  auto g610 = catalog_build("g6.10");
  auto s = symplectic_exists(g610);
  REQUIRE(s.exists);
  CHECK(s.condition == "w16*w23*w45 != 0");
  CHECK(s.family.pfaffian.is_monomial());
  REQUIRE(s.sample);
  CHECK(!is_zero(form_pfaffian(ExteriorAlgebra(g610), *s.sample)));
  CHECK(symplectic_exists(catalog_build("g6.10", {{"a", 1}})).exists == false);
  CHECK(symplectic_exists(abelian_algebra(6)).exists);
  CHECK_THROWS_AS(symplectic_exists(abelian_algebra(3)), SolvcohError);
}

TEST_CASE("symplectic existence agrees with brute force", "[geometry]") {
  std::mt19937 rng(11);
  for (const auto& g : zoo()) {
    auto f = closed_two_forms(g);
    ExteriorAlgebra e(g);
    bool found = false;
    for (int t = 0; t < 200 && f.size() && !found; ++t) found = !is_zero(form_pfaffian(e, f.member(random_point(rng, f.size()))));
    CHECK(symplectic_exists(g).exists == found);
  }
}

TEST_CASE("Lefschetz on tori", "[geometry]") {
  for (std::size_t n : {1u, 2u, 3u}) {
    auto g = abelian_algebra(2 * n);
    auto h = Cohomology::of(g);
    auto w = h.coords(2, standard_form(*h.algebra().ambient));
    auto r = lefschetz_degree(h, w, n);
    CHECK(r.top_power_nonzero);
    CHECK(r.hard());
    for (const auto& st : r.steps) CHECK(st.isomorphism);
    // rescaling keeps every rank
    Vector w3 = w;
    for (auto& x : w3) x *= Rational(-3, 2);
    auto r3 = lefschetz_degree(h, w3, n);
    for (std::size_t k = 0; k < r.steps.size(); ++k) CHECK(r3.steps[k].rank == r.steps[k].rank);
  }
  auto h = Cohomology::of(abelian_algebra(4));
  Vector degenerate(h.betti(2), Rational(0));
  degenerate[0] = 1;  // α12 alone
  auto r = lefschetz_degree(h, degenerate, 1);
  CHECK_FALSE(r.top_power_nonzero);
  CHECK_FALSE(r.s_lefschetz(0));
  CHECK_THROWS_AS(lefschetz_degree(h, Vector{1}, 1), SolvcohError);
}

TEST_CASE("generic Lefschetz verdicts", "[geometry]") {
  auto g610 = modify(catalog_build("g6.10"));
  auto L = generic_lefschetz(g610, 2);
  CHECK(L.top_power_nonzero);
  CHECK(L.isomorphism == std::vector<bool>{true, false, false});
  CHECK(L.s_lefschetz(0));
  CHECK_FALSE(L.s_lefschetz(1));
  auto Ls = generic_lefschetz(g610, 2, 5, 2, true);
  CHECK(Ls.symbolic);
  CHECK(Ls.generic_rank == L.generic_rank);

  auto g517 = modify(catalog_build("g5.17+R", {{"p", Rational(1, 2)}}));
  auto L17 = generic_lefschetz(g517, 2);
  CHECK(L17.isomorphism == std::vector<bool>{true, true, true});
  CHECK(generic_lefschetz(g517, 2, 9, 2, true).generic_rank == L17.generic_rank);

  // sample independence of verdicts
  for (unsigned seed : {2u, 3u, 4u}) CHECK(generic_lefschetz(g610, 2, seed).isomorphism == L.isomorphism);
  CHECK_THROWS_AS(generic_lefschetz(catalog_build("g6.8"), 2), SolvcohError);
}

TEST_CASE("half-flat verification", "[geometry]") {
  auto t = abelian_algebra(6);
  auto flat = su3_from_coframe(ExteriorAlgebra(t), RationalMatrix::identity(6));
  auto r = half_flat_verify(t, flat);
  for (const auto& [what, ok] : r.checks()) CHECK(ok);
  CHECK(r.symplectic_half_flat);

  auto h = heisenberg_plus_r3();
  auto rh = half_flat_verify(h, su3_from_coframe(ExteriorAlgebra(h), RationalMatrix::identity(6)));
  CHECK(rh.half_flat);
  CHECK_FALSE(rh.d_omega);
  CHECK_FALSE(rh.symplectic_half_flat);

  // sampled adapted coframes on g6.10 and its modification
  for (const auto& g : {catalog_build("g6.10"), modify(catalog_build("g6.10"))}) {
    ExteriorAlgebra e(g);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-2, 2);
    int tried = 0;
    while (tried < 200) {
      RationalMatrix P(6, 6);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) P(i, j) = d(rng);
      if (rank(P) < 6) continue;
      ++tried;
      auto rep = half_flat_verify(g, su3_from_coframe(e, P));
      CHECK(rep.omega_re_psi);
      CHECK(rep.omega_im_psi);
      CHECK(rep.nondegenerate);
      CHECK_FALSE((rep.d_omega_squared && rep.d_re_psi));
    }
  }
  SU3Candidate bad{Vector(3), Vector(20), Vector(20)};
  CHECK_THROWS_AS(half_flat_verify(t, bad), SolvcohError);
}
