#include <catch2/catch_amalgamated.hpp>

#include "solvcoh/catalog.hpp"
#include "solvcoh/formality.hpp"
#include "solvcoh/umodule.hpp"

#include <random>

using namespace solvcoh;

namespace {

void check_model(const MinimalModel& mm) {
  CHECK(mm.model.is_minimal());
  CHECK(is_chain_map(mm));
  auto qi = quasi_isomorphism_check(mm);
  for (std::size_t p = 0; p < qi.size(); ++p) {
    INFO("degree " << p);
    CHECK(qi[p].bijective());
  }
}

FreeCdga beta_model() {
  FreeCdga f;
  f.add_generator("A", 1);
  auto x = f.add_generator("x", 2);
  f.add_generator("beta", 3, f.mul(f.gen(x), f.gen(x)));
  f.add_generator("y", 3);
  return f;
}

RationalMatrix random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  while (true) {
    RationalMatrix P(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) P(i, j) = d(rng);
    if (rank(P) == n) return P;
  }
}

}  // namespace

TEST_CASE("free CDGA arithmetic", "[homotopy]") {
  FreeCdga f;
  auto a = f.add_generator("a", 1), b = f.add_generator("b", 1), x = f.add_generator("x", 2);
  auto ab = f.mul(f.gen(a), f.gen(b)), ba = f.mul(f.gen(b), f.gen(a));
  CHECK(ab == scaled(ba, Rational(-1)));
  CHECK(f.mul(f.gen(a), f.gen(a)).empty());
  CHECK(f.mul(f.gen(x), f.gen(a)) == f.mul(f.gen(a), f.gen(x)));
  auto z = f.add_generator("z", 1, ab);
  CHECK(f.d(f.gen(z)) == ab);
  // Leibniz: d(z x) = dz x - z dx
  CHECK(f.d(f.mul(f.gen(z), f.gen(x))) == f.mul(ab, f.gen(x)));
  CHECK_THROWS_AS(f.add_generator("w", 1, f.gen(a)), SolvcohError);  // wrong degree
  FreeCdga g;
  auto u = g.add_generator("u", 1), v = g.add_generator("v", 1);
  auto t = g.add_generator("t", 1, g.mul(g.gen(u), g.gen(v)));
  auto w = g.add_generator("w", 1);
  CHECK_THROWS_WITH(g.add_generator("bad", 1, g.mul(g.gen(t), g.gen(w))), Catch::Matchers::ContainsSubstring("d^2"));
  CHECK(f.basis(2).size() == 4);  // ab, az, bz, x
  CHECK(f.to_string(ab) == "a*b");
}

TEST_CASE("minimal models", "[homotopy]") {
  auto r6 = minimal_model(abelian_algebra(6), 6);
  check_model(r6);
  CHECK(r6.generator_counts() == std::vector<std::size_t>{0, 6, 0, 0, 0, 0, 0});
  for (std::size_t i = 0; i < 6; ++i) CHECK(r6.model.differential(i).empty());

  auto g610 = minimal_model(modify(catalog_build("g6.10")), 3);
  check_model(g610);
  CHECK(g610.generator_counts() == std::vector<std::size_t>{0, 6, 0, 0});
  std::size_t nonclosed = 0;
  for (std::size_t i = 0; i < g610.model.size(); ++i) nonclosed += !g610.model.differential(i).empty();
  CHECK(nonclosed == 2);

  auto g68 = catalog_build("g6.8");
  auto inv = minimal_model(invariant_cdga(compact_action(g68, Rational(1, 2))), 3);
  check_model(inv);
  CHECK(inv.generator_counts() == std::vector<std::size_t>{0, 1, 1, 2});
  std::size_t relations = 0;
  for (std::size_t i = 0; i < inv.model.size(); ++i)
    if (!inv.model.differential(i).empty()) {
      ++relations;
      CHECK(inv.model.generators()[i].degree == 3);
      CHECK(inv.model.differential(i) == inv.model.mul(inv.model.gen(1), inv.model.gen(1)));  // Dβ = x²
    }
  CHECK(relations == 1);

  auto full = minimal_model(modify(g68), 7);
  check_model(full);
  CHECK(full.generator_counts() == std::vector<std::size_t>{0, 3, 0, 1, 0, 0, 0, 0});

  auto b = minimal_model(beta_model(), 7);
  check_model(b);
  CHECK_THROWS_AS(minimal_model(abelian_algebra(2), 0), SolvcohError);
}

TEST_CASE("model generator counts do not depend on the basis", "[homotopy]") {
  std::mt19937 rng(5);
  for (const std::string name : {"g6.10", "g5.14+R", "g5.18+R", "g6.8"}) {
    auto g = modify(catalog_build(name));
    auto counts = minimal_model(g, 4).generator_counts();
    for (int t = 0; t < 3; ++t) {
      auto h = change_basis(g, random_invertible(rng, 6));
      auto mm = minimal_model(h, 4);
      CHECK(mm.generator_counts() == counts);
      CHECK(is_chain_map(mm));
    }
  }
}

TEST_CASE("Massey products", "[homotopy]") {
  auto torus = graded_cohomology(FiniteCdga::of(abelian_algebra(4)));
  auto all = massey_scan(torus, {{1, 1, 1}});
  CHECK(all.defined > 0);
  CHECK(all.nonvanishing.empty());

  auto h610 = graded_cohomology(FiniteCdga::of(modify(catalog_build("g6.10"))));
  auto scan = massey_scan(h610, {{1, 1, 1}});
  REQUIRE_FALSE(scan.nonvanishing.empty());
  for (const auto& t : scan.nonvanishing) {
    CHECK(verify_massey(h610, t));
    CHECK(t.degree() == 2);
    CHECK(h610.is_cocycle(2, t.representative));
    for (unsigned seed = 1; seed <= 5; ++seed) {
      auto u = massey_triple(h610, t.p, t.a, t.q, t.b, t.r, t.c, seed);
      CHECK(u.vanishes == t.vanishes);
      CHECK(verify_massey(h610, u));
    }
  }
  auto h514 = graded_cohomology(FiniteCdga::of(modify(catalog_build("g5.14+R"))));
  auto s514 = massey_scan(h514, {{1, 1, 1}});
  REQUIRE_FALSE(s514.nonvanishing.empty());
  CHECK(verify_massey(h514, s514.nonvanishing.front()));

  // undefined products
  auto h = graded_cohomology(FiniteCdga::of(abelian_algebra(3)));
  CHECK_THROWS_AS(massey_triple(h, 1, h.basis_class(1, 0), 1, h.basis_class(1, 1), 1, h.basis_class(1, 2)), UndefinedMassey);
}

TEST_CASE("formality verdicts", "[homotopy]") {
  FormalityOptions six;
  six.manifold_dim = 6;
  auto g68 = catalog_build("g6.8");
  auto f68 = formality_verdict(minimal_model(invariant_cdga(compact_action(g68, Rational(2))), 7), six);
  CHECK(f68.verdict == Formality::Formal);
  CHECK(f68.s == std::size_t(2));

  auto g610 = catalog_build("g6.10");
  auto m610 = minimal_model(invariant_cdga(compact_action(g610, Rational(2))), 7);
  auto f610 = formality_verdict(m610, six);
  CHECK(f610.verdict == Formality::NotFormal);
  REQUIRE(f610.psi_failure);
  CHECK_THAT(*f610.psi_failure, Catch::Matchers::ContainsSubstring("= 0 but"));
  REQUIRE(f610.massey);
  CHECK(verify_massey(GradedCohomology(m610.source), *f610.massey));
  CHECK_FALSE(f610.massey->vanishes);

  auto fb = formality_verdict(minimal_model(beta_model(), 7));
  CHECK(fb.verdict == Formality::Formal);
  CHECK(fb.psi_isomorphism);
  // the β-model and its cohomology agree through degree 7
  auto fcb = std::make_shared<FreeCochains>(beta_model(), 7);
  GradedCohomology hb(fcb);
  CHECK(hb.betti_numbers() == std::vector<std::size_t>{1, 1, 1, 2, 1, 1, 1, 0});

  CHECK(formality_verdict(minimal_model(abelian_algebra(6), 7), six).verdict == Formality::Formal);
  // non-formal verdicts always carry a Massey witness
  for (const auto& name : catalog_names()) {
    auto mm = minimal_model(modify(catalog_build(name)), 4);
    auto r = formality_verdict(mm, six);
    if (r.verdict == Formality::NotFormal) {
      REQUIRE(r.massey);
      CHECK(verify_massey(GradedCohomology(mm.source), *r.massey));
    }
  }
}

TEST_CASE("nilpotent submodule", "[homotopy]") {
  ExteriorAlgebra fib(5);
  auto id = nilpotent_submodule_U({KMatrix::identity(1), KMatrix::identity(5), KMatrix::identity(10)});
  CHECK(id.dims() == std::vector<std::size_t>{1, 5, 10});
  KMatrix two(1, 1);
  two(0, 0) = KElement(2);
  CHECK(nilpotent_submodule_U({two}).dims() == std::vector<std::size_t>{0});
  KMatrix jordan = KMatrix::identity(2);
  jordan(0, 1) = KElement(1);
  CHECK(nilpotent_submodule_U({jordan}).dims() == std::vector<std::size_t>{2});

  auto g68 = catalog_build("g6.8");
  auto sur = root_surrogate(UniPoly(std::vector<Rational>{-1, 5, -6, 1}), {-8, 6, 2});
  auto u = nilpotent_submodule_U(fiber_representation(monodromy(present(g68), Rational(2), sur)));
  auto names = [&](std::size_t p) {
    std::vector<std::string> out;
    for (const auto& v : *u.rational[p]) out.push_back(fib.form_to_string(p, v));
    return out;
  };
  CHECK(names(1) == std::vector<std::string>{"a4", "a5"});
  auto n2 = names(2);
  CHECK(std::find(n2.begin(), n2.end(), "a45") != n2.end());
  CHECK(names(5) == std::vector<std::string>{"a12345"});

  auto chk = oprea_tralle_check(g68, Rational(2), sur, 7);
  CHECK(chk.diagnostic.empty());
  CHECK(chk.model_betti == std::vector<std::size_t>{1, 3, 3, 2, 3, 3, 1});
  auto sur4 = root_surrogate(UniPoly(std::vector<Rational>{-1, 5, -6, 1}), {-2, Rational(3, 2), Rational(1, 2)});
  auto quarter = oprea_tralle_check(g68, Rational(1, 2), sur4, 5);
  CHECK(quarter.diagnostic.empty());
}
