#include <catch_amalgamated.hpp>

#include "solvcoh/catalog.hpp"
#include "solvcoh/lattice_symbolic.hpp"
#include "solvcoh/monodromy.hpp"

using namespace solvcoh;

namespace {

UniPoly cubic(long h1, long h2) {
  return UniPoly(std::vector<Rational>{Rational(-1), Rational(h1), Rational(-h2), Rational(1)});
}

}  // namespace

TEST_CASE("monodromy matrices", "[almost-abelian]") {
  auto p35 = present(catalog_build("g3.5+R3"));
  auto m = monodromy(p35, Rational(1, 2));
  auto r = as_rational(m.M);
  REQUIRE(r);
  RationalMatrix expect = RationalMatrix::identity(5);
  expect(0, 0) = 0;
  expect(1, 1) = 0;
  expect(0, 1) = 1;
  expect(1, 0) = -1;
  CHECK(*r == expect);
  CHECK(*as_rational(monodromy(p35, Rational(0)).M) == RationalMatrix::identity(5));
  auto p517 = present(catalog_build("g5.17+R", {{"p", Rational(0)}, {"r", Rational(2)}}));
  auto m517 = as_rational(monodromy(p517, Rational(1)).M);
  REQUIRE(m517);
  RationalMatrix d = RationalMatrix::identity(5);
  d(0, 0) = -1;
  d(1, 1) = -1;
  CHECK(*m517 == d);
  // cos(π/6) is irrational but lives in the default field
  auto m6 = monodromy(p35, Rational(1, 6));
  CHECK_FALSE(as_rational(m6.M));
  CHECK(std::abs(m6.M(0, 0).approx().real() - std::sqrt(3.0) / 2) < 1e-12);
  CHECK_THROWS_AS(monodromy(present(catalog_build("g6.8")), Rational(2)), TranscendentalEntry);
  CHECK_THROWS_AS(monodromy(present(catalog_build("g6.11")), Rational(2)), TranscendentalEntry);
  auto m610 = monodromy(present(catalog_build("g6.10", {{"a", Rational(0)}})), Rational(2));
  CHECK(m610.unipotent_rescaled);
}

TEST_CASE("lattice integrality for g3.5 + R3", "[almost-abelian]") {
  auto p = present(catalog_build("g3.5+R3"));
  for (auto q : {Rational(2), Rational(1), Rational(1, 2), Rational(2, 3), Rational(1, 3)}) {
    auto M = monodromy(p, q).M;
    auto rep = lattice_integrality(M);
    INFO(q.get_str() << " " << rep.reason);
    CHECK(rep.verdict == LatticeVerdict::VerifiedByWitness);
    REQUIRE(rep.P);
    CHECK(M * *rep.P == *rep.P * to_k(*rep.E));
  }
  auto bad = lattice_integrality(monodromy(p, Rational(1, 4)).M);
  CHECK(bad.verdict == LatticeVerdict::NecessaryFail);
}

TEST_CASE("rational canonical form witnesses", "[almost-abelian]") {
  // unipotent monodromy of g6.10 with a shift block
  auto M = monodromy(present(catalog_build("g6.10", {{"a", Rational(0)}})), Rational(2)).M;
  auto rep = lattice_integrality(M);
  CHECK(rep.verdict == LatticeVerdict::VerifiedByWitness);
  CHECK(rep.char_poly == pow(UniPoly::x() - UniPoly::constant(Rational(1)), 5));
  // g5.18 at t = π: complex Jordan structure
  for (auto q : {Rational(2), Rational(1), Rational(1, 2), Rational(1, 3)}) {
    auto r = lattice_integrality(monodromy(present(catalog_build("g5.18+R")), q).M);
    INFO(q.get_str() << " " << r.reason);
    CHECK(r.verdict == LatticeVerdict::VerifiedByWitness);
  }
  // a non-rational Jordan structure over a number field is rejected
  auto K = stem_field(UniPoly(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)}), "r2");
  KElement s2 = KElement::generator(K);
  KMatrix J(2, 2);
  J(0, 0) = s2;
  J(1, 1) = KElement(0) - s2;
  CHECK(lattice_integrality(J).verdict == LatticeVerdict::NecessaryFail);  // char poly x^2 - 2, det -2
}

TEST_CASE("G6.8 lattice at 2π over the cubic stem field", "[almost-abelian]") {
  UniPoly f = cubic(5, 6);
  auto K = stem_field(f, "t");
  auto roots = roots_in_field(f, K);
  REQUIRE(roots.size() == 3);
  auto g = catalog_build("g6.8");  // a=-4, b=3, c=1 stand in for the exponents
  std::map<Rational, KElement> values{{Rational(-8), roots[0]}, {Rational(6), roots[1]}, {Rational(2), roots[2]}};
  ExpSurrogate sur = [&](const Rational& x) -> std::optional<KElement> {
    auto it = values.find(x);
    if (it == values.end()) return std::nullopt;
    return it->second;
  };
  auto M = monodromy(present(g), Rational(2), sur).M;
  auto rep = lattice_integrality(M);
  CHECK(rep.verdict == LatticeVerdict::VerifiedByWitness);
  CHECK(*rep.char_poly == f * pow(UniPoly::x() - UniPoly::constant(Rational(1)), 2));
  CHECK(*rep.min_poly == f * (UniPoly::x() - UniPoly::constant(Rational(1))));
  RationalMatrix E = block_diagonal({companion(f), RationalMatrix::identity(2)});
  CHECK(E(0, 2) == 1);
  CHECK(E(1, 2) == -5);
  CHECK(E(2, 2) == 6);
  auto given = lattice_integrality(M, E);
  CHECK(given.verdict == LatticeVerdict::VerifiedByWitness);
  CHECK(given.reason == "supplied integer witness verified");
  // positivity of the eigenvalues
  for (const auto& r : roots) CHECK(r.approx().real() > 0);
}

TEST_CASE("lattice system", "[almost-abelian]") {
  auto r = lattice_system_check(5, 6);
  CHECK(r.satisfiable);
  CHECK(r.eliminant == UniPoly(std::vector<Rational>{Rational(-1), Rational(6), Rational(-5), Rational(1)}));
  CHECK(r.r_of_s == UniPoly(std::vector<Rational>{Rational(0), Rational(5), Rational(-1)}));
  REQUIRE_FALSE(r.witnesses.empty());
  // oracle: the witness root satisfies the constraints in floating point
  for (const auto& w : r.witnesses) {
    auto iv = refine_root(r.eliminant, w, Rational(1, 1000000));
    double s = iv.approx(), rr = 5 * s - s * s;
    CHECK(rr > 0);
    CHECK(s > 0);
    CHECK(s <= rr * rr / 4);
  }
  CHECK_FALSE(lattice_system_check(0, 0).satisfiable);
  CHECK_FALSE(lattice_system_check(3, 3).satisfiable);  // eliminant (s-1)^3
}

TEST_CASE("g6.11 at the rotation period is not a lattice", "[almost-abelian]") {
  CatalogOptions rat;
  rat.rational_symbols = {"s"};
  auto g = catalog_build("g6.11", {{"s", Rational(3, 2)}}, rat);
  auto rep = g611_rotation_period_check(g);
  CHECK(rep.report.verdict == LatticeVerdict::NecessaryFail);
  CHECK(rep.min_poly_coefficients.size() == 4);
  CHECK(rep.steps.size() == 7);
  CHECK_THROWS_AS(g611_rotation_period_check(catalog_build("g6.11")), SolvcohError);
  // numeric spot check of the symbolic coefficients at P = 2, Q = 3
  SRF P = SRF::var(0), Q = SRF::var(1);
  auto mp = product_of_distinct({SRF(1) / (P * P * Q * Q), P, Q});
  Rational al = Rational(1, 6), be = al * 5;
  CHECK(mp.coeff(1).evaluate({Rational(2), Rational(3)}) == (al * al * be + 1) / al);
}
