#include <catch_amalgamated.hpp>

#include "solvcoh/catalog.hpp"
#include "solvcoh/io.hpp"
#include "solvcoh/lie_algebra.hpp"

#include <random>

using namespace solvcoh;

namespace {

LieAlgebra g35() {
  LieAlgebra g(6);
  g.add_bracket_term(0, 2, 1, Rational(-1));
  g.add_bracket_term(1, 2, 0, Rational(1));
  return g;
}

Rational rnd(std::mt19937& rng, int lo, int hi, int den = 4) {
  std::uniform_int_distribution<int> d(lo * den, hi * den);
  return make_rational(d(rng), den);
}

// random parameters satisfying each schema
ParamMap sample(const std::string& name, std::mt19937& rng) {
  ParamMap m;
  auto nonzero = [&](int lo, int hi) {
    Rational q;
    do q = rnd(rng, lo, hi); while (q == 0);
    return q;
  };
  if (name == "g6.8") {
    while (true) {
      Rational b = nonzero(-3, 3), c = nonzero(-3, 3), p = rnd(rng, -1, 1);
      Rational a = -b - c - 2 * p;
      if (abs_value(c) <= abs_value(b) && abs_value(b) <= abs_value(a)) return {{"a", a}, {"b", b}, {"c", c}, {"p", p}};
    }
  }
  if (name == "g6.9") {
    while (true) {
      Rational b = rnd(rng, -2, 2), p = rnd(rng, -2, 2);
      if (b + p != 0) return {{"a", -2 * b - 2 * p}, {"b", b}, {"p", p}};
    }
  }
  if (name == "g6.10") return {{"a", rnd(rng, -2, 2)}};
  if (name == "g6.11") {
    while (true) {
      Rational p = rnd(rng, -2, 2), q = rnd(rng, -2, 2);
      if (p + q != 0) return {{"a", -2 * p - 2 * q}, {"p", p}, {"q", q}, {"s", nonzero(-3, 3)}};
    }
  }
  if (name == "g6.12" || name == "g4.6+R2") return {{"p", name == "g4.6+R2" ? Rational(abs_value(nonzero(-3, 3))) : nonzero(-3, 3)}};
  if (name == "g5.13+R") {
    Rational q;
    do q = rnd(rng, -1, 0, 8); while (q == Rational(-1, 2));
    return {{"q", q}, {"r", nonzero(-3, 3)}};
  }
  if (name == "g5.17+R") return {{"p", rnd(rng, -2, 2)}, {"r", nonzero(-3, 3)}};
  return m;
}

}  // namespace

TEST_CASE("validate examples", "[lie-algebra]") {
  CHECK(validate(abelian_algebra(6)).valid);
  CHECK(validate(g35()).valid);
  LieAlgebra bad = g35();
  bad.set_raw(0, 2, 1, Rational(1));  // c_{13}^2 flipped in one of its two slots
  auto rep = validate(bad);
  CHECK_FALSE(rep.valid);
  REQUIRE(rep.triple);
  CHECK(*rep.triple == std::array<std::size_t, 3>{1, 2, 3});
  LieAlgebra nj(3);  // [X1,X2]=X3, [X1,X3]=X1
  nj.add_bracket_term(0, 1, 2, Rational(1));
  nj.add_bracket_term(0, 2, 0, Rational(1));
  auto r2 = validate(nj);
  CHECK_FALSE(r2.valid);
  REQUIRE(r2.triple);
  CHECK(*r2.triple == std::array<std::size_t, 3>{1, 2, 3});
}

TEST_CASE("unimodularity and complete solvability", "[lie-algebra]") {
  LieAlgebra aff(2);
  aff.add_bracket_term(0, 1, 0, Rational(1));
  CHECK_FALSE(is_unimodular(aff));
  CHECK(is_completely_solvable(aff));
  CHECK(is_unimodular(abelian_algebra(6)));
  CHECK(is_completely_solvable(abelian_algebra(6)));
  CHECK_FALSE(is_completely_solvable(g35()));
  CHECK(is_unimodular(catalog_build("g6.8")));
}

TEST_CASE("catalog examples", "[lie-algebra]") {
  LieAlgebra g = catalog_build("g6.10", {{"a", Rational(0)}});
  LieAlgebra e(6);
  e.add_bracket_term(1, 5, 0, Rational(1));
  e.add_bracket_term(2, 5, 1, Rational(1));
  e.add_bracket_term(3, 5, 4, Rational(-1));
  e.add_bracket_term(4, 5, 3, Rational(1));
  CHECK(g == e);

  LieAlgebra h = catalog_build("g5.17+R", {{"p", Rational(0)}, {"r", Rational(1)}});
  LieAlgebra f(6);
  f.add_bracket_term(0, 4, 1, Rational(-1));
  f.add_bracket_term(1, 4, 0, Rational(1));
  f.add_bracket_term(2, 4, 3, Rational(-1));
  f.add_bracket_term(3, 4, 2, Rational(1));
  CHECK(h == f);

  CHECK_THROWS_AS(catalog_build("g6.8", {{"a", Rational(1)}, {"b", Rational(1)}, {"c", Rational(1)}, {"p", Rational(0)}}), SolvcohError);
  CHECK_THROWS_AS(catalog_build("g6.8", {{"b", Rational(1)}, {"c", Rational(3)}}), SolvcohError);  // |c| > |b|
  CHECK_THROWS_AS(catalog_build("g5.17+R", {{"r", Rational(0)}}), SolvcohError);
  CHECK_THROWS_AS(catalog_build("g7.1"), SolvcohError);
  CHECK_THROWS_AS(catalog_build("g6.10", {{"zzz", Rational(0)}}), SolvcohError);
}

TEST_CASE("surrogate genericity certificates", "[lie-algebra]") {
  for (const auto& name : catalog_names()) CHECK_NOTHROW(catalog_build(name));
  auto g = catalog_build("g6.8");
  CHECK(g.parameters.at("a") == -4);
  CHECK(g.parameters.at("b") == 3);
  CHECK(g.parameters.at("c") == 1);
  // b = c resonates: b - c = 0 although not identically zero
  CHECK_THROWS_AS(catalog_build("g6.8", {{"b", Rational(1)}, {"c", Rational(1)}}), SolvcohError);
  // q = -1/4 in g5.13: -(−1−2q) + 2q = 1 + 4q vanishes
  CHECK_THROWS_AS(catalog_build("g5.13+R", {{"q", Rational(-1, 4)}}), SolvcohError);
  CHECK_NOTHROW(catalog_build("g6.11", {{"s", Rational(2)}}));
  CHECK(catalog_build("g6.11").irrational_symbols.count("s") == 1);
  CatalogOptions rat;
  rat.rational_symbols = {"s"};
  CHECK(catalog_build("g6.11", {{"s", Rational(2)}}, rat).irrational_symbols.empty());
}

TEST_CASE("catalog entries are valid, unimodular and solvable for random parameters", "[lie-algebra]") {
  std::mt19937 rng(42);
  for (const auto& e : catalog()) {
    for (int t = 0; t < 20; ++t) {
      ParamMap m = sample(e.name, rng);
      for (const auto& ps : e.params)
        if (!m.count(ps.name)) m[ps.name] = ps.default_value;
      REQUIRE_NOTHROW(e.check(m));
      LieAlgebra g = e.build(m);
      INFO(e.name);
      CHECK(validate(g).valid);
      CHECK(is_unimodular(g));
      CHECK(is_solvable(g));
    }
  }
}

TEST_CASE("derived series", "[lie-algebra]") {
  CHECK(derived_series_dims(catalog_build("g6.10")) == std::vector<std::size_t>{6, 4, 0});
  CHECK(derived_series_dims(abelian_algebra(4)) == std::vector<std::size_t>{4, 0});
  LieAlgebra so3(3);
  so3.add_bracket_term(0, 1, 2, Rational(1));
  so3.add_bracket_term(0, 2, 1, Rational(-1));
  so3.add_bracket_term(1, 2, 0, Rational(1));
  CHECK_FALSE(is_solvable(so3));
  CHECK(is_nilpotent_algebra(catalog_build("g5.14+R")) == false);
}

TEST_CASE("parser", "[lie-algebra][cli]") {
  auto g = parse_algebra("dim 6; [1,3] = -1*2; [2,3] = 1*1;");
  CHECK(g == g35());
  CHECK(parse_algebra("dim 2;").is_abelian());
  auto so3 = parse_algebra("dim 3; [1,2]=1*3; [1,3]=-1*2; [2,3]=1*1;");
  CHECK_FALSE(is_solvable(so3));
  auto p = parse_algebra("# comment\ndim 4;\nparam t = -3/2;\n[1,4] = 1/2*1 - 3*2 + -1*3; # trailing\n");
  CHECK(p.parameters.at("t") == Rational(-3, 2));
  CHECK(p.structure_constant(0, 3, 0) == Rational(1, 2));
  CHECK(p.structure_constant(0, 3, 1) == -3);
  CHECK(p.structure_constant(0, 3, 2) == -1);
  try {
    parse_algebra("dim 3;\n[1,2] = 1*3;\n[1,2] = 1*3;\n");
    FAIL("duplicate accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
  try {
    parse_algebra("dim 3;\n[1,2] = 1*3\n");
    FAIL("missing semicolon accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_algebra("dim 3;\n  [2,1] = 1*3;");
    FAIL("i > j accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_algebra("dim 3; [1,2] = 1*4;"), ParseError);
  CHECK_THROWS_AS(parse_algebra("dim 3; [1,2] = 1/0*3;"), ParseError);
  CHECK_THROWS_AS(parse_algebra("[1,2] = 1*3;"), ParseError);
  CHECK_THROWS_WITH(parse_algebra("dim 3; [1,2]=1*3; [1,3]=1*1;"), Catch::Matchers::ContainsSubstring("(1,2,3)"));
}

TEST_CASE("print/parse round trip for the catalog", "[lie-algebra][cli]") {
  for (const auto& name : catalog_names()) {
    auto g = catalog_build(name);
    auto h = parse_algebra(print_algebra(g));
    CHECK(h == g);
    CHECK(h.parameters == g.parameters);
  }
}
