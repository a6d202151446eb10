#include <catch_amalgamated.hpp>

#include "solvcoh/almost_abelian.hpp"
#include "solvcoh/catalog.hpp"
#include "solvcoh/ce_complex.hpp"

using namespace solvcoh;

namespace {

RationalMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> v;
  for (auto r : rows) {
    Vector x;
    for (long e : r) x.push_back(Rational(e));
    v.push_back(x);
  }
  return RationalMatrix::from_rows(v, v[0].size());
}

LieAlgebra from_table(std::size_t n, std::initializer_list<std::tuple<int, int, int, Rational>> terms) {
  LieAlgebra g(n);
  for (auto [i, j, k, c] : terms) g.add_bracket_term(i - 1, j - 1, k - 1, c);
  return g;
}

void check_jc(const RationalMatrix& A) {
  auto [S, N] = jordan_chevalley(A);
  CHECK(S + N == A);
  CHECK(commutator(S, N).is_zero());
  CHECK(is_nilpotent(N));
  UniPoly m = min_poly(S);
  CHECK(gcd(m, m.derivative()).degree() == 0);
}

}  // namespace

TEST_CASE("factorization over Q", "[almost-abelian]") {
  UniPoly x = UniPoly::x();
  auto one = UniPoly::constant(Rational(1));
  auto f = (x * x + one) * (x * x + one) * (x - UniPoly::constant(Rational(1, 2))) * (x * x * x - 6 * x * x + 5 * x - one);
  auto fs = factor_over_q(f);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].factor == x - UniPoly::constant(Rational(1, 2)));
  CHECK(fs[1].factor == x * x + one);
  CHECK(fs[1].multiplicity == 2);
  CHECK(fs[2].factor.degree() == 3);
  auto g = factor_over_q((x * x - 2 * one) * (x * x + x + one) * (x * x * x - 2 * one));
  CHECK(g.size() == 3);
  auto h = factor_over_q(x * x * x * x + one);  // irreducible quartic
  CHECK(h.size() == 1);
  auto k = factor_over_q((x * x * x + x + one) * (x * x * x - x - one));
  CHECK(k.size() == 2);
}

TEST_CASE("Jordan-Chevalley decomposition", "[almost-abelian]") {
  auto R = mat({{0, -1}, {1, 0}});
  auto jr = jordan_chevalley(R);
  CHECK(jr.S == R);
  CHECK(jr.N.is_zero());
  auto J = mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  auto jj = jordan_chevalley(J);
  CHECK(jj.S.is_zero());
  CHECK(jj.N == J);
  auto p = present(catalog_build("g6.10", {{"a", Rational(0)}}));
  RationalMatrix rot(5, 5), shift(5, 5);
  rot.set_block(3, 3, p.A.block(3, 3, 2, 2));
  shift.set_block(0, 0, p.A.block(0, 0, 3, 3));
  CHECK(p.S == rot);
  CHECK(p.N == shift);
  for (const auto& name : catalog_names()) check_jc(present(catalog_build(name)).A);
  check_jc(mat({{2, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}));
  check_jc(mat({{0, -1, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, -1}, {0, 0, 1, 0}}));
}

TEST_CASE("compact part", "[almost-abelian]") {
  auto R = mat({{0, -1}, {1, 0}});
  CHECK(compact_part(R).C == R);
  CHECK(compact_part(mat({{1, 0}, {0, 3}})).C.is_zero());
  auto P = mat({{3, -1}, {1, 3}});
  auto cp = compact_part(P);
  CHECK(cp.C == R);
  REQUIRE(cp.rotations.size() == 1);
  CHECK(*cp.rotations[0].b == 1);
  CHECK(cp.rotations[0].re == 3);
  CHECK(has_only_real_roots(char_poly(P - cp.C)));
  CHECK_THROWS_AS(compact_part(mat({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}})), UnsupportedFactor);  // x^3 - 2
  for (const auto& name : catalog_names()) {
    auto p = present(catalog_build(name));
    CHECK(commutator(p.C, p.S).is_zero());
    CHECK(commutator(p.C, p.N).is_zero());
    CHECK(has_only_real_roots(char_poly(p.A - p.C)));
  }
  auto p11 = present(catalog_build("g6.11"));
  REQUIRE(p11.compact.rotations.size() == 2);
  int symbolic = 0;
  for (const auto& r : p11.compact.rotations) symbolic += r.symbol.has_value();
  CHECK(symbolic == 1);
}

TEST_CASE("modification reproduces the deformed algebras", "[almost-abelian]") {
  auto t610 = modify(catalog_build("g6.10", {{"a", Rational(0)}}));
  CHECK(t610 == from_table(6, {{2, 6, 1, Rational(1)}, {3, 6, 2, Rational(1)}}));
  CHECK(modify(catalog_build("g3.5+R3")).is_abelian());
  CHECK(modify(catalog_build("g5.17+R", {{"p", Rational(0)}, {"r", Rational(2)}})).is_abelian());
  CHECK(modify(catalog_build("g6.8")) == from_table(6, {{1, 6, 1, Rational(-4)}, {2, 6, 2, Rational(3)}, {3, 6, 3, Rational(1)}}));
  auto g611 = catalog_build("g6.11");  // a=-2, p=0, q=1, s=3
  CHECK(modify(g611) == from_table(6, {{1, 6, 1, Rational(-2)}, {4, 6, 4, Rational(1)}, {4, 6, 5, Rational(-3)}, {5, 6, 4, Rational(3)}, {5, 6, 5, Rational(1)}}));
  CHECK(modify(catalog_build("g5.14+R")) == from_table(6, {{2, 5, 1, Rational(1)}}));
  auto p517 = modify(catalog_build("g5.17+R", {{"p", Rational(1, 2)}, {"r", Rational(1)}}));
  CHECK(p517 == from_table(6, {{1, 5, 1, Rational(1, 2)}, {2, 5, 2, Rational(1, 2)}, {3, 5, 3, Rational(-1, 2)}, {4, 5, 4, Rational(-1, 2)}}));
  auto t518 = modify(catalog_build("g5.18+R"));
  auto p518 = present(t518);
  CHECK(p518.A == p518.N);
  CHECK(rank(p518.N) == 2);
  CHECK(betti_numbers(t518) == betti_numbers(from_table(6, {{3, 5, 1, Rational(1)}, {4, 5, 2, Rational(1)}})));
  for (const auto& name : catalog_names()) {
    auto g = catalog_build(name);
    auto t = modify(g);
    INFO(name);
    CHECK(modify(t) == t);
    CHECK(validate(t).valid);
    CHECK(t.isomorphism_note == g.isomorphism_note);
    // declared-irrational rotation blocks survive the modification
    CHECK(is_completely_solvable(t) == g.irrational_symbols.empty());
    CHECK(is_completely_solvable(modify(g, {true})));
  }
}

TEST_CASE("Mostow condition", "[almost-abelian]") {
  auto p68 = present(catalog_build("g6.8"));
  auto m = mostow_test(p68, Rational(2));
  CHECK_FALSE(m.holds);
  CHECK_FALSE(m.witness.empty());
  LieAlgebra aff = from_table(6, {{1, 2, 1, Rational(1)}});
  for (auto q : {Rational(2), Rational(1), Rational(1, 3)}) CHECK(mostow_test(aff, q).holds);
  auto p11 = present(catalog_build("g6.11"));
  CHECK_FALSE(mostow_test(p11, Rational(2)).holds);
  // only the declared-irrational block: no Q-relation reaches πi
  auto only_s = from_table(4, {{2, 4, 3, Rational(-3)}, {3, 4, 2, Rational(3)}, {1, 4, 1, Rational(1)}});
  only_s.parameters["s"] = 3;
  only_s.irrational_symbols = {"s"};
  CHECK(mostow_test(only_s, Rational(2)).holds);
  only_s.irrational_symbols.clear();
  CHECK_FALSE(mostow_test(only_s, Rational(2)).holds);
  CHECK(mostow_test(only_s, Rational(0)).holds);
  // √2 frequency is never rational
  auto sq = from_table(3, {{1, 3, 2, Rational(-2)}, {2, 3, 1, Rational(1)}});
  CHECK(mostow_test(sq, Rational(2)).holds);
  CHECK(monodromy_closure_connected(p68, Rational(2)));
  CHECK_FALSE(monodromy_closure_connected(p68, Rational(1)));
  CHECK(monodromy_closure_connected(p11, Rational(2)));
}
