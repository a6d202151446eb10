#include <catch2/catch_amalgamated.hpp>

#include "solvcoh/catalog.hpp"
#include "solvcoh/finite_action.hpp"

using namespace solvcoh;

namespace {

std::vector<std::size_t> truncate(std::vector<std::size_t> b, std::size_t k) {
  b.resize(k);
  return b;
}

std::vector<std::string> names(const ExteriorAlgebra& e, std::size_t p, const std::vector<Vector>& forms) {
  std::vector<std::string> out;
  for (const auto& f : forms) out.push_back(e.form_to_string(p, f));
  return out;
}

std::vector<std::size_t> cdga_betti(const FiniteAction& act) { return Cohomology(invariant_cdga(act)).betti_numbers(); }

}  // namespace

TEST_CASE("finite action validation", "[finite]") {
  auto g = catalog_build("g6.8");
  auto act = compact_action(g, Rational(1, 2));
  CHECK(act.order() == 4);
  // the action of the unmodified algebra does not commute with its differential unless the block is killed
  auto p = present(g);
  KMatrix bad = KMatrix::identity(6);
  bad(0, 0) = KElement(-1);
  bad(1, 1) = KElement(-1);
  bad(0, 1) = KElement(1);
  CHECK_THROWS_AS(FiniteAction(modify(g), bad), SolvcohError);  // infinite order
  KMatrix swap = KMatrix::identity(6);
  swap(0, 0) = swap(1, 1) = KElement(0);
  swap(0, 1) = swap(1, 0) = KElement(1);
  CHECK_THROWS_WITH(FiniteAction(modify(g), swap), Catch::Matchers::ContainsSubstring("differential"));
  CHECK_THROWS_AS(FiniteAction(modify(g), KMatrix::identity(5)), SolvcohError);
  // ψ fixes the acting covector and rotates the block
  const auto& psi = act.generator();
  CHECK(psi(5, 5) == KElement(1));
  CHECK(psi(4, 3) == KElement(1));
  CHECK(psi(3, 4) == KElement(-1));
  (void)p;
}

TEST_CASE("invariant cohomology of the modified g6.8 at quarter period", "[finite]") {
  auto g = catalog_build("g6.8");
  auto gt = modify(g);
  auto h = Cohomology::of(gt);
  auto act = compact_action(g, Rational(1, 2));
  auto inv = invariant_cohomology(h, act);
  const auto& e = *act.ext();
  CHECK(names(e, 1, inv.forms[1]) == std::vector<std::string>{"a6"});
  CHECK(names(e, 2, inv.forms[2]) == std::vector<std::string>{"a45"});
  CHECK(names(e, 3, inv.forms[3]) == std::vector<std::string>{"a123", "a456"});
  CHECK(inv.betti == cdga_betti(act));
  for (std::size_t p = 0; p <= 6; ++p) {
    CHECK(inv.projectors[p] * inv.projectors[p] == inv.projectors[p]);
    CHECK(inv.betti[p] <= h.betti(p));
  }
  // half period: the rotation acts by -1 on α4, α5
  auto half = invariant_cohomology(h, compact_action(g, Rational(1)));
  CHECK(names(e, 2, half.forms[2]) == std::vector<std::string>{"a45"});
  CHECK(half.betti == cdga_betti(compact_action(g, Rational(1))));
}

TEST_CASE("identity action gives the full cohomology", "[finite]") {
  for (const auto& name : catalog_names()) {
    auto g = catalog_build(name);
    auto gt = modify(g);
    auto h = Cohomology::of(gt);
    auto inv = invariant_cohomology(h, FiniteAction::identity(gt));
    CHECK(inv.betti == h.betti_numbers());
    CHECK(compact_action(g, Rational(2)).order() == 1);
  }
}

TEST_CASE("periodic monodromies of g5.18 and g3.5", "[finite]") {
  auto g = catalog_build("g5.18+R");
  auto gt = modify(g);
  auto h = Cohomology::of(gt);
  for (Rational q : {Rational(2, 3), Rational(1, 2), Rational(1, 3)}) {
    auto act = compact_action(g, q);
    auto inv = invariant_cohomology(h, act);
    CHECK(truncate(inv.betti, 4) == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(inv.betti == cdga_betti(act));
  }
  CHECK(truncate(invariant_cohomology(h, compact_action(g, Rational(1))).betti, 4) == std::vector<std::size_t>{1, 2, 5, 8});
  CHECK(truncate(invariant_cohomology(h, compact_action(g, Rational(2))).betti, 4) == std::vector<std::size_t>{1, 4, 9, 12});

  auto r = catalog_build("g3.5+R3");
  auto hr = Cohomology::of(modify(r));
  auto quarter = compact_action(r, Rational(1, 2));
  CHECK(quarter.order() == 4);
  CHECK(truncate(invariant_cohomology(hr, quarter).betti, 4) == std::vector<std::size_t>{1, 4, 7, 8});
  CHECK(truncate(cdga_betti(quarter), 4) == std::vector<std::size_t>{1, 4, 7, 8});
}

TEST_CASE("invariants of a power lie in the invariants of the generator's power", "[finite]") {
  auto r = catalog_build("g3.5+R3");
  auto hr = Cohomology::of(modify(r));
  // ψ_{π/3}^2 = ψ_{2π/3}: invariants under the larger group are contained in those of the subgroup
  auto big = invariant_cohomology(hr, compact_action(r, Rational(1, 3)));
  auto small = invariant_cohomology(hr, compact_action(r, Rational(2, 3)));
  for (std::size_t p = 0; p <= 6; ++p) {
    CHECK(big.betti[p] <= small.betti[p]);
    for (const auto& c : big.classes[p]) {
      auto rows = small.classes[p];
      std::size_t r0 = rows.size();
      rows.push_back(c);
      CHECK(rank(RationalMatrix::from_rows(rows, hr.betti(p))) == r0);
    }
  }
  // projector trace equals the invariant dimension
  auto act = compact_action(r, Rational(1, 3));
  auto inv = invariant_cohomology(hr, act);
  for (std::size_t p = 0; p <= 6; ++p) CHECK(inv.projectors[p].trace() == KElement(Rational(static_cast<long>(inv.betti[p]))));
}
