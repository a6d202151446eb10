#include <catch2/catch_amalgamated.hpp>

#include "solvcoh/cli.hpp"

using namespace solvcoh;

namespace {

CommandInput cat(const std::string& cmd, const std::string& name, std::optional<Rational> q = std::nullopt) {
  CommandInput in;
  in.command = cmd;
  in.catalog = name;
  in.tbar = q;
  return in;
}

std::vector<std::size_t> ints(const Json& a) { return a.get<std::vector<std::size_t>>(); }

}  // namespace

TEST_CASE("betti and invariants examples", "[cli]") {
  auto d = run_command(cat("betti", "g5.18+R"));
  CHECK(d["schema"] == kSchema);
  CHECK(ints(d["results"]["betti"]) == std::vector<std::size_t>{1, 2, 3, 4, 3, 2, 1});
  CHECK(d["results"]["poincare_duality"] == true);
  auto inv = run_command(cat("invariants", "g5.18+R", Rational(1, 3)));
  auto b = ints(inv["results"]["betti"]);
  CHECK(b[1] == 2);
  CHECK(b[2] == 3);
  CHECK(b[3] == 4);
  CHECK(inv["inputs"]["tbar"] == "1/3*pi");
  auto at2 = run_command(cat("invariants", "g5.18+R", Rational(2)));
  CHECK(ints(at2["results"]["betti"]) == std::vector<std::size_t>{1, 4, 9, 12, 9, 4, 1});
}

TEST_CASE("algebra text input and canonical inputs", "[cli]") {
  CommandInput in;
  in.command = "betti";
  in.algebra_text = "dim 6; [1,3] = -1*2; [2,3] = 1*1;";
  auto d = run_command(in);
  CHECK(d["inputs"]["source"] == "file");
  CHECK(ints(d["results"]["betti"]) == betti_numbers(catalog_build("g3.5+R3")));
  CommandInput again = in;
  again.algebra_text = d["inputs"]["algebra"].get<std::string>();
  CHECK(run_command(again)["results"] == d["results"]);
  in.catalog = "g6.10";
  CHECK_THROWS_WITH(run_command(in), Catch::Matchers::ContainsSubstring("exclusive"));
  CommandInput none;
  none.command = "betti";
  CHECK_THROWS_AS(run_command(none), SolvcohError);
}

TEST_CASE("every command produces a document", "[cli]") {
  auto in = cat("mostow", "g6.10", Rational(2));
  CHECK(run_command(in)["results"]["holds"] == false);
  auto ctrl = cat("mostow", "g6.10", Rational(2));
  ctrl.catalog.reset();
  ctrl.algebra_text = "dim 6; [1,2] = 1*1;";
  CHECK(run_command(ctrl)["results"]["holds"] == true);

  auto m = run_command(cat("modify", "g5.17+R"));
  CHECK(m["results"]["idempotent"] == true);
  CHECK(ints(m["results"]["betti"]) == std::vector<std::size_t>{1, 6, 15, 20, 15, 6, 1});

  auto l = run_command(cat("lattice-check", "g3.5+R3", Rational(2, 3)));
  CHECK(l["results"]["verdict"] == "verified-by-witness");
  CommandInput sys;
  sys.command = "lattice-check";
  sys.system = std::make_pair(5L, 6L);
  CHECK(run_command(sys)["results"]["satisfiable"] == true);
  auto g611 = cat("lattice-check", "g6.11");
  g611.symbolic = true;
  g611.rational_symbols = "s";
  CHECK(run_command(g611)["results"]["verdict"] == "necessary-fail");

  auto s = run_command(cat("symplectic", "g6.10"));
  CHECK(s["results"]["exists"] == true);
  CHECK(s["results"]["condition"] == "w16*w23*w45 != 0");
  CHECK(run_command(cat("symplectic", "g6.8", Rational(2)))["results"]["exists"] == false);

  auto L = run_command(cat("lefschetz", "g6.10", Rational(2)));
  CHECK(L["results"]["isomorphism"] == Json::array({true, false, false}));

  auto mo = cat("model", "g6.10", Rational(2));
  mo.cap = 3;
  auto md = run_command(mo);
  CHECK(ints(md["results"]["counts"]) == std::vector<std::size_t>{0, 6, 0, 0});
  CHECK(md["results"]["quasi_isomorphism_through_cap"] == true);

  auto f = run_command(cat("formality", "g6.10", Rational(2)));
  CHECK(f["results"]["verdict"] == "NOT_FORMAL");
  CHECK(f["results"]["massey_reverified"] == true);
  CHECK(f["results"].contains("psi_failure"));

  auto u = cat("umodule", "g6.8", Rational(2));
  CHECK_THROWS_WITH(run_command(u), Catch::Matchers::ContainsSubstring("surrogate"));
  u.surrogate_poly = "-1,5,-6,1";
  u.surrogate_exponents = "-8,6,2";
  auto ud = run_command(u);
  CHECK(ud["results"]["spans"]["1"] == Json::array({"a4", "a5"}));

  CHECK_THROWS_WITH(run_command(cat("invariants", "g6.10")), Catch::Matchers::ContainsSubstring("--tbar"));
  CHECK_THROWS_WITH(run_command(cat("nonsense", "g6.10")), Catch::Matchers::ContainsSubstring("unknown command"));
}

TEST_CASE("documents are deterministic for a fixed seed", "[cli]") {
  for (const std::string c : {"betti", "symplectic", "lefschetz", "formality"}) {
    auto in = cat(c, "g5.14+R");
    in.seed = 17;
    CHECK(run_command(in).dump() == run_command(in).dump());
  }
  auto in = cat("symplectic", "g6.10");
  in.seed = 4;
  CHECK(run_command(in)["provenance"]["seed"] == 4);
}

TEST_CASE("tsv rendering", "[cli]") {
  auto tsv = to_tsv(run_command(cat("betti", "g5.18+R")));
  CHECK(tsv.find("betti\t1\t2\t3\t4\t3\t2\t1\n") != std::string::npos);
  CHECK(tsv.find("classes.1\ta5\ta6\n") != std::string::npos);
}

TEST_CASE("table1 covers every printed row without silent skips", "[cli][table1]") {
  Table1Options opt;
  opt.structures = false;
  auto rep = table1_run(opt);
  REQUIRE(rep.rows.size() == table1_rows().size());
  std::set<std::string> groups;
  for (const auto& r : rep.rows) {
    groups.insert(r.row->group);
    CHECK_FALSE(r.status.empty());
    CHECK(r.row->listed.size() <= 3);
    if (r.status.rfind("reproduced", 0) == 0) {
      CHECK(r.lie == r.row->lie);
      CHECK(r.quotient == r.row->quotient);
    }
    CHECK(r.status.rfind("mismatch", 0) != 0);
  }
  CHECK(groups.size() == 7);
  CHECK(rep.ok());
  CHECK(rep.count("erratum") == 11);
  CHECK(rep.count("out-of-scope") == 0);

  auto d = detail::table1_json(rep);
  CHECK(d["summary"]["ok"] == true);
  CHECK(d["summary"]["rows"] == rep.rows.size());
}

TEST_CASE("table1 classification refuses unexplained disagreements", "[cli][table1]") {
  Table1Row fake = table1_rows().front();
  fake.quotient = {3, 4, 4};  // χ = 0, no certificate
  std::vector<Table1Result> rs{table1_compute(fake, {4, false, 1})};
  table1_classify(rs);
  CHECK(rs[0].status.rfind("mismatch", 0) == 0);
  CHECK_FALSE(rs[0].ok());

  Table1Row chi = table1_rows().front();
  chi.quotient = {3, 3, 3};  // χ = −1
  rs = {table1_compute(chi, {4, false, 1})};
  table1_classify(rs);
  CHECK(rs[0].status.rfind("erratum", 0) == 0);
  CHECK(rs[0].status.find("Euler characteristic") != std::string::npos);

  Table1Row bad = table1_rows().front();
  bad.catalog = "no-such-algebra";
  rs = {table1_compute(bad, {4, false, 1})};
  table1_classify(rs);
  CHECK(rs[0].status.rfind("out-of-scope(", 0) == 0);
}

TEST_CASE("listed bases are verified", "[cli][table1]") {
  const auto& rows = table1_rows();
  auto it = std::find_if(rows.begin(), rows.end(), [](const Table1Row& r) { return r.catalog == "g6.11" && r.q == 2; });
  REQUIRE(it != rows.end());
  auto res = table1_compute(*it, {4, false, 1});
  CHECK(std::find(res.notes.begin(), res.notes.end(), "listed basis verified, b=(3,3,2)") != res.notes.end());
  Table1Row wrong = *it;
  wrong.listed = {{"a1"}, {}, {}};
  auto w = table1_compute(wrong, {4, false, 1});
  CHECK(std::find(w.notes.begin(), w.notes.end(), "listed basis rejected: a1 is not closed") != w.notes.end());
}
