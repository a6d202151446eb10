#include "solvcoh/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace solvcoh;

int main(int argc, char** argv) {
  CLI::App app{"Cohomology, formality and symplectic structures of almost abelian solvmanifolds"};
  app.require_subcommand(1);
  CommandInput in;
  std::string algebra, catalog, tbar, surrogate_poly, surrogate_exp, system, format = "json";

  const std::map<std::string, std::string> about{
      {"betti", "Betti numbers and cohomology classes of the Chevalley-Eilenberg complex"},
      {"mostow", "whether pi*i is a rational combination of the eigenvalues of tbar*A"},
      {"modify", "kill the rational rotation part of the action"},
      {"lattice-check", "integrality of the monodromy exp(tbar*A)"},
      {"invariants", "psi-invariant cohomology of the modified algebra"},
      {"symplectic", "closed two-forms and the nondegeneracy condition"},
      {"lefschetz", "generic Lefschetz ranks for a symplectic class"},
      {"model", "minimal model through a degree cap"},
      {"formality", "formality verdict with certificate or Massey witness"},
      {"umodule", "nilpotent submodule U of the fibre cohomology"},
      {"table1", "recompute the solvmanifold table and classify every row"}};
  for (const auto& name : cli_commands()) {
    auto* sub = app.add_subcommand(name, about.at(name));
    if (name != "table1") {
      sub->add_option("--algebra", algebra, "bracket-table file");
      sub->add_option("--catalog", catalog, "catalog algebra, e.g. g5.18+R");
      sub->add_option("--params", in.params, "k=v,... for catalog parameters");
      sub->add_option("--tbar", tbar, "q with tbar = q*pi");
      sub->add_option("--rational", in.rational_symbols, "catalog symbols to treat as rational, e.g. s");
    }
    sub->add_option("--cap", in.cap, "degree cap for minimal models")->check(CLI::PositiveNumber);
    sub->add_option("--seed", in.seed, "seed for sampled checks");
    sub->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    if (name == "lattice-check" || name == "umodule") {
      sub->add_option("--surrogate-poly", surrogate_poly, "ascending coefficients of f; e^{pi x_i} maps to the i-th root");
      sub->add_option("--surrogate-exponents", surrogate_exp, "x_1,...,x_k matched to the roots of f");
    }
    if (name == "lattice-check") {
      sub->add_option("--system", system, "h1,h2: decide the symbolic trace system");
      sub->add_flag("--symbolic", in.symbolic, "rotation-period elimination with symbolic exponentials");
    }
    if (name == "table1") sub->add_flag("!--no-structures", in.structures, "Betti columns only");
  }
  CLI11_PARSE(app, argc, argv);

  try {
    in.command = app.get_subcommands().front()->get_name();
    if (!algebra.empty()) in.algebra_path = algebra;
    if (!catalog.empty()) in.catalog = catalog;
    if (!tbar.empty()) in.tbar = parse_rational(tbar);
    if (!surrogate_poly.empty()) in.surrogate_poly = surrogate_poly;
    if (!surrogate_exp.empty()) in.surrogate_exponents = surrogate_exp;
    if (!system.empty()) {
      auto v = detail::parse_rationals(system);
      if (v.size() != 2 || !is_integer(v[0]) || !is_integer(v[1])) throw SolvcohError("--system expects two integers h1,h2");
      in.system = std::make_pair(v[0].get_num().get_si(), v[1].get_num().get_si());
    }
    Json doc = run_command(in);
    if (format == "tsv") std::cout << to_tsv(doc);
    else std::cout << doc.dump(2) << '\n';
    if (in.command == "table1" && !doc["results"]["summary"]["ok"].get<bool>()) return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "solvcoh: " << e.what() << '\n';
    return 2;
  }
}
