#ifndef SOLVCOH_CLI_HPP
#define SOLVCOH_CLI_HPP

#include "solvcoh/io.hpp"
#include "solvcoh/lattice_symbolic.hpp"
#include "solvcoh/table1.hpp"
#include "solvcoh/umodule.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace solvcoh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchema = "solvcoh.result/1";

inline const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> c{"betti",    "mostow",    "modify", "lattice-check", "invariants", "symplectic",
                                          "lefschetz", "model", "formality", "umodule",       "table1"};
  return c;
}

struct CommandInput {
  std::string command;
  std::optional<std::string> algebra_path;
  std::optional<std::string> algebra_text;  // takes precedence over the path
  std::optional<std::string> catalog;
  std::string params;  // k=v,k=v
  std::string rational_symbols;  // s,... : declared-irrational catalog symbols taken as rational
  std::optional<Rational> tbar;  // t̄ = tbar·π
  std::size_t cap = 4;
  unsigned seed = 1;
  std::optional<std::string> surrogate_poly;       // ascending coefficients
  std::optional<std::string> surrogate_exponents;  // e^{π x_i} ↦ i-th root
  std::optional<std::pair<long, long>> system;     // lattice-check: symbolic system at (h1, h2)
  bool symbolic = false;                           // lattice-check: rotation-period elimination
  bool structures = true;                          // table1: formality and symplectic columns
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

inline ParamMap parse_params(const std::string& text) {
  ParamMap m;
  for (const auto& kv : split(text, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw SolvcohError("parameter '" + kv + "' must have the form name=value");
    m[trim(kv.substr(0, eq))] = parse_rational(trim(kv.substr(eq + 1)));
  }
  return m;
}

inline std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> v;
  for (const auto& t : split(text, ',')) v.push_back(parse_rational(trim(t)));
  return v;
}

inline Json betti_json(const std::vector<std::size_t>& b) {
  Json a = Json::array();
  for (auto x : b) a.push_back(x);
  return a;
}

inline Json strings_json(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

inline std::string tbar_string(const Rational& q) { return q == 1 ? "pi" : q.get_str() + "*pi"; }

inline std::string matrix_string(const RationalMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).get_str();
  }
  return s + "]";
}

}  // namespace detail

struct LoadedAlgebra {
  LieAlgebra g;
  Json inputs;
};

inline LoadedAlgebra load_algebra(const CommandInput& in) {
  LoadedAlgebra out;
  Json inputs = Json::object();
  if (in.algebra_text || in.algebra_path) {
    if (in.catalog) throw SolvcohError("--algebra and --catalog are exclusive");
    std::string text;
    if (in.algebra_text) {
      text = *in.algebra_text;
    } else {
      std::ifstream f(*in.algebra_path);
      if (!f) throw SolvcohError("cannot read algebra file '" + *in.algebra_path + "'");
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    out.g = parse_algebra(text);
    inputs["source"] = "file";
  } else if (in.catalog) {
    CatalogOptions co;
    for (const auto& t : detail::split(in.rational_symbols, ',')) co.rational_symbols.insert(detail::trim(t));
    out.g = catalog_build(*in.catalog, detail::parse_params(in.params), co);
    inputs["source"] = "catalog";
    inputs["catalog"] = *in.catalog;
    if (!co.rational_symbols.empty()) inputs["rational_symbols"] = detail::strings_json({co.rational_symbols.begin(), co.rational_symbols.end()});
  } else {
    throw SolvcohError("an algebra is required: --algebra FILE or --catalog NAME");
  }
  Json params = Json::object();
  for (const auto& [k, v] : out.g.parameters) params[k] = v.get_str();
  inputs["params"] = params;
  inputs["algebra"] = print_algebra(out.g);
  out.inputs = std::move(inputs);
  return out;
}

namespace detail {

inline Rational require_tbar(const CommandInput& in) {
  if (!in.tbar) throw SolvcohError(in.command + " needs --tbar q (t̄ = q·pi)");
  return *in.tbar;
}

inline ExpSurrogate surrogate_of(const CommandInput& in) {
  if (!in.surrogate_poly && !in.surrogate_exponents) return {};
  if (!in.surrogate_poly || !in.surrogate_exponents) throw SolvcohError("--surrogate-poly and --surrogate-exponents go together");
  return root_surrogate(UniPoly(parse_rationals(*in.surrogate_poly)), parse_rationals(*in.surrogate_exponents));
}

/// CE(g), or the ψ-invariant sub-CDGA of CE(g̃) when t̄ is given.
inline FiniteCdga source_cdga(const LieAlgebra& g, const CommandInput& in, Json& inputs) {
  if (!in.tbar) {
    inputs["source_cdga"] = "CE(g)";
    return FiniteCdga::of(g);
  }
  inputs["source_cdga"] = "invariant forms of CE(g~) at tbar";
  return invariant_cdga(compact_action(g, *in.tbar));
}

inline std::vector<std::string> class_strings(const ExteriorAlgebra& e, std::size_t p, const std::vector<Vector>& forms) {
  std::vector<std::string> out;
  for (const auto& f : forms) out.push_back(e.form_to_string(p, f));
  return out;
}

inline Json cmd_betti(const LieAlgebra& g) {
  auto h = Cohomology::of(g);
  auto b = h.betti_numbers();
  long chi = 0;
  for (std::size_t p = 0; p < b.size(); ++p) chi += (p % 2 ? -1 : 1) * static_cast<long>(b[p]);
  Json r;
  r["betti"] = betti_json(b);
  r["euler_characteristic"] = chi;
  r["unimodular"] = is_unimodular(g);
  r["poincare_duality"] = poincare_check(g, h);
  Json cls = Json::object();
  for (std::size_t p = 1; p < b.size(); ++p) cls[std::to_string(p)] = strings_json(class_strings(h.ext(), p, h.degree(p).reps));
  r["classes"] = cls;
  return r;
}

inline Json cmd_mostow(const LieAlgebra& g, const Rational& q) {
  auto p = present(g);
  auto m = mostow_test(p, q);
  Json r;
  r["tbar"] = tbar_string(q);
  r["holds"] = m.holds;
  r["verdict"] = m.holds ? "condition holds" : "condition violated";
  if (!m.witness.empty()) r["witness"] = m.witness;
  r["completely_solvable"] = is_completely_solvable(g);
  r["monodromy_closure_connected"] = monodromy_closure_connected(p, q);
  return r;
}

inline Json cmd_modify(const LieAlgebra& g, const std::optional<std::string>& catalog) {
  auto gt = modify(g);
  Json r;
  r["modified"] = print_algebra(gt);
  r["betti"] = betti_json(betti_numbers(gt));
  r["idempotent"] = modify(gt) == gt;
  r["completely_solvable"] = is_completely_solvable(gt);
  if (catalog && !catalog_entry(*catalog).deformed.empty()) r["identification"] = catalog_entry(*catalog).deformed;
  return r;
}

inline Json cmd_lattice(const LieAlgebra& g, const CommandInput& in) {
  Json r;
  if (in.system) {
    auto s = lattice_system_check(in.system->first, in.system->second);
    r["mode"] = "symbolic system";
    r["h1"] = in.system->first;
    r["h2"] = in.system->second;
    r["satisfiable"] = s.satisfiable;
    r["eliminant"] = s.eliminant.to_string("s");
    r["r_of_s"] = s.r_of_s.to_string("s");
    Json w = Json::array();
    for (const auto& x : s.witnesses) w.push_back(Json{{"lo", x.lo.get_str()}, {"hi", x.hi.get_str()}, {"exact", x.exact}});
    r["witnesses"] = w;
    r["derivation"] = s.derivation;
    return r;
  }
  if (in.symbolic) {
    auto s = g611_rotation_period_check(g);
    r["mode"] = "rotation-period elimination";
    r["verdict"] = to_string(s.report.verdict);
    r["reason"] = s.report.reason;
    r["min_poly_coefficients"] = strings_json(s.min_poly_coefficients);
    r["steps"] = strings_json(s.steps);
    return r;
  }
  const Rational q = require_tbar(in);
  auto m = monodromy(present(g), q, surrogate_of(in));
  auto rep = lattice_integrality(m.M);
  r["mode"] = "monodromy";
  r["tbar"] = tbar_string(q);
  r["verdict"] = to_string(rep.verdict);
  r["reason"] = rep.reason;
  if (rep.char_poly) r["char_poly"] = rep.char_poly->to_string();
  if (rep.min_poly) r["min_poly"] = rep.min_poly->to_string();
  if (rep.E) r["integer_conjugate"] = matrix_string(*rep.E);
  if (auto mr = as_rational(m.M)) r["monodromy"] = matrix_string(*mr);
  r["notes"] = strings_json(m.notes);
  return r;
}

inline Json cmd_invariants(const LieAlgebra& g, const Rational& q) {
  auto act = compact_action(g, q);
  auto gt = modify(g);
  auto h = Cohomology::of(gt);
  auto inv = invariant_cohomology(h, act);
  Json r;
  r["tbar"] = tbar_string(q);
  r["action_order"] = act.order();
  r["betti"] = betti_json(inv.betti);
  r["betti_lie_algebra"] = betti_json(betti_numbers(g));
  Json cls = Json::object();
  for (std::size_t p = 1; p < inv.betti.size(); ++p) cls[std::to_string(p)] = strings_json(class_strings(h.ext(), p, inv.forms[p]));
  r["classes"] = cls;
  r["mostow_holds"] = mostow_test(g, q).holds;
  return r;
}

inline Json cmd_symplectic(const FiniteCdga& a, unsigned seed) {
  auto s = symplectic_exists(a, seed);
  Json r;
  r["exists"] = s.exists;
  r["family"] = strings_json(s.family.names);
  r["generic_form"] = s.generic_form;
  r["pfaffian"] = s.family.pfaffian.to_string(s.family.names);
  r["condition"] = s.condition;
  if (s.sample) r["sample"] = s.family.ext->form_to_string(2, *s.sample);
  r["decided_by_sample"] = s.decided_by_sample;
  return r;
}

inline Json cmd_lefschetz(const FiniteCdga& a, unsigned seed) {
  auto L = generic_lefschetz(a, a.ambient->n() / 2 - 1, seed);
  Json r;
  Json ranks = Json::array(), iso = Json::array();
  for (auto x : L.generic_rank) ranks.push_back(x);
  for (bool b : L.isomorphism) iso.push_back(b);
  r["ranks"] = ranks;
  r["isomorphism"] = iso;
  long s = -1;
  while (s + 1 < static_cast<long>(L.isomorphism.size()) && L.isomorphism[s + 1]) ++s;
  r["s_lefschetz"] = s;
  r["hard_lefschetz"] = L.s_lefschetz(a.ambient->n() / 2 - 1);
  r["top_power_nonzero"] = L.top_power_nonzero;
  r["symbolic"] = L.symbolic;
  r["family"] = strings_json(L.family.names);
  return r;
}

inline Json model_json(const MinimalModel& mm) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < mm.model.size(); ++i) {
    const auto& gen = mm.model.generators()[i];
    gens.push_back(Json{{"name", gen.name}, {"degree", gen.degree}, {"d", mm.model.to_string(mm.model.differential(i))}});
  }
  Json r;
  r["cap"] = mm.cap;
  r["generators"] = gens;
  r["counts"] = betti_json(mm.generator_counts());
  r["minimal"] = mm.model.is_minimal();
  r["chain_map"] = is_chain_map(mm);
  bool qi = true;
  for (const auto& d : quasi_isomorphism_check(mm)) qi = qi && d.bijective();
  r["quasi_isomorphism_through_cap"] = qi;
  return r;
}

inline Json cmd_formality(const MinimalModel& mm) {
  FormalityOptions fo;
  fo.manifold_dim = mm.source->max_degree();
  auto f = formality_verdict(mm, fo);
  Json r;
  r["verdict"] = to_string(f.verdict);
  r["cap"] = f.cap;
  if (f.s) r["s"] = *f.s;
  r["closed_generators"] = strings_json(f.closed_generators);
  r["other_generators"] = strings_json(f.other_generators);
  r["psi_well_defined"] = f.psi_well_defined;
  r["certificate"] = strings_json(f.certificate);
  if (f.psi_failure) r["psi_failure"] = *f.psi_failure;
  if (f.massey) {
    GradedCohomology hs(mm.source);
    r["massey"] = f.massey_description;
    r["massey_reverified"] = verify_massey(hs, *f.massey);
  }
  return r;
}

inline Json cmd_umodule(const LieAlgebra& g, const CommandInput& in) {
  const Rational q = require_tbar(in);
  auto p = present(g);
  auto mon = monodromy(p, q, surrogate_of(in));
  auto u = nilpotent_submodule_U(fiber_representation(mon));
  ExteriorAlgebra fiber(p.n()), full(g);
  Json r;
  r["tbar"] = tbar_string(q);
  r["dims"] = betti_json(u.dims());
  Json spans = Json::object();
  for (std::size_t deg = 1; deg < u.rational.size(); ++deg) {
    if (!u.rational[deg]) {
      spans[std::to_string(deg)] = "not defined over Q";
      continue;
    }
    std::vector<std::string> names;
    for (const auto& v : *u.rational[deg]) {
      Vector w(full.size(deg), Rational(0));
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (is_zero(v[j])) continue;
        Mask m = 0;
        for (Mask x = fiber.mask(deg, j); x; x &= x - 1) m |= Mask(1) << p.ideal[std::countr_zero(x)];
        w[full.index(m)] = v[j];
      }
      names.push_back(full.form_to_string(deg, w));
    }
    spans[std::to_string(deg)] = strings_json(names);
  }
  r["spans"] = spans;
  r["notes"] = strings_json(mon.notes);
  return r;
}

inline Json table1_json(const Table1Report& rep) {
  Json rows = Json::array();
  for (const auto& x : rep.rows) {
    const auto& row = *x.row;
    Json params = Json::object();
    for (const auto& [k, v] : row.params) params[k] = v.get_str();
    rows.push_back(Json{{"group", row.group},
                        {"catalog", row.catalog},
                        {"params", params},
                        {"tbar", row.tbar},
                        {"q", row.q.get_str()},
                        {"condition", row.condition},
                        {"lie_expected", betti_json({row.lie.begin(), row.lie.end()})},
                        {"lie_computed", betti_json({x.lie.begin(), x.lie.end()})},
                        {"quotient_expected", betti_json({row.quotient.begin(), row.quotient.end()})},
                        {"quotient_computed", betti_json({x.quotient.begin(), x.quotient.end()})},
                        {"formality", x.formality},
                        {"formality_expected", row.F},
                        {"symplectic_lie", x.symplectic_lie},
                        {"symplectic_quotient", x.symplectic_quotient},
                        {"lefschetz", x.lefschetz},
                        {"status", x.status},
                        {"notes", strings_json(x.notes)}});
  }
  Json r;
  r["rows"] = rows;
  r["summary"] = Json{{"rows", rep.rows.size()},
                      {"reproduced", rep.count("reproduced")},
                      {"erratum", rep.count("erratum")},
                      {"out_of_scope", rep.count("out-of-scope")},
                      {"mismatch", rep.count("mismatch")},
                      {"ok", rep.ok()}};
  return r;
}

}  // namespace detail

/// Runs one command; the document is deterministic for fixed inputs and seed.
inline Json run_command(const CommandInput& in) {
  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = in.command;
  Json inputs = Json::object();
  Json results;
  if (in.command == "table1") {
    Table1Options opt;
    opt.cap = in.cap;
    opt.seed = in.seed;
    opt.structures = in.structures;
    inputs["cap"] = in.cap;
    results = detail::table1_json(table1_run(opt));
  } else if (in.command == "lattice-check" && in.system) {
    results = detail::cmd_lattice(LieAlgebra(1), in);
  } else {
    auto la = load_algebra(in);
    inputs = la.inputs;
    if (in.tbar) inputs["tbar"] = detail::tbar_string(*in.tbar);
    const auto& g = la.g;
    const auto& c = in.command;
    if (c == "betti") results = detail::cmd_betti(g);
    else if (c == "mostow") results = detail::cmd_mostow(g, detail::require_tbar(in));
    else if (c == "modify") results = detail::cmd_modify(g, in.catalog);
    else if (c == "lattice-check") results = detail::cmd_lattice(g, in);
    else if (c == "invariants") results = detail::cmd_invariants(g, detail::require_tbar(in));
    else if (c == "symplectic") results = detail::cmd_symplectic(detail::source_cdga(g, in, inputs), in.seed);
    else if (c == "lefschetz") results = detail::cmd_lefschetz(detail::source_cdga(g, in, inputs), in.seed);
    else if (c == "model" || c == "formality") {
      inputs["cap"] = in.cap;
      auto mm = minimal_model(detail::source_cdga(g, in, inputs), in.cap);
      results = c == "model" ? detail::model_json(mm) : detail::cmd_formality(mm);
    } else if (c == "umodule") results = detail::cmd_umodule(g, in);
    else throw SolvcohError("unknown command '" + c + "'");
  }
  doc["inputs"] = inputs;
  doc["results"] = results;
  doc["provenance"] = Json{{"tool", "solvcoh"}, {"version", kToolVersion}, {"seed", in.seed}};
  return doc;
}

/// Flat TSV: key<TAB>value per scalar, array items tab-separated; table1 as one row per (G, t̄).
inline std::string to_tsv(const Json& doc) {
  std::ostringstream os;
  auto scalar = [](const Json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  if (doc.at("command") == "table1") {
    os << "group\ttbar\tcondition\tg_b1\tg_b2\tg_b3\tq_b1\tq_b2\tq_b3\tformality\tsympl_exists\tlefschetz\tstatus\n";
    for (const auto& r : doc.at("results").at("rows")) {
      os << scalar(r.at("group")) << '\t' << scalar(r.at("tbar")) << '\t' << scalar(r.at("condition"));
      for (const auto& b : r.at("lie_computed")) os << '\t' << b.get<std::size_t>();
      for (const auto& b : r.at("quotient_computed")) os << '\t' << b.get<std::size_t>();
      os << '\t' << scalar(r.at("formality")) << '\t' << scalar(r.at("symplectic_quotient")) << '\t' << scalar(r.at("lefschetz")) << '\t'
         << scalar(r.at("status")) << '\n';
    }
    return os.str();
  }
  std::function<void(const std::string&, const Json&)> walk = [&](const std::string& key, const Json& v) {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) walk(key.empty() ? it.key() : key + "." + it.key(), it.value());
    } else if (v.is_array() && (v.empty() || !v.front().is_object())) {
      os << key << '\t';
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "\t" : "") << scalar(v[i]);
      os << '\n';
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) walk(key + "." + std::to_string(i), v[i]);
    } else {
      std::string s = scalar(v);
      for (auto& ch : s)
        if (ch == '\n') ch = ' ';
      os << key << '\t' << s << '\n';
    }
  };
  walk("", doc.at("results"));
  return os.str();
}

}  // namespace solvcoh

#endif
