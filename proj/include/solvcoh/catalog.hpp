#ifndef SOLVCOH_CATALOG_HPP
#define SOLVCOH_CATALOG_HPP

#include "solvcoh/lie_algebra.hpp"
#include "solvcoh/mpoly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace solvcoh {

using ParamMap = std::map<std::string, Rational>;

/// Eigenvalue re + i*im of the acting derivation, as affine forms in the free symbols.
struct SymbolicWeight {
  MPoly re, im;
};

/// Records which weight sums vanish symbolically and checks the surrogate values reproduce that pattern.
struct GenericityCertificate {
  std::vector<std::string> symbols;
  std::vector<Rational> surrogate;
  std::vector<SymbolicWeight> weights;

  /// Returns an empty string when every sum Σ ε_i λ_i (ε_i ∈ {-1,0,1}) vanishes for the
  /// surrogate exactly when it vanishes identically; otherwise describes the first resonance.
  std::string check() const {
    const std::size_t n = weights.size();
    std::vector<int> eps(n, -1);
    while (true) {
      MPoly re, im;
      for (std::size_t i = 0; i < n; ++i) {
        if (eps[i] == 0) continue;
        re += weights[i].re.scaled(Rational(eps[i]));
        im += weights[i].im.scaled(Rational(eps[i]));
      }
      bool symbolic_zero = re.is_zero() && im.is_zero();
      bool value_zero = is_zero(re.evaluate(surrogate)) && is_zero(im.evaluate(surrogate));
      if (symbolic_zero != value_zero) {
        std::string e;
        for (int x : eps) e += (x < 0 ? "-" : x > 0 ? "+" : "0");
        return "surrogate resonance for sign pattern " + e;
      }
      std::size_t k = 0;
      while (k < n && eps[k] == 1) eps[k++] = -1;
      if (k == n) break;
      ++eps[k];
    }
    return {};
  }
};

struct ParamSpec {
  std::string name;
  Rational default_value;
};

struct CatalogOptions {
  std::set<std::string> rational_symbols;  // treat these surrogate symbols as genuinely rational
};

struct CatalogEntry {
  std::string name;
  std::string display;
  std::vector<ParamSpec> params;
  std::string constraints;
  std::string deformed;  // Table 2 style identification of the modification
  std::set<std::string> irrational_by_default;
  std::function<void(ParamMap&)> complete;  // derive dependent parameters
  std::function<void(const ParamMap&)> check;
  std::function<LieAlgebra(const ParamMap&)> build;
  std::function<GenericityCertificate(const ParamMap&, const std::set<std::string>&)> certificate;
};

namespace detail {

inline void bracket(LieAlgebra& g, std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  for (const auto& [k, c] : terms) g.add_bracket_term(i - 1, j - 1, k - 1, c);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw SolvcohError("parameter constraint violated: " + what);
}

// affine forms over the free symbols: symbol(...) when free, else its constant value
struct FormBuilder {
  GenericityCertificate cert;
  const ParamMap& p;
  FormBuilder(const ParamMap& params) : p(params) {}
  MPoly sym(const std::string& name, bool free) {
    if (!free) return MPoly(p.at(name));
    for (std::size_t i = 0; i < cert.symbols.size(); ++i)
      if (cert.symbols[i] == name) return MPoly::var(i);
    cert.symbols.push_back(name);
    cert.surrogate.push_back(p.at(name));
    return MPoly::var(cert.symbols.size() - 1);
  }
  void weight(MPoly re, MPoly im = MPoly()) { cert.weights.push_back({std::move(re), std::move(im)}); }
  void pair(const MPoly& re, const MPoly& im) {
    weight(re, im);
    weight(re, -im);
  }
};


}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  using detail::bracket;
  using detail::require;
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;

    v.push_back(CatalogEntry{
        "g6.8", "g6.8^{a,b,c,p}", {{"a", -4}, {"b", 3}, {"c", 1}, {"p", 0}}, "a+b+c+2p=0, 0<|c|<=|b|<=|a|",
        "g4.5+R2 (p=0)", {},
        [](ParamMap& m) {
          if (!m.count("a")) m["a"] = -m["b"] - m["c"] - 2 * m["p"];
        },
        [](const ParamMap& m) {
          require(m.at("a") + m.at("b") + m.at("c") + 2 * m.at("p") == 0, "a+b+c+2p=0");
          Rational a = abs_value(m.at("a")), b = abs_value(m.at("b")), c = abs_value(m.at("c"));
          require(sgn(c) > 0 && c <= b && b <= a, "0<|c|<=|b|<=|a|");
        },
        [](const ParamMap& m) {
          LieAlgebra g(6);
          Rational a = m.at("a"), b = m.at("b"), c = m.at("c"), p = m.at("p");
          bracket(g, 1, 6, {{1, a}});
          bracket(g, 2, 6, {{2, b}});
          bracket(g, 3, 6, {{3, c}});
          bracket(g, 4, 6, {{4, p}, {5, Rational(-1)}});
          bracket(g, 5, 6, {{4, Rational(1)}, {5, p}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>&) {
          detail::FormBuilder f(m);
          MPoly b = f.sym("b", true), c = f.sym("c", true), p = f.sym("p", sgn(m.at("p")) != 0);
          f.weight(-b - c - p.scaled(2));
          f.weight(b);
          f.weight(c);
          f.pair(p, MPoly(1));
          return f.cert;
        }});

    v.push_back(CatalogEntry{
        "g6.9", "g6.9^{a,b,p}", {{"a", -2}, {"b", 1}, {"p", 0}}, "a+2b+2p=0, a!=0", "", {},
        [](ParamMap& m) {
          if (!m.count("a")) m["a"] = -2 * m["b"] - 2 * m["p"];
        },
        [](const ParamMap& m) {
          require(m.at("a") + 2 * m.at("b") + 2 * m.at("p") == 0, "a+2b+2p=0");
          require(sgn(m.at("a")) != 0, "a!=0");
        },
        [](const ParamMap& m) {
          LieAlgebra g(6);
          Rational a = m.at("a"), b = m.at("b"), p = m.at("p");
          bracket(g, 1, 6, {{1, a}});
          bracket(g, 2, 6, {{2, b}});
          bracket(g, 3, 6, {{2, Rational(1)}, {3, b}});
          bracket(g, 4, 6, {{4, p}, {5, Rational(-1)}});
          bracket(g, 5, 6, {{4, Rational(1)}, {5, p}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>&) {
          detail::FormBuilder f(m);
          MPoly b = f.sym("b", true), p = f.sym("p", sgn(m.at("p")) != 0);
          f.weight(-b.scaled(2) - p.scaled(2));
          f.weight(b);
          f.weight(b);
          f.pair(p, MPoly(1));
          return f.cert;
        }});

    v.push_back(CatalogEntry{
        "g6.10", "g6.10^{a,-3a/2}", {{"a", 0}}, "none", "g4.1+R2 (a=0)", {},
        [](ParamMap&) {}, [](const ParamMap&) {},
        [](const ParamMap& m) {
          LieAlgebra g(6);
          Rational a = m.at("a"), h = -Rational(3, 2) * a;
          bracket(g, 1, 6, {{1, a}});
          bracket(g, 2, 6, {{1, Rational(1)}, {2, a}});
          bracket(g, 3, 6, {{2, Rational(1)}, {3, a}});
          bracket(g, 4, 6, {{4, h}, {5, Rational(-1)}});
          bracket(g, 5, 6, {{4, Rational(1)}, {5, h}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>&) {
          detail::FormBuilder f(m);
          MPoly a = f.sym("a", sgn(m.at("a")) != 0);
          f.weight(a);
          f.weight(a);
          f.weight(a);
          f.pair(a.scaled(Rational(-3, 2)), MPoly(1));
          return f.cert;
        }});

    v.push_back(CatalogEntry{
        "g6.11", "g6.11^{a,p,q,s}", {{"a", -2}, {"p", 0}, {"q", 1}, {"s", 3}}, "a+2p+2q=0, a*s!=0",
        "g4.6^{-2k,k}+R2 (p=0)", {"s"},
        [](ParamMap& m) {
          if (!m.count("a")) m["a"] = -2 * m["p"] - 2 * m["q"];
        },
        [](const ParamMap& m) {
          require(m.at("a") + 2 * m.at("p") + 2 * m.at("q") == 0, "a+2p+2q=0");
          require(sgn(m.at("a")) != 0 && sgn(m.at("s")) != 0, "a*s!=0");
        },
        [](const ParamMap& m) {
          LieAlgebra g(6);
          Rational a = m.at("a"), p = m.at("p"), q = m.at("q"), s = m.at("s");
          bracket(g, 1, 6, {{1, a}});
          bracket(g, 2, 6, {{2, p}, {3, Rational(-1)}});
          bracket(g, 3, 6, {{2, Rational(1)}, {3, p}});
          bracket(g, 4, 6, {{4, q}, {5, -s}});
          bracket(g, 5, 6, {{4, s}, {5, q}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>& rational) {
          detail::FormBuilder f(m);
          MPoly p = f.sym("p", sgn(m.at("p")) != 0), q = f.sym("q", true), s = f.sym("s", !rational.count("s"));
          f.weight(-p.scaled(2) - q.scaled(2));
          f.pair(p, MPoly(1));
          f.pair(q, s);
          return f.cert;
        }});

    v.push_back(CatalogEntry{
        "g6.12", "g6.12^{-4p,p}", {{"p", 1}}, "p!=0", "", {}, [](ParamMap&) {},
        [](const ParamMap& m) { require(sgn(m.at("p")) != 0, "p!=0"); },
        [](const ParamMap& m) {
          LieAlgebra g(6);
          Rational p = m.at("p");
          bracket(g, 1, 6, {{1, -4 * p}});
          bracket(g, 2, 6, {{2, p}, {3, Rational(-1)}});
          bracket(g, 3, 6, {{2, Rational(1)}, {3, p}});
          bracket(g, 4, 6, {{2, Rational(1)}, {4, p}, {5, Rational(-1)}});
          bracket(g, 5, 6, {{3, Rational(1)}, {4, Rational(1)}, {5, p}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>&) {
          detail::FormBuilder f(m);
          MPoly p = f.sym("p", true);
          f.weight(p.scaled(-4));
          f.pair(p, MPoly(1));
          f.pair(p, MPoly(1));
          return f.cert;
        }});

    v.push_back(CatalogEntry{
        "g5.13+R", "g5.13^{-1-2q,q,r}+R", {{"q", Rational(-2, 7)}, {"r", 3}}, "q!=-1/2, r!=0, -1<=q<=0", "", {"r"},
        [](ParamMap&) {},
        [](const ParamMap& m) {
          Rational q = m.at("q");
          require(q != Rational(-1, 2), "q!=-1/2");
          require(sgn(m.at("r")) != 0, "r!=0");
          require(q >= -1 && q <= 0, "-1<=q<=0");
        },
        [](const ParamMap& m) {
          LieAlgebra g(6);
          Rational q = m.at("q"), r = m.at("r");
          bracket(g, 1, 5, {{1, Rational(1)}});
          bracket(g, 2, 5, {{2, -1 - 2 * q}});
          bracket(g, 3, 5, {{3, q}, {4, -r}});
          bracket(g, 4, 5, {{3, r}, {4, q}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>& rational) {
          detail::FormBuilder f(m);
          MPoly q = f.sym("q", true), r = f.sym("r", !rational.count("r"));
          f.weight(MPoly(1));
          f.weight(MPoly(-1) - q.scaled(2));
          f.pair(q, r);
          f.weight(MPoly());
          return f.cert;
        }});

    v.push_back(CatalogEntry{
        "g5.14+R", "g5.14^0+R", {}, "none", "g3.1+R3", {}, [](ParamMap&) {}, [](const ParamMap&) {},
        [](const ParamMap&) {
          LieAlgebra g(6);
          bracket(g, 2, 5, {{1, Rational(1)}});
          bracket(g, 3, 5, {{4, Rational(-1)}});
          bracket(g, 4, 5, {{3, Rational(1)}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>&) {
          detail::FormBuilder f(m);
          f.weight(MPoly());
          f.weight(MPoly());
          f.pair(MPoly(), MPoly(1));
          f.weight(MPoly());
          return f.cert;
        }});

    v.push_back(CatalogEntry{
        "g5.17+R", "g5.17^{p,-p,r}+R", {{"p", 0}, {"r", 1}}, "r!=0", "R6 (p=0), g5.7^{1,-1,-1}+R (p!=0)", {},
        [](ParamMap&) {}, [](const ParamMap& m) { require(sgn(m.at("r")) != 0, "r!=0"); },
        [](const ParamMap& m) {
          LieAlgebra g(6);
          Rational p = m.at("p"), r = m.at("r");
          bracket(g, 1, 5, {{1, p}, {2, Rational(-1)}});
          bracket(g, 2, 5, {{1, Rational(1)}, {2, p}});
          bracket(g, 3, 5, {{3, -p}, {4, -r}});
          bracket(g, 4, 5, {{3, r}, {4, -p}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>&) {
          detail::FormBuilder f(m);
          MPoly p = f.sym("p", sgn(m.at("p")) != 0);
          f.pair(p, MPoly(1));
          f.pair(-p, MPoly(m.at("r")));
          f.weight(MPoly());
          return f.cert;
        }});

    v.push_back(CatalogEntry{
        "g5.18+R", "g5.18^0+R", {}, "none", "g5.1+R", {}, [](ParamMap&) {}, [](const ParamMap&) {},
        [](const ParamMap&) {
          LieAlgebra g(6);
          bracket(g, 1, 5, {{2, Rational(-1)}});
          bracket(g, 2, 5, {{1, Rational(1)}});
          bracket(g, 3, 5, {{1, Rational(1)}, {4, Rational(-1)}});
          bracket(g, 4, 5, {{2, Rational(1)}, {3, Rational(1)}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>&) {
          detail::FormBuilder f(m);
          f.pair(MPoly(), MPoly(1));
          f.pair(MPoly(), MPoly(1));
          f.weight(MPoly());
          return f.cert;
        }});

    v.push_back(CatalogEntry{
        "g4.6+R2", "g4.6^{-2p,p}+R2", {{"p", 1}}, "p>0", "", {}, [](ParamMap&) {},
        [](const ParamMap& m) { require(sgn(m.at("p")) > 0, "p>0"); },
        [](const ParamMap& m) {
          LieAlgebra g(6);
          Rational p = m.at("p");
          bracket(g, 1, 4, {{1, -2 * p}});
          bracket(g, 2, 4, {{2, p}, {3, Rational(-1)}});
          bracket(g, 3, 4, {{2, Rational(1)}, {3, p}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>&) {
          detail::FormBuilder f(m);
          MPoly p = f.sym("p", true);
          f.weight(p.scaled(-2));
          f.pair(p, MPoly(1));
          f.weight(MPoly());
          f.weight(MPoly());
          return f.cert;
        }});

    v.push_back(CatalogEntry{
        "g3.5+R3", "g3.5^0+R3", {}, "none", "R6", {}, [](ParamMap&) {}, [](const ParamMap&) {},
        [](const ParamMap&) {
          LieAlgebra g(6);
          bracket(g, 1, 3, {{2, Rational(-1)}});
          bracket(g, 2, 3, {{1, Rational(1)}});
          return g;
        },
        [](const ParamMap& m, const std::set<std::string>&) {
          detail::FormBuilder f(m);
          f.pair(MPoly(), MPoly(1));
          for (int i = 0; i < 3; ++i) f.weight(MPoly());
          return f.cert;
        }});
    return v;
  }();
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw SolvcohError("unknown catalog algebra '" + name + "'");
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

/// Builds a catalog algebra: fills defaults, checks the schema and the surrogate genericity, validates Jacobi.
inline LieAlgebra catalog_build(const std::string& name, ParamMap params = {}, const CatalogOptions& opts = {}) {
  const CatalogEntry& e = catalog_entry(name);
  for (const auto& [k, val] : params) {
    bool known = false;
    for (const auto& ps : e.params) known = known || ps.name == k;
    if (!known) throw SolvcohError("unknown parameter '" + k + "' for " + name);
  }
  bool derive_a = (name == "g6.8" || name == "g6.9" || name == "g6.11") && !params.count("a");
  for (const auto& ps : e.params)
    if (!params.count(ps.name) && !(derive_a && ps.name == "a")) params[ps.name] = ps.default_value;
  e.complete(params);
  e.check(params);
  GenericityCertificate cert = e.certificate(params, opts.rational_symbols);
  std::string why = cert.check();
  if (!why.empty()) throw SolvcohError(name + ": " + why);
  LieAlgebra g = e.build(params);
  auto rep = validate(g);
  if (!rep.valid) throw SolvcohError(name + ": " + rep.message);
  g.name = name;
  g.parameters = params;
  for (const auto& s : e.irrational_by_default)
    if (!opts.rational_symbols.count(s)) g.irrational_symbols.insert(s);
  g.isomorphism_note = e.deformed;
  return g;
}

}  // namespace solvcoh

#endif
