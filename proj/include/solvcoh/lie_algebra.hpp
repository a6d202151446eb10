#ifndef SOLVCOH_LIE_ALGEBRA_HPP
#define SOLVCOH_LIE_ALGEBRA_HPP

#include "solvcoh/matrix.hpp"
#include "solvcoh/rational.hpp"
#include "solvcoh/sturm.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace solvcoh {

using Vector = std::vector<Rational>;

inline constexpr std::size_t kMaxLieDim = 16;

/// Real Lie algebra with rational structure constants c_{ij}^k in a basis X_0..X_{n-1}.
/// Indices are 0-based here; all text I/O is 1-based.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Rational(0)) {
    if (dim == 0 || dim > kMaxLieDim) throw SolvcohError("Lie algebra dimension must be in 1..16");
  }

  std::size_t dim() const { return dim_; }

  /// Sets [X_i, X_j] = v and [X_j, X_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v) {
    check_index(i);
    check_index(j);
    if (i == j) throw SolvcohError("bracket [X_i, X_i] is always zero");
    if (v.size() != dim_) throw SolvcohError("bracket vector has wrong length");
    for (std::size_t k = 0; k < dim_; ++k) {
      at(i, j, k) = v[k];
      at(j, i, k) = -v[k];
    }
  }
  /// [X_i, X_j] += coeff * X_k
  void add_bracket_term(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) throw SolvcohError("bracket [X_i, X_i] is always zero");
    at(i, j, k) += coeff;
    at(j, i, k) -= coeff;
  }
  /// Writes one ordered entry only; used to build deliberately inconsistent tables.
  void set_raw(std::size_t i, std::size_t j, std::size_t k, const Rational& coeff) { at(i, j, k) = coeff; }

  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  Vector bracket(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = structure_constant(i, j, k);
    return v;
  }
  Vector bracket(const Vector& x, const Vector& y) const {
    Vector v(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        Rational f = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!is_zero(structure_constant(i, j, k))) v[k] += f * structure_constant(i, j, k);
      }
    }
    return v;
  }
  bool bracket_is_zero(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < dim_; ++k)
      if (!is_zero(structure_constant(i, j, k))) return false;
    return true;
  }
  bool is_abelian() const {
    for (const auto& q : c_)
      if (!is_zero(q)) return false;
    return true;
  }

  /// ad(X_i): column j holds [X_i, X_j].
  RationalMatrix ad(std::size_t i) const {
    RationalMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = structure_constant(i, j, k);
    return m;
  }
  RationalMatrix ad(const Vector& x) const {
    RationalMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (!is_zero(x[i])) m = m + x[i] * ad(i);
    return m;
  }

  static Vector basis_vector(std::size_t n, std::size_t i) {
    Vector v(n, Rational(0));
    v[i] = 1;
    return v;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

  // metadata
  std::string name;
  std::map<std::string, Rational> parameters;
  std::set<std::string> irrational_symbols;  // parameters standing in for irrational values
  std::string isomorphism_note;

  /// Bracket table, one line per nonzero [X_i, X_j] with i < j, 1-based.
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        if (bracket_is_zero(i, j)) continue;
        os << "[X" << i + 1 << ",X" << j + 1 << "] = ";
        bool first = true;
        for (std::size_t k = 0; k < dim_; ++k) {
          const Rational& q = structure_constant(i, j, k);
          if (is_zero(q)) continue;
          if (!first) os << (sgn(q) < 0 ? " - " : " + ");
          else if (sgn(q) < 0) os << "-";
          Rational a = abs_value(q);
          if (a != 1) os << a.get_str() << "*";
          os << "X" << k + 1;
          first = false;
        }
        os << "\n";
      }
    return os.str();
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= dim_) throw SolvcohError("basis index out of range");
  }
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

struct JacobiReport {
  bool valid = true;
  std::optional<std::array<std::size_t, 3>> triple;  // 1-based, sorted
  std::string message;
};

/// Checks antisymmetry and the Jacobi identity; reports the first failing triple.
inline JacobiReport validate(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  JacobiReport rep;
  auto triple_of = [n](std::size_t i, std::size_t j) {
    std::size_t k = 0;
    while (k == i || k == j) ++k;
    std::array<std::size_t, 3> t{i + 1, j + 1, k + 1};
    std::sort(t.begin(), t.end());
    return t;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!is_zero(g.structure_constant(i, i, k))) {
        rep.valid = false;
        rep.message = "nonzero [X" + std::to_string(i + 1) + ",X" + std::to_string(i + 1) + "]";
        if (n >= 3) rep.triple = triple_of(i, i == 0 ? 1 : 0);
        return rep;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.structure_constant(i, j, k) != -g.structure_constant(j, i, k)) {
          rep.valid = false;
          rep.message = "bracket table not antisymmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
          if (n >= 3) rep.triple = triple_of(i, j);
          return rep;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector xi = LieAlgebra::basis_vector(n, i), xj = LieAlgebra::basis_vector(n, j), xk = LieAlgebra::basis_vector(n, k);
        Vector s = g.bracket(g.bracket(xi, xj), xk);
        Vector t = g.bracket(g.bracket(xj, xk), xi);
        Vector u = g.bracket(g.bracket(xk, xi), xj);
        for (std::size_t m = 0; m < n; ++m)
          if (!is_zero(s[m] + t[m] + u[m])) {
            rep.valid = false;
            rep.triple = std::array<std::size_t, 3>{i + 1, j + 1, k + 1};
            rep.message = "Jacobi identity fails";
            return rep;
          }
      }
  return rep;
}

inline bool is_unimodular(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!is_zero(g.ad(i).trace())) return false;
  return true;
}

/// True iff every squarefree factor of char_poly(p) has only real roots.
inline bool has_only_real_roots(const UniPoly& p) {
  for (const auto& f : squarefree_decomposition(p)) {
    if (f.degree() <= 0) continue;
    if (static_cast<int>(isolate_real_roots(f).size()) != f.degree()) return false;
  }
  return true;
}

inline bool is_completely_solvable(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!has_only_real_roots(char_poly(g.ad(i)))) return false;
  return true;
}

/// Span of all brackets [x, y] with x, y from the given basis.
inline std::vector<Vector> bracket_span(const LieAlgebra& g, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) gens.push_back(g.bracket(a[i], b[j]));
  if (gens.empty()) return {};
  return row_space_basis(RationalMatrix::from_rows(gens, g.dim()));
}

/// Dimensions of g = g^(0) ⊇ g^(1) ⊇ ... until stable.
inline std::vector<std::size_t> derived_series_dims(const LieAlgebra& g) {
  std::vector<Vector> cur;
  for (std::size_t i = 0; i < g.dim(); ++i) cur.push_back(LieAlgebra::basis_vector(g.dim(), i));
  std::vector<std::size_t> dims{cur.size()};
  while (!cur.empty()) {
    auto next = bracket_span(g, cur, cur);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    dims.push_back(cur.size());
  }
  return dims;
}

inline bool is_solvable(const LieAlgebra& g) { return derived_series_dims(g).back() == 0; }

inline std::vector<std::size_t> lower_central_series_dims(const LieAlgebra& g) {
  std::vector<Vector> all, cur;
  for (std::size_t i = 0; i < g.dim(); ++i) all.push_back(LieAlgebra::basis_vector(g.dim(), i));
  cur = all;
  std::vector<std::size_t> dims{cur.size()};
  while (!cur.empty()) {
    auto next = bracket_span(g, all, cur);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    dims.push_back(cur.size());
  }
  return dims;
}

inline bool is_nilpotent_algebra(const LieAlgebra& g) { return lower_central_series_dims(g).back() == 0; }

/// Conjugates the structure constants by a basis permutation: new X_{perm[i]} = old X_i.
inline LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm) {
  LieAlgebra h(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) {
        const Rational& q = g.structure_constant(i, j, k);
        if (!is_zero(q)) h.add_bracket_term(perm[i], perm[j], perm[k], q);
      }
  h.name = g.name;
  h.parameters = g.parameters;
  h.irrational_symbols = g.irrational_symbols;
  return h;
}

/// Structure constants in the basis Y_j = Σ_i P(i,j) X_i.
inline LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& P) {
  const std::size_t n = g.dim();
  RationalMatrix Pinv = inverse(P);
  LieAlgebra h(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector v = Pinv.apply(g.bracket(P.col(a), P.col(b)));
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(v[k])) h.add_bracket_term(a, b, k, v[k]);
    }
  h.name = g.name;
  h.parameters = g.parameters;
  h.irrational_symbols = g.irrational_symbols;
  return h;
}

inline LieAlgebra abelian_algebra(std::size_t n) {
  LieAlgebra g(n);
  g.name = "R" + std::to_string(n);
  return g;
}

}  // namespace solvcoh

#endif
