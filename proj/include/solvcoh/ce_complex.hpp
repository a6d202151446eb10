#ifndef SOLVCOH_CE_COMPLEX_HPP
#define SOLVCOH_CE_COMPLEX_HPP

#include "solvcoh/lie_algebra.hpp"
#include "solvcoh/matrix.hpp"

#include <bit>
#include <functional>
#include <map>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace solvcoh {

using Mask = std::uint32_t;

/// Λ•g* with the basis α^{i1...ip} (i1<...<ip) ordered lexicographically in each degree,
/// together with the Chevalley-Eilenberg differential dα(X,Y) = -α([X,Y]).
class ExteriorAlgebra {
 public:
  explicit ExteriorAlgebra(const LieAlgebra& g) : n_(g.dim()) {
    build_basis();
    build_differential(g);
  }
  /// Exterior algebra on n generators with zero differential.
  explicit ExteriorAlgebra(std::size_t n) : n_(n) {
    build_basis();
    for (std::size_t p = 0; p <= n_; ++p) d_.emplace_back(p < n_ ? size(p + 1) : 0, size(p));
  }

  std::size_t n() const { return n_; }
  std::size_t size(std::size_t p) const { return p <= n_ ? masks_[p].size() : 0; }
  Mask mask(std::size_t p, std::size_t idx) const { return masks_[p][idx]; }
  std::size_t index(Mask m) const { return pos_.at(m); }
  /// d: Λ^p → Λ^{p+1} as a matrix acting on coordinate columns.
  const RationalMatrix& d(std::size_t p) const { return d_.at(p); }

  template <class T>
  std::vector<T> apply_d(std::size_t p, const std::vector<T>& x) const {
    if (p >= n_) return {};
    const auto& m = d_[p];
    std::vector<T> out(m.rows(), T(0));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (detail::scalar_is_zero(x[j])) continue;
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (!is_zero(m(i, j))) out[i] = out[i] + T(m(i, j)) * x[j];
    }
    return out;
  }

  static int wedge_sign(Mask a, Mask b) {
    // number of pairs (i in a, j in b) with i > j
    int inv = 0;
    for (Mask x = b; x; x &= x - 1) {
      int j = std::countr_zero(x);
      inv += std::popcount(a >> (j + 1));
    }
    return (inv & 1) ? -1 : 1;
  }

  template <class T>
  std::vector<T> wedge(std::size_t p, const std::vector<T>& x, std::size_t q, const std::vector<T>& y) const {
    if (p + q > n_) return {};
    std::vector<T> out(size(p + q), T(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (detail::scalar_is_zero(x[i])) continue;
      Mask a = masks_[p][i];
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (detail::scalar_is_zero(y[j])) continue;
        Mask b = masks_[q][j];
        if (a & b) continue;
        T t = x[i] * y[j];
        if (wedge_sign(a, b) < 0) t = -t;
        std::size_t k = pos_.at(a | b);
        out[k] = out[k] + t;
      }
    }
    return out;
  }

  Vector unit(std::size_t p, Mask m) const {
    Vector v(size(p), Rational(0));
    v[pos_.at(m)] = 1;
    return v;
  }
  /// Basis monomial from 1-based indices, e.g. {1,4,5} for α^{145}.
  Vector monomial(std::initializer_list<std::size_t> idx) const {
    Mask m = 0;
    for (auto i : idx) m |= Mask(1) << (i - 1);
    return unit(std::popcount(m), m);
  }

  static std::string mask_name(Mask m) {
    std::string s = "a";
    for (std::size_t i = 0; i < 32; ++i)
      if (m & (Mask(1) << i)) s += (i < 9) ? std::to_string(i + 1) : "{" + std::to_string(i + 1) + "}";
    return s;
  }
  std::string monomial_name(std::size_t p, std::size_t idx) const { return p == 0 ? "1" : mask_name(masks_[p][idx]); }

  template <class T>
  std::string form_to_string(std::size_t p, const std::vector<T>& x) const {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (detail::scalar_is_zero(x[i])) continue;
      std::string c = detail::scalar_to_string(x[i]);
      if (!s.empty()) s += " + ";
      s += (c == "1" ? "" : c == "-1" ? "-" : c + "*") + monomial_name(p, i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void build_basis() {
    if (n_ > 20) throw SolvcohError("exterior algebra too large");
    masks_.assign(n_ + 1, {});
    // lexicographic order of sorted index tuples
    std::vector<std::vector<Mask>> by_deg(n_ + 1);
    std::function<void(std::size_t, Mask, std::size_t)> rec = [&](std::size_t start, Mask m, std::size_t deg) {
      by_deg[deg].push_back(m);
      for (std::size_t i = start; i < n_; ++i) rec(i + 1, m | (Mask(1) << i), deg + 1);
    };
    rec(0, 0, 0);
    masks_ = std::move(by_deg);
    for (std::size_t p = 0; p <= n_; ++p)
      for (std::size_t i = 0; i < masks_[p].size(); ++i) pos_[masks_[p][i]] = i;
  }

  void build_differential(const LieAlgebra& g) {
    // dα^k = -Σ_{i<j} c_ij^k α^{ij}
    std::vector<Vector> d1(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      d1[k] = Vector(size(2), Rational(0));
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) {
          const Rational& c = g.structure_constant(i, j, k);
          if (!is_zero(c)) d1[k][pos_.at((Mask(1) << i) | (Mask(1) << j))] -= c;
        }
    }
    d_.clear();
    for (std::size_t p = 0; p <= n_; ++p) {
      RationalMatrix m(p < n_ ? size(p + 1) : 0, size(p));
      if (p < n_) {
        for (std::size_t col = 0; col < size(p); ++col) {
          Mask a = masks_[p][col];
          // d(α^{i1} ∧ rest) = dα^{i1} ∧ rest - α^{i1} ∧ d(rest), expanded over positions
          int r = 0;
          for (Mask x = a; x; x &= x - 1, ++r) {
            int i = std::countr_zero(x);
            Mask rest = a & ~(Mask(1) << i);
            // α^a = (-1)^r α^i ∧ α^rest
            for (std::size_t t = 0; t < d1[i].size(); ++t) {
              if (is_zero(d1[i][t])) continue;
              Mask b = masks_[2][t];
              if (b & rest) continue;
              int s = wedge_sign(b, rest) * ((r & 1) ? -1 : 1);
              std::size_t row = pos_.at(b | rest);
              if (s > 0) m(row, col) += d1[i][t];
              else m(row, col) -= d1[i][t];
            }
          }
        }
      }
      d_.push_back(std::move(m));
    }
  }

  std::size_t n_;
  std::vector<std::vector<Mask>> masks_;
  std::unordered_map<Mask, std::size_t> pos_;
  std::vector<RationalMatrix> d_;
};

using ExteriorPtr = std::shared_ptr<const ExteriorAlgebra>;

/// Sparse form: strictly increasing 1-based multi-index → nonzero coefficient.
struct ExteriorForm {
  std::size_t degree = 0;
  std::map<std::vector<std::size_t>, Rational> terms;

  void add(std::vector<std::size_t> idx, const Rational& c) {
    if (is_zero(c)) return;
    Rational& t = terms[std::move(idx)];
    t += c;
  }
  void prune() {
    std::erase_if(terms, [](const auto& kv) { return is_zero(kv.second); });
  }
  bool is_zero_form() const { return terms.empty(); }
  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) { return a.degree == b.degree && a.terms == b.terms; }

  static ExteriorForm from_dense(const ExteriorAlgebra& e, std::size_t p, const Vector& v) {
    ExteriorForm f;
    f.degree = p;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_zero(v[i])) continue;
      std::vector<std::size_t> idx;
      for (Mask m = e.mask(p, i); m; m &= m - 1) idx.push_back(std::countr_zero(m) + 1);
      f.terms[idx] = v[i];
    }
    return f;
  }
  Vector to_dense(const ExteriorAlgebra& e) const {
    Vector v(e.size(degree), Rational(0));
    for (const auto& [idx, c] : terms) {
      if (idx.size() != degree) throw SolvcohError("multi-index length does not match form degree");
      Mask m = 0;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 1 || idx[k] > e.n() || (k && idx[k] <= idx[k - 1])) throw SolvcohError("multi-index must be strictly increasing and in range");
        m |= Mask(1) << (idx[k] - 1);
      }
      v[e.index(m)] += c;
    }
    return v;
  }
  std::string to_string(const ExteriorAlgebra& e) const { return e.form_to_string(degree, to_dense(e)); }
};

inline ExteriorForm ce_differential(const ExteriorAlgebra& e, const ExteriorForm& f) {
  if (f.degree > e.n()) throw SolvcohError("form degree exceeds dimension");
  if (f.degree == e.n()) return ExteriorForm{f.degree + 1, {}};
  return ExteriorForm::from_dense(e, f.degree + 1, e.apply_d(f.degree, f.to_dense(e)));
}
inline ExteriorForm ce_differential(const LieAlgebra& g, const ExteriorForm& f) { return ce_differential(ExteriorAlgebra(g), f); }

/// A d-stable subalgebra of Λ•g*, given by an RREF basis (rows, ambient coordinates) in each degree.
template <class T>
struct BasicFiniteCdga {
  ExteriorPtr ambient;
  std::vector<Matrix<T>> basis;

  std::size_t dim(std::size_t p) const { return p < basis.size() ? basis[p].rows() : 0; }
  std::size_t top() const { return basis.empty() ? 0 : basis.size() - 1; }

  static BasicFiniteCdga full(const ExteriorPtr& ext) {
    BasicFiniteCdga a{ext, {}};
    for (std::size_t p = 0; p <= ext->n(); ++p) a.basis.push_back(Matrix<T>::identity(ext->size(p)));
    return a;
  }
  static BasicFiniteCdga of(const LieAlgebra& g) { return full(std::make_shared<ExteriorAlgebra>(g)); }
};
using FiniteCdga = BasicFiniteCdga<Rational>;

template <class T>
bool is_zero_vector(const std::vector<T>& v) {
  for (const auto& x : v)
    if (!detail::scalar_is_zero(x)) return false;
  return true;
}

/// Reduces v modulo an RREF row basis at its pivots.
template <class T>
std::vector<T> reduce_modulo(const std::vector<T>& v, const Matrix<T>& rows, const std::vector<std::size_t>& pivots) {
  std::vector<T> r = v;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    T f = r[pivots[i]];
    if (detail::scalar_is_zero(f)) continue;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!detail::scalar_is_zero(rows(i, j))) r[j] = r[j] - f * rows(i, j);
  }
  return r;
}

template <class T>
struct CohomologyDegree {
  std::vector<std::vector<T>> cocycles;  // basis of Z^p, ambient coordinates
  Matrix<T> boundary_rref;               // rows span B^p
  std::vector<std::size_t> boundary_pivots;
  std::vector<std::vector<T>> reps;      // H^p basis: RREF, reduced modulo B^p
  std::vector<std::size_t> rep_pivots;
  std::size_t betti() const { return reps.size(); }
};

/// Cohomology of a finite CDGA with explicit representatives and cup products.
template <class T>
class BasicCohomology {
 public:
  using Vec = std::vector<T>;
  explicit BasicCohomology(BasicFiniteCdga<T> a) : a_(std::move(a)) { compute(); }
  static BasicCohomology of(const LieAlgebra& g) { return BasicCohomology(BasicFiniteCdga<T>::of(g)); }

  const BasicFiniteCdga<T>& algebra() const { return a_; }
  const ExteriorAlgebra& ext() const { return *a_.ambient; }
  std::size_t top() const { return a_.top(); }
  const CohomologyDegree<T>& degree(std::size_t p) const { return deg_.at(p); }
  std::size_t betti(std::size_t p) const { return p < deg_.size() ? deg_[p].betti() : 0; }
  std::vector<std::size_t> betti_numbers() const {
    std::vector<std::size_t> b;
    for (const auto& d : deg_) b.push_back(d.betti());
    return b;
  }

  bool is_cocycle(std::size_t p, const Vec& z) const { return is_zero_vector(ext().apply_d(p, z)); }
  bool is_coboundary(std::size_t p, const Vec& z) const {
    const auto& d = deg_.at(p);
    return is_zero_vector(reduce_modulo(z, d.boundary_rref, d.boundary_pivots));
  }
  /// Coordinates of [z] in the representative basis.
  Vec coords(std::size_t p, const Vec& z) const {
    const auto& d = deg_.at(p);
    if (!is_cocycle(p, z)) throw SolvcohError("coordinates requested for a non-closed form");
    Vec r = reduce_modulo(z, d.boundary_rref, d.boundary_pivots);
    Vec c(d.reps.size(), T(0));
    for (std::size_t i = 0; i < d.reps.size(); ++i) c[i] = r[d.rep_pivots[i]];
    for (std::size_t i = 0; i < d.reps.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] - c[i] * d.reps[i][j];
    if (!is_zero_vector(r)) throw SolvcohError("form does not lie in the cocycle space of this algebra");
    return c;
  }
  Vec representative(std::size_t p, const Vec& c) const {
    const auto& d = deg_.at(p);
    Vec r(ext().size(p), T(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!detail::scalar_is_zero(c[i]))
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] + c[i] * d.reps[i][j];
    return r;
  }
  /// [x] ⌣ [y] in coordinates; the empty (zero) class past the top degree.
  Vec cup(std::size_t p, const Vec& x, std::size_t q, const Vec& y) const {
    if (p + q > top()) return {};
    return coords(p + q, ext().wedge(p, representative(p, x), q, representative(q, y)));
  }
  Vec basis_class(std::size_t p, std::size_t i) const {
    Vec c(betti(p), T(0));
    c.at(i) = T(1);
    return c;
  }
  std::string rep_names(std::size_t p) const {
    std::string s;
    for (const auto& r : deg_.at(p).reps) s += (s.empty() ? "" : ", ") + ext().form_to_string(p, r);
    return s;
  }

 private:
  void compute() {
    const auto& ext = *a_.ambient;
    const std::size_t top = a_.top();
    std::vector<std::vector<Vec>> images(top + 2);
    deg_.assign(top + 1, {});
    for (std::size_t p = 0; p <= top; ++p) {
      const auto& V = a_.basis[p];
      if (V.rows() == 0) continue;
      if (p >= ext.n()) {
        for (std::size_t i = 0; i < V.rows(); ++i) deg_[p].cocycles.push_back(V.row(i));
        continue;
      }
      std::vector<Vec> dv;
      for (std::size_t i = 0; i < V.rows(); ++i) dv.push_back(ext.apply_d(p, V.row(i)));
      for (const auto& c : kernel(Matrix<T>::from_columns(dv, ext.size(p + 1)))) {
        Vec z(ext.size(p), T(0));
        for (std::size_t i = 0; i < c.size(); ++i)
          if (!detail::scalar_is_zero(c[i]))
            for (std::size_t j = 0; j < z.size(); ++j) z[j] = z[j] + c[i] * V(i, j);
        deg_[p].cocycles.push_back(std::move(z));
      }
      for (auto& x : dv)
        if (!is_zero_vector(x)) images[p + 1].push_back(std::move(x));
    }
    for (std::size_t p = 0; p <= top; ++p) {
      auto& d = deg_[p];
      const std::size_t width = ext.size(p);
      d.boundary_rref = Matrix<T>(0, width);
      if (!images[p].empty()) {
        auto rr = rref(Matrix<T>::from_rows(images[p], width));
        d.boundary_rref = rr.reduced.block(0, 0, rr.rank, width);
        d.boundary_pivots = rr.pivots;
      }
      std::vector<Vec> red;
      for (const auto& z : d.cocycles) {
        Vec r = reduce_modulo(z, d.boundary_rref, d.boundary_pivots);
        if (!is_zero_vector(r)) red.push_back(std::move(r));
      }
      if (!red.empty()) {
        auto rr = rref(Matrix<T>::from_rows(red, width));
        for (std::size_t i = 0; i < rr.rank; ++i) d.reps.push_back(rr.reduced.row(i));
        d.rep_pivots = rr.pivots;
      }
      if (d.cocycles.size() != d.reps.size() + d.boundary_pivots.size())
        throw SolvcohError("internal error: B^p is not contained in Z^p");
    }
  }

  BasicFiniteCdga<T> a_;
  std::vector<CohomologyDegree<T>> deg_;
};
using Cohomology = BasicCohomology<Rational>;

inline std::vector<std::size_t> betti_numbers(const LieAlgebra& g) { return Cohomology::of(g).betti_numbers(); }

/// b_p = b_{n-p} and H^p × H^{n-p} → H^n nondegenerate. Unimodular algebras only.
inline bool poincare_check(const LieAlgebra& g, const Cohomology& h) {
  if (!is_unimodular(g)) throw SolvcohError("Poincare duality check requires a unimodular algebra");
  const std::size_t n = h.top();
  if (h.betti(n) != 1) return false;
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t b = h.betti(p);
    if (b != h.betti(n - p)) return false;
    RationalMatrix pair(b, b);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) pair(i, j) = h.cup(p, h.basis_class(p, i), n - p, h.basis_class(n - p, j))[0];
    if (rank(pair) != b) return false;
  }
  return true;
}
inline bool poincare_check(const LieAlgebra& g) { return poincare_check(g, Cohomology::of(g)); }

}  // namespace solvcoh

#endif
