#ifndef SOLVCOH_FREE_CDGA_HPP
#define SOLVCOH_FREE_CDGA_HPP

#include "solvcoh/ce_complex.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace solvcoh {

/// Graded vector spaces C^p with d and a graded-commutative product, in fixed bases.
class CochainAlgebra {
 public:
  virtual ~CochainAlgebra() = default;
  /// Cohomology is meaningful for p ≤ max_degree(); C^{max_degree()+1} exists so d is defined there.
  virtual std::size_t max_degree() const = 0;
  virtual std::size_t dim(std::size_t p) const = 0;
  virtual const RationalMatrix& d(std::size_t p) const = 0;
  virtual Vector mul(std::size_t p, const Vector& x, std::size_t q, const Vector& y) const = 0;
  virtual std::string describe(std::size_t p, const Vector& x) const = 0;

  Vector apply_d(std::size_t p, const Vector& x) const { return d(p).apply(x); }
};
using CochainPtr = std::shared_ptr<const CochainAlgebra>;

/// A sub-CDGA of Λg*, in the coordinates of its RREF basis.
class SubCdgaCochains : public CochainAlgebra {
 public:
  explicit SubCdgaCochains(FiniteCdga a) : a_(std::move(a)) {
    const auto& e = *a_.ambient;
    for (std::size_t p = 0; p <= e.n(); ++p) {
      const auto& b = a_.basis.at(p);
      if (b.rows()) {
        auto rr = rref(b);
        if (rr.rank != b.rows()) throw SolvcohError("sub-CDGA basis is not independent");
        a_.basis[p] = rr.reduced.block(0, 0, rr.rank, b.cols());
        pivots_.push_back(rr.pivots);
      } else {
        pivots_.push_back({});
      }
    }
    for (std::size_t p = 0; p <= e.n(); ++p) {
      RationalMatrix m(dim(p + 1), dim(p));
      for (std::size_t i = 0; i < dim(p); ++i) {
        Vector img = p < e.n() ? e.apply_d(p, a_.basis[p].row(i)) : Vector{};
        Vector c = p < e.n() ? coords(p + 1, img) : Vector{};
        for (std::size_t j = 0; j < c.size(); ++j) m(j, i) = c[j];
      }
      d_.push_back(std::move(m));
    }
  }

  const FiniteCdga& cdga() const { return a_; }
  std::size_t max_degree() const override { return a_.ambient->n(); }
  std::size_t dim(std::size_t p) const override { return a_.dim(p); }
  const RationalMatrix& d(std::size_t p) const override { return d_.at(p); }
  Vector mul(std::size_t p, const Vector& x, std::size_t q, const Vector& y) const override {
    if (p + q > max_degree()) return Vector{};
    return coords(p + q, a_.ambient->wedge(p, ambient(p, x), q, ambient(q, y)));
  }
  std::string describe(std::size_t p, const Vector& x) const override { return a_.ambient->form_to_string(p, ambient(p, x)); }

  Vector ambient(std::size_t p, const Vector& x) const {
    Vector v(a_.ambient->size(p), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i]))
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += x[i] * a_.basis[p](i, j);
    return v;
  }
  /// Coordinates of an ambient form lying in the subalgebra.
  Vector coords(std::size_t p, const Vector& v) const {
    if (p >= pivots_.size()) return Vector{};
    Vector c(dim(p));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = v[pivots_[p][i]];
    Vector r = v;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!is_zero(c[i]))
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c[i] * a_.basis[p](i, j);
    if (!is_zero_vector(r)) throw SolvcohError("form does not lie in the sub-CDGA");
    return c;
  }

 private:
  FiniteCdga a_;
  std::vector<std::vector<std::size_t>> pivots_;
  std::vector<RationalMatrix> d_;
};

/// Cohomology of a cochain algebra, with RREF representatives reduced modulo coboundaries.
class GradedCohomology {
 public:
  explicit GradedCohomology(CochainPtr c) : c_(std::move(c)) {
    const std::size_t top = c_->max_degree();
    deg_.assign(top + 1, {});
    for (std::size_t p = 0; p <= top; ++p) {
      auto& d = deg_[p];
      const std::size_t w = c_->dim(p);
      d.boundary_rref = RationalMatrix(0, w);
      std::vector<Vector> images;
      if (p > 0)
        for (std::size_t j = 0; j < c_->dim(p - 1); ++j) {
          Vector col = c_->d(p - 1).col(j);
          if (!is_zero_vector(col)) images.push_back(std::move(col));
        }
      if (!images.empty()) {
        auto rr = rref(RationalMatrix::from_rows(images, w));
        d.boundary_rref = rr.reduced.block(0, 0, rr.rank, w);
        d.boundary_pivots = rr.pivots;
      }
      if (w == 0) continue;
      d.cocycles = kernel(c_->d(p));
      if (c_->d(p).rows() == 0) {
        d.cocycles.clear();
        for (std::size_t i = 0; i < w; ++i) {
          Vector e(w, Rational(0));
          e[i] = 1;
          d.cocycles.push_back(e);
        }
      }
      std::vector<Vector> red;
      for (const auto& z : d.cocycles) {
        Vector r = reduce_modulo(z, d.boundary_rref, d.boundary_pivots);
        if (!is_zero_vector(r)) red.push_back(std::move(r));
      }
      if (!red.empty()) {
        auto rr = rref(RationalMatrix::from_rows(red, w));
        for (std::size_t i = 0; i < rr.rank; ++i) d.reps.push_back(rr.reduced.row(i));
        d.rep_pivots.assign(rr.pivots.begin(), rr.pivots.begin() + rr.rank);
      }
    }
  }

  const CochainAlgebra& cochains() const { return *c_; }
  const CochainPtr& cochains_ptr() const { return c_; }
  std::size_t top() const { return c_->max_degree(); }
  std::size_t betti(std::size_t p) const { return p < deg_.size() ? deg_[p].betti() : 0; }
  std::vector<std::size_t> betti_numbers() const {
    std::vector<std::size_t> b;
    for (const auto& d : deg_) b.push_back(d.betti());
    return b;
  }
  const CohomologyDegree<Rational>& degree(std::size_t p) const { return deg_.at(p); }

  bool is_cocycle(std::size_t p, const Vector& z) const { return is_zero_vector(c_->apply_d(p, z)); }
  bool is_coboundary(std::size_t p, const Vector& z) const {
    const auto& d = deg_.at(p);
    return is_zero_vector(reduce_modulo(z, d.boundary_rref, d.boundary_pivots));
  }
  Vector coords(std::size_t p, const Vector& z) const {
    const auto& d = deg_.at(p);
    if (!is_cocycle(p, z)) throw SolvcohError("coordinates requested for a non-closed cochain");
    Vector r = reduce_modulo(z, d.boundary_rref, d.boundary_pivots);
    Vector c(d.reps.size(), Rational(0));
    for (std::size_t i = 0; i < d.reps.size(); ++i) c[i] = r[d.rep_pivots[i]];
    for (std::size_t i = 0; i < d.reps.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c[i] * d.reps[i][j];
    if (!is_zero_vector(r)) throw SolvcohError("cochain is not a cocycle of this algebra");
    return c;
  }
  Vector representative(std::size_t p, const Vector& c) const {
    const auto& d = deg_.at(p);
    Vector r(c_->dim(p), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!is_zero(c[i]))
        for (std::size_t j = 0; j < r.size(); ++j) r[j] += c[i] * d.reps[i][j];
    return r;
  }
  Vector basis_class(std::size_t p, std::size_t i) const {
    Vector c(betti(p), Rational(0));
    c.at(i) = 1;
    return c;
  }
  /// Class product; empty past the top degree.
  Vector cup(std::size_t p, const Vector& x, std::size_t q, const Vector& y) const {
    if (p + q > top()) return {};
    return coords(p + q, c_->mul(p, representative(p, x), q, representative(q, y)));
  }
  /// Some b with db = z, if z is exact.
  std::optional<Vector> primitive(std::size_t p, const Vector& z) const {
    if (p == 0) return is_zero_vector(z) ? std::optional<Vector>(Vector{}) : std::nullopt;
    if (c_->dim(p - 1) == 0) return is_zero_vector(z) ? std::optional<Vector>(Vector{}) : std::nullopt;
    return solve(c_->d(p - 1), z);
  }

 private:
  CochainPtr c_;
  std::vector<CohomologyDegree<Rational>> deg_;
};

inline GradedCohomology graded_cohomology(const FiniteCdga& a) { return GradedCohomology(std::make_shared<SubCdgaCochains>(a)); }

using FreeMonomial = std::vector<int>;  // exponent per generator, trailing zeros trimmed
using FreeElement = std::map<FreeMonomial, Rational>;

inline void add_term(FreeElement& e, FreeMonomial m, const Rational& c) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  if (is_zero(c)) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (is_zero(it->second)) e.erase(it);
  }
}

inline FreeElement operator+(FreeElement a, const FreeElement& b) {
  for (const auto& [m, c] : b) add_term(a, m, c);
  return a;
}
inline FreeElement scaled(const FreeElement& a, const Rational& s) {
  FreeElement r;
  for (const auto& [m, c] : a) add_term(r, m, c * s);
  return r;
}

struct FreeGenerator {
  std::string name;
  int degree = 1;
};

/// Free graded-commutative algebra Λ(V) with a differential given on generators.
class FreeCdga {
 public:
  std::size_t size() const { return gens_.size(); }
  const std::vector<FreeGenerator>& generators() const { return gens_; }
  const FreeElement& differential(std::size_t i) const { return dgen_.at(i); }

  /// Adds a generator; d must be homogeneous of degree+1 in earlier generators with d(d) = 0.
  std::size_t add_generator(std::string name, int degree, FreeElement dv = {}) {
    if (degree < 1) throw SolvcohError("generators need positive degree");
    for (const auto& [m, c] : dv) {
      if (m.size() > gens_.size()) throw SolvcohError("differential of " + name + " uses a later generator");
      if (this->degree(m) != degree + 1) throw SolvcohError("differential of " + name + " is not of degree " + std::to_string(degree + 1));
    }
    if (!d(dv).empty()) throw SolvcohError("d^2 != 0 on generator " + name);
    gens_.push_back({std::move(name), degree});
    dgen_.push_back(std::move(dv));
    return gens_.size() - 1;
  }
  FreeElement gen(std::size_t i) const {
    FreeMonomial m(i + 1, 0);
    m[i] = 1;
    return FreeElement{{m, Rational(1)}};
  }
  static FreeElement one() { return FreeElement{{FreeMonomial{}, Rational(1)}}; }

  int degree(const FreeMonomial& m) const {
    int s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * gens_.at(i).degree;
    return s;
  }
  bool odd(std::size_t i) const { return gens_[i].degree % 2; }

  FreeElement mul(const FreeElement& a, const FreeElement& b) const {
    FreeElement r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        FreeMonomial m(std::max(ma.size(), mb.size()), 0);
        bool zero = false;
        int sign = 1;
        for (std::size_t i = 0; i < m.size() && !zero; ++i) {
          int x = i < ma.size() ? ma[i] : 0, y = i < mb.size() ? mb[i] : 0;
          if (odd(i) && x && y) zero = true;
          m[i] = x + y;
        }
        if (zero) continue;
        for (std::size_t j = 0; j < mb.size(); ++j)
          if (mb[j] && odd(j))
            for (std::size_t i = j + 1; i < ma.size(); ++i)
              if (ma[i] && odd(i)) sign = -sign;
        add_term(r, std::move(m), ca * cb * sign);
      }
    return r;
  }

  /// Extends d as a derivation of degree +1.
  FreeElement d(const FreeElement& a) const {
    FreeElement r;
    for (const auto& [m, c] : a) {
      int before = 0;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!dgen_[i].empty()) {
          FreeMonomial pre(m.begin(), m.begin() + i), post(m.begin() + i + 1, m.end()), mid(i + 1, 0);
          post.insert(post.begin(), i + 1, 0);
          mid[i] = m[i] - 1;
          FreeElement term = mul(mul(FreeElement{{pre, Rational(1)}}, scaled(mul(FreeElement{{mid, Rational(1)}}, dgen_[i]), Rational(m[i]))),
                                 FreeElement{{post, Rational(1)}});
          if (before % 2) term = scaled(term, Rational(-1));
          for (const auto& [mm, cc] : term) add_term(r, mm, cc * c);
        }
        before += m[i] * gens_[i].degree;
      }
    }
    return r;
  }

  /// Monomials of degree p.
  std::vector<FreeMonomial> basis(int p) const {
    std::vector<FreeMonomial> out;
    FreeMonomial cur(gens_.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
      if (i == gens_.size()) {
        if (left == 0) {
          FreeMonomial m = cur;
          while (!m.empty() && m.back() == 0) m.pop_back();
          out.push_back(std::move(m));
        }
        return;
      }
      const int g = gens_[i].degree;
      const int maxe = odd(i) ? 1 : left / g;
      for (int e = 0; e <= maxe && e * g <= left; ++e) {
        cur[i] = e;
        rec(i + 1, left - e * g);
      }
      cur[i] = 0;
    };
    rec(0, p);
    return out;
  }

  std::string monomial_string(const FreeMonomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!s.empty()) s += "*";
      s += gens_[i].name;
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }
  std::string to_string(const FreeElement& a) const {
    if (a.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : a) {
      Rational v = c;
      if (!s.empty()) {
        s += sgn(v) < 0 ? " - " : " + ";
        v = abs_value(v);
      } else if (sgn(v) < 0 && !m.empty()) {
        s += "-";
        v = -v;
      }
      std::string mono = monomial_string(m);
      if (m.empty()) s += v.get_str();
      else if (v == 1) s += mono;
      else s += v.get_str() + "*" + mono;
    }
    return s;
  }

  std::vector<std::size_t> generator_counts(int max_degree) const {
    std::vector<std::size_t> c(max_degree + 1, 0);
    for (const auto& g : gens_)
      if (g.degree <= max_degree) ++c[g.degree];
    return c;
  }
  /// d(V) ⊂ Λ^{≥2}V.
  bool is_minimal() const {
    for (const auto& dv : dgen_)
      for (const auto& [m, c] : dv) {
        int total = 0;
        for (int x : m) total += x;
        if (total < 2) return false;
      }
    return true;
  }
  /// Generators of degree ≤ s, as a sub-CDGA when d stays inside it.
  FreeCdga truncated(int s) const {
    FreeCdga r;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].degree <= s) keep.push_back(i);
    std::vector<int> pos(gens_.size(), -1);
    for (std::size_t k = 0; k < keep.size(); ++k) pos[keep[k]] = static_cast<int>(k);
    for (std::size_t i : keep) {
      FreeElement dv;
      for (const auto& [m, c] : dgen_[i]) {
        FreeMonomial mm(r.size() + 1, 0);
        for (std::size_t j = 0; j < m.size(); ++j)
          if (m[j]) {
            if (pos[j] < 0) throw SolvcohError("differential leaves the truncation");
            mm[pos[j]] = m[j];
          }
        add_term(dv, mm, c);
      }
      r.add_generator(gens_[i].name, gens_[i].degree, dv);
    }
    return r;
  }

 private:
  std::vector<FreeGenerator> gens_;
  std::vector<FreeElement> dgen_;
};

/// Λ(V) through degree cap+1 as a cochain algebra.
class FreeCochains : public CochainAlgebra {
 public:
  FreeCochains(FreeCdga a, std::size_t cap, std::size_t max_monomials = 200000) : a_(std::move(a)), cap_(cap) {
    std::size_t total = 0;
    for (std::size_t p = 0; p <= cap + 1; ++p) {
      basis_.push_back(a_.basis(static_cast<int>(p)));
      total += basis_.back().size();
      if (total > max_monomials) throw SolvcohError("free algebra too large through degree " + std::to_string(cap + 1));
      std::map<FreeMonomial, std::size_t> idx;
      for (std::size_t i = 0; i < basis_.back().size(); ++i) idx[basis_.back()[i]] = i;
      index_.push_back(std::move(idx));
    }
    for (std::size_t p = 0; p <= cap; ++p) {
      RationalMatrix m(dim(p + 1), dim(p));
      for (std::size_t j = 0; j < dim(p); ++j) {
        Vector v = to_vector(p + 1, a_.d(FreeElement{{basis_[p][j], Rational(1)}}));
        for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
      }
      d_.push_back(std::move(m));
    }
    d_.push_back(RationalMatrix(0, dim(cap + 1)));
  }

  const FreeCdga& algebra() const { return a_; }
  std::size_t max_degree() const override { return cap_; }
  std::size_t dim(std::size_t p) const override { return p < basis_.size() ? basis_[p].size() : 0; }
  const RationalMatrix& d(std::size_t p) const override { return d_.at(p); }
  Vector mul(std::size_t p, const Vector& x, std::size_t q, const Vector& y) const override {
    if (p + q > cap_ + 1) throw SolvcohError("product beyond the truncation degree");
    return to_vector(p + q, a_.mul(to_element(p, x), to_element(q, y)));
  }
  std::string describe(std::size_t p, const Vector& x) const override { return a_.to_string(to_element(p, x)); }

  const std::vector<FreeMonomial>& basis(std::size_t p) const { return basis_.at(p); }
  Vector to_vector(std::size_t p, const FreeElement& e) const {
    Vector v(dim(p), Rational(0));
    for (const auto& [m, c] : e) {
      auto it = index_.at(p).find(m);
      if (it == index_.at(p).end()) throw SolvcohError("element is not homogeneous of degree " + std::to_string(p));
      v[it->second] += c;
    }
    return v;
  }
  FreeElement to_element(std::size_t p, const Vector& v) const {
    FreeElement e;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) add_term(e, basis_.at(p)[i], v[i]);
    return e;
  }

 private:
  FreeCdga a_;
  std::size_t cap_;
  std::vector<std::vector<FreeMonomial>> basis_;
  std::vector<std::map<FreeMonomial, std::size_t>> index_;
  std::vector<RationalMatrix> d_;
};

}  // namespace solvcoh

#endif
