#ifndef SOLVCOH_MATRIX_HPP
#define SOLVCOH_MATRIX_HPP

#include "solvcoh/poly.hpp"
#include "solvcoh/rational.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace solvcoh {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data) : r_(rows), c_(cols), a_(std::move(data)) {
    if (a_.size() != r_ * c_) throw SolvcohError("matrix data size mismatch");
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const { return std::vector<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
    for (std::size_t i = 0; i < b.r_; ++i)
      for (std::size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }
  Matrix block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!detail::scalar_is_zero(x)) return false;
    return true;
  }
  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) s = s + (*this)(i, i);
    return s;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - b.a_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw SolvcohError("matrix product dimension mismatch");
    Matrix r(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (detail::scalar_is_zero(x)) continue;
        for (std::size_t j = 0; j < b.c_; ++j) r(i, j) = r(i, j) + x * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.a_) x = s * x;
    return r;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != c_) throw SolvcohError("matrix-vector dimension mismatch");
    std::vector<T> out(r_, T(0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (!detail::scalar_is_zero(v[j])) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!detail::scalar_is_zero(a.a_[i] - b.a_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << detail::scalar_to_string((*this)(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw SolvcohError("matrix dimension mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using RationalMatrix = Matrix<Rational>;

template <class T>
struct RrefResult {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

namespace detail {

template <class T>
RrefResult<T> gauss_jordan(Matrix<T> m) {
  RrefResult<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

// integer rows, fraction-free forward pass, then rational back substitution
inline RrefResult<Rational> bareiss_rref(const Matrix<Rational>& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  RrefResult<Rational> out;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && sgn(a[p][c]) == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  Matrix<Rational> red(nr, nc);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t pc = out.pivots[i];
    for (std::size_t j = pc; j < nc; ++j) red(i, j) = Rational(a[i][j], a[i][pc]);
    for (std::size_t j = pc; j < nc; ++j) red(i, j).canonicalize();
  }
  for (std::size_t k = r; k-- > 0;) {
    std::size_t pc = out.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (is_zero(red(i, pc))) continue;
      Rational f = red(i, pc);
      for (std::size_t j = pc; j < nc; ++j) red(i, j) -= f * red(k, j);
    }
  }
  out.reduced = std::move(red);
  return out;
}

}  // namespace detail

template <class T>
RrefResult<T> rref(const Matrix<T>& m) {
  if constexpr (std::is_same_v<T, Rational>)
    return detail::bareiss_rref(m);
  else
    return detail::gauss_jordan(m);
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).rank;
}

/// Basis of the right kernel, one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel(const Matrix<T>& m) {
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Nonzero rows of the rref: a canonical basis of the row space.
template <class T>
std::vector<std::vector<T>> row_space_basis(const Matrix<T>& m) {
  auto rr = rref(m);
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < rr.rank; ++i) out.push_back(rr.reduced.row(i));
  return out;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw SolvcohError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<T>::identity(n));
  auto rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) throw SolvcohError("matrix is singular");
  return rr.reduced.block(0, n, n, n);
}

/// One solution of m x = b, or nothing when inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  auto rr = rref(aug);
  if (rr.rank > 0 && rr.pivots[rr.rank - 1] == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), T(0));
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.reduced(i, m.cols());
  return x;
}

/// Characteristic polynomial det(xI - m) by Berkowitz; division free, so valid over commutative rings.
template <class T>
Poly<T> char_poly(const Matrix<T>& m) {
  if (!m.is_square()) throw SolvcohError("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly<T>::constant(T(1));
  // vect holds coefficients, highest degree first
  std::vector<T> vect{T(1), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // toeplitz column built from the leading r x r block A, row R, column C, corner a
    std::vector<T> rr(r), cc(r);
    for (std::size_t j = 0; j < r; ++j) rr[j] = m(r, j);
    for (std::size_t i = 0; i < r; ++i) cc[i] = m(i, r);
    std::vector<T> q(r + 2, T(0));
    q[0] = T(1);
    q[1] = -m(r, r);
    std::vector<T> power = cc;  // A^k C
    for (std::size_t k = 0; k < r; ++k) {
      T s(0);
      for (std::size_t j = 0; j < r; ++j) s = s + rr[j] * power[j];
      q[k + 2] = -s;
      std::vector<T> next(r, T(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (!is_zero(power[j])) next[i] = next[i] + m(i, j) * power[j];
      power = std::move(next);
    }
    std::vector<T> nv(r + 2, T(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < vect.size(); ++j) nv[i] = nv[i] + q[i - j] * vect[j];
    vect = std::move(nv);
  }
  std::vector<T> low(vect.rbegin(), vect.rend());
  return Poly<T>(std::move(low));
}

template <class T>
Matrix<T> eval_poly(const Poly<T>& p, const Matrix<T>& m) {
  Matrix<T> acc(m.rows(), m.cols());
  for (int i = p.degree(); i >= 0; --i) acc = acc * m + p.coeff(i) * Matrix<T>::identity(m.rows());
  return acc;
}

template <class T>
T det(const Matrix<T>& m) {
  auto cp = char_poly(m);
  T c0 = cp.coeff(0);
  return (m.rows() % 2 == 0) ? c0 : T(-c0);
}

/// Minimal polynomial over a field: lower the exponents of the squarefree factors of the
/// characteristic polynomial while the product still annihilates m.
template <class T>
Poly<T> min_poly(const Matrix<T>& m) {
  auto cp = char_poly(m);
  auto parts = squarefree_decomposition(cp);
  std::vector<int> e(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) e[i] = parts[i].degree() > 0 ? static_cast<int>(i) + 1 : 0;
  auto product = [&]() {
    Poly<T> p = Poly<T>::constant(T(1));
    for (std::size_t i = 0; i < parts.size(); ++i) p = p * pow(parts[i], e[i]);
    return p;
  };
  for (std::size_t i = 0; i < parts.size(); ++i) {
    while (e[i] > 1) {
      --e[i];
      if (!eval_poly(product(), m).is_zero()) {
        ++e[i];
        break;
      }
    }
  }
  return product();
}

template <class T>
Matrix<T> matrix_pow(const Matrix<T>& m, int e) {
  Matrix<T> r = Matrix<T>::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

template <class T>
bool is_nilpotent(const Matrix<T>& m) {
  return matrix_pow(m, static_cast<int>(m.rows())).is_zero();
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

}  // namespace solvcoh

#endif
