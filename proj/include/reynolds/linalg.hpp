#ifndef REYNOLDS_LINALG_HPP
#define REYNOLDS_LINALG_HPP

// Dense exact linear algebra over a FiniteField.
//
// A Subspace stores its basis in reduced row echelon form, so two equal
// subspaces always have identical stored bases and equality is a plain
// comparison of matrices.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reynolds/error.hpp"
#include "reynolds/gf.hpp"

namespace reynolds {

/// Coordinate vector; the field is supplied by context.
using Vector = std::vector<Element>;

inline bool is_zero(std::span<const Element> v) {
  for (Element x : v)
    if (x != 0) return false;
  return true;
}

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v.at(i) = 1;
  return v;
}

inline Vector add(const FiniteField& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

inline Vector sub(const FiniteField& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

inline Vector scale(const FiniteField& f, Element s, std::span<const Element> a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
  return r;
}

/// y += s * x
inline void axpy(const FiniteField& f, Element s, std::span<const Element> x, std::span<Element> y) {
  if (s == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(s, x[i]));
}

/// Standard pairing sum_i a_i b_i (vector against dual-basis coordinates).
inline Element dot(const FiniteField& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Element acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

/// Entrywise Frobenius twist x -> x^(p^n); n may be negative.
inline Vector twist(const FiniteField& f, std::span<const Element> a, long long n) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.twist(a[i], n);
  return r;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(FiniteField field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(const FiniteField& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const FiniteField& f, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
  }

  static Matrix from_columns(const FiniteField& f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  const FiniteField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  Vector row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector(s.begin(), s.end());
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_row(std::size_t r, std::span<const Element> v) {
    if (v.size() != cols_) throw DimensionError("row length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
  }

  void append_row(std::span<const Element> v) {
    if (v.size() != cols_) throw DimensionError("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// this * v
  Vector apply(std::span<const Element> v) const {
    if (v.size() != cols_) throw DimensionError("matrix/vector dimension mismatch");
    Vector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(field_, row(r), v);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw FieldError("mixed-field matrix product");
    if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) axpy(a.field_, a(r, k), b.row(k), out.row(r));
    return out;
  }

  /// Entrywise Frobenius twist.
  Matrix twisted(long long n) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = field_.twist(data_[i], n);
    return m;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FiniteField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

struct EchelonForm {
  Matrix reduced;  // nonzero rows only
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination. Zero rows are dropped from the result.
inline EchelonForm rref(Matrix m) {
  const FiniteField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t r = lead;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(lead, k));
    const Element inv = f.inv(m(lead, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) = f.mul(m(lead, k), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, c) == 0) continue;
      axpy(f, f.neg(m(i, c)), m.row(lead), m.row(i));
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(f, pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) reduced.set_row(i, m.row(i));
  return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank(); }

class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const FiniteField& f, std::size_t ambient) { return Subspace(Matrix(f, 0, ambient), {}); }

  static Subspace full(const FiniteField& f, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(Matrix::identity(f, ambient), std::move(piv));
  }

  /// Row space of m.
  static Subspace row_space(const Matrix& m) {
    auto e = rref(m);
    return Subspace(std::move(e.reduced), std::move(e.pivots));
  }

  static Subspace span(const FiniteField& f, std::size_t ambient, const std::vector<Vector>& generators) {
    return row_space(Matrix::from_rows(f, ambient, generators));
  }

  const FiniteField& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  /// Coordinates not occupied by a pivot; their unit vectors span a complement.
  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      if (k < pivots_.size() && pivots_[k] == c) {
        ++k;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  /// v minus its component along the basis; zero at every pivot. Canonical coset representative.
  Vector reduce(std::span<const Element> v) const {
    if (v.size() != ambient_dim()) throw DimensionError("vector length " + std::to_string(v.size()) +
                                                        " vs ambient dimension " + std::to_string(ambient_dim()));
    const FiniteField& f = field();
    Vector r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const Element c = r[pivots_[i]];
      if (c != 0) axpy(f, f.neg(c), basis_.row(i), r);
    }
    return r;
  }

  bool contains(std::span<const Element> v) const { return is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    check_compatible(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Coefficients of v in the stored basis, or nullopt if v is not in the subspace.
  std::optional<Vector> coordinates(std::span<const Element> v) const {
    if (!contains(v)) return std::nullopt;
    Vector c(dim());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    Matrix stacked = a.basis_;
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis_.row(i));
    return row_space(stacked);
  }

  void check_compatible(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim())
      throw DimensionError("ambient dimension mismatch: " + std::to_string(ambient_dim()) + " vs " +
                           std::to_string(other.ambient_dim()));
    if (field() != other.field()) throw FieldError("subspaces over different fields");
  }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel {v | m v = 0}.
inline Subspace kernel(const Matrix& m) {
  const FiniteField& f = m.field();
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    gens.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), gens);
}

/// Some x with m x = b, or nullopt.
inline std::optional<Vector> solve(const Matrix& m, std::span<const Element> b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  const FiniteField& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto e = rref(aug);
  Vector x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

inline bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const FiniteField& f = m.field();
  Matrix aug(f, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw DimensionError("matrix is singular");
  Matrix inv(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

/// Intersection from the kernel of the stacked relation sum a_i u_i - sum b_j v_j = 0.
inline Subspace intersect(const Subspace& u, const Subspace& v) {
  u.check_compatible(v);
  const FiniteField& f = u.field();
  const std::size_t d = u.ambient_dim();
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(f, d);
  Matrix rel(f, d, u.dim() + v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t r = 0; r < d; ++r) rel(r, i) = u.basis()(i, r);
  for (std::size_t j = 0; j < v.dim(); ++j)
    for (std::size_t r = 0; r < d; ++r) rel(r, u.dim() + j) = v.basis()(j, r);
  const Subspace k = kernel(rel);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Vector w(d, 0);
    for (std::size_t a = 0; a < u.dim(); ++a) axpy(f, k.basis()(i, a), u.basis().row(a), w);
    gens.push_back(std::move(w));
  }
  return Subspace::span(f, d, gens);
}

/// {a | <a, v> = a^T gram v = 0 for all v in V}.
inline Subspace orthogonal(const Subspace& v, const Matrix& gram) {
  if (gram.rows() != gram.cols() || gram.rows() != v.ambient_dim())
    throw DimensionError("gram matrix is " + std::to_string(gram.rows()) + "x" + std::to_string(gram.cols()) +
                         ", subspace ambient dimension is " + std::to_string(v.ambient_dim()));
  if (gram.field() != v.field()) throw FieldError("gram matrix over a different field");
  Matrix conditions(v.field(), 0, v.ambient_dim());
  for (std::size_t i = 0; i < v.dim(); ++i) conditions.append_row(gram.apply(v.basis().row(i)));
  return kernel(conditions);
}

/// Functionals (in dual-basis coordinates) vanishing on V.
inline Subspace annihilator(const Subspace& v) {
  if (v.dim() == 0) return Subspace::full(v.field(), v.ambient_dim());
  return kernel(v.basis());
}

/// Image of V under the linear map x -> m x.
inline Subspace image(const Matrix& m, const Subspace& v) {
  if (m.cols() != v.ambient_dim()) throw DimensionError("map domain does not match subspace ambient dimension");
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < v.dim(); ++i) gens.push_back(m.apply(v.basis().row(i)));
  return Subspace::span(m.field(), m.rows(), gens);
}

/// Image of the coordinate vectors under c -> sum c_i b_i, for a list of vectors b_i.
inline Vector combine(const FiniteField& f, std::size_t ambient, const std::vector<Vector>& vectors,
                      std::span<const Element> coeffs) {
  if (coeffs.size() != vectors.size()) throw DimensionError("coefficient count mismatch");
  Vector w(ambient, 0);
  for (std::size_t i = 0; i < vectors.size(); ++i) axpy(f, coeffs[i], vectors[i], w);
  return w;
}

}  // namespace reynolds

#endif  // REYNOLDS_LINALG_HPP
