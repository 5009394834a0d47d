#ifndef REYNOLDS_ALGEBRA_HPP
#define REYNOLDS_ALGEBRA_HPP

// Finite-dimensional unital associative algebras given by structure constants
// b_i * b_j = sum_k c[i][j][k] b_k.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "reynolds/error.hpp"
#include "reynolds/gf.hpp"
#include "reynolds/linalg.hpp"

namespace reynolds {

struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Element value = 0;

  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

class Algebra {
 public:
  Algebra() = default;

  /// Entries with repeated (i, j, k) are rejected; omitted entries are zero.
  /// No associativity or unit check happens here; see validate().
  Algebra(FiniteField field, std::size_t dim, const std::vector<StructureConstant>& sc, Vector unit,
          std::vector<std::string> labels = {})
      : field_(std::move(field)), dim_(dim), unit_(std::move(unit)), labels_(std::move(labels)) {
    if (dim_ == 0) throw AlgebraError("algebra dimension must be at least 1");
    if (unit_.size() != dim_) throw AlgebraError("unit has length " + std::to_string(unit_.size()) + ", expected " +
                                                 std::to_string(dim_));
    for (Element u : unit_)
      if (!field_.contains(u)) throw AlgebraError("unit coordinate outside the field");
    if (!labels_.empty() && labels_.size() != dim_) throw AlgebraError("label count does not match dimension");
    products_.assign(dim_ * dim_, {});
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Element> seen;
    for (const auto& c : sc) {
      if (c.i >= dim_ || c.j >= dim_ || c.k >= dim_)
        throw AlgebraError("structure constant index (" + std::to_string(c.i) + ", " + std::to_string(c.j) + ", " +
                           std::to_string(c.k) + ") out of range for dimension " + std::to_string(dim_));
      if (!field_.contains(c.value)) throw AlgebraError("structure constant value outside the field");
      if (!seen.emplace(std::make_tuple(c.i, c.j, c.k), c.value).second)
        throw AlgebraError("duplicate structure constant (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                           ", " + std::to_string(c.k) + ")");
    }
    for (const auto& [key, value] : seen) {
      if (value == 0) continue;
      const auto [i, j, k] = key;
      products_[i * dim_ + j].emplace_back(k, value);
    }
  }

  const FiniteField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Vector& unit() const noexcept { return unit_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::string label(std::size_t i) const { return labels_.empty() ? "b" + std::to_string(i) : labels_.at(i); }

  /// Nonzero entries of b_i * b_j as (k, c[i][j][k]).
  const std::vector<std::pair<std::size_t, Element>>& basis_product(std::size_t i, std::size_t j) const {
    return products_[i * dim_ + j];
  }

  /// Nonzero structure constants, sorted by (i, j, k).
  std::vector<StructureConstant> structure_constants() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [k, v] : products_[i * dim_ + j]) out.push_back({i, j, k, v});
    return out;
  }

  /// c[i][j][k]
  Element coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [kk, v] : products_[i * dim_ + j])
      if (kk == k) return v;
    return 0;
  }

  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }
  Vector zero_vector() const { return Vector(dim_, 0); }

  Vector multiply(std::span<const Element> x, std::span<const Element> y) const {
    if (x.size() != dim_ || y.size() != dim_)
      throw DimensionError("multiply: operands of length " + std::to_string(x.size()) + " and " +
                           std::to_string(y.size()) + ", algebra dimension " + std::to_string(dim_));
    Vector out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) continue;
        const Element s = field_.mul(x[i], y[j]);
        for (const auto& [k, v] : products_[i * dim_ + j]) out[k] = field_.add(out[k], field_.mul(s, v));
      }
    }
    return out;
  }

  /// xy - yx
  Vector commutator(std::span<const Element> x, std::span<const Element> y) const {
    return sub(field_, multiply(x, y), multiply(y, x));
  }

  /// x^k by square-and-multiply; x^0 is the unit.
  Vector power(std::span<const Element> x, std::uint64_t k) const {
    Vector result = unit_;
    Vector base(x.begin(), x.end());
    while (k > 0) {
      if (k & 1) result = multiply(result, base);
      k >>= 1;
      if (k > 0) base = multiply(base, base);
    }
    return result;
  }

  /// x^(p^n): n rounds of p-th powering.
  Vector p_power(std::span<const Element> x, unsigned n) const {
    Vector r(x.begin(), x.end());
    for (unsigned i = 0; i < n; ++i) r = power(r, field_.characteristic());
    return r;
  }

 private:
  FiniteField field_;
  std::size_t dim_ = 0;
  Vector unit_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<std::size_t, Element>>> products_;
};

struct ValidationReport {
  bool ok = true;
  std::string message;  // first violation, empty when ok

  explicit operator bool() const noexcept { return ok; }
};

/// Associativity on all basis triples and the two-sided unit law on all basis vectors.
inline ValidationReport validate(const Algebra& a) {
  const std::size_t d = a.dim();
  const FiniteField& f = a.field();
  for (std::size_t i = 0; i < d; ++i) {
    const Vector bi = a.basis_vector(i);
    if (a.multiply(a.unit(), bi) != bi)
      return {false, "unit law fails: 1 * " + a.label(i) + " != " + a.label(i)};
    if (a.multiply(bi, a.unit()) != bi)
      return {false, "unit law fails: " + a.label(i) + " * 1 != " + a.label(i)};
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector ij(d, 0);
      for (const auto& [k, v] : a.basis_product(i, j)) ij[k] = v;
      for (std::size_t l = 0; l < d; ++l) {
        // (b_i b_j) b_l
        Vector left(d, 0);
        for (std::size_t k = 0; k < d; ++k) {
          if (ij[k] == 0) continue;
          for (const auto& [m, v] : a.basis_product(k, l)) left[m] = f.add(left[m], f.mul(ij[k], v));
        }
        // b_i (b_j b_l)
        Vector right(d, 0);
        for (const auto& [k, c] : a.basis_product(j, l))
          for (const auto& [m, v] : a.basis_product(i, k)) right[m] = f.add(right[m], f.mul(c, v));
        if (left != right) {
          std::ostringstream os;
          os << "associativity fails on basis triple (" << i << ", " << j << ", " << l << "): ("
             << a.label(i) << "*" << a.label(j) << ")*" << a.label(l) << " != " << a.label(i) << "*("
             << a.label(j) << "*" << a.label(l) << ")";
          return {false, os.str()};
        }
      }
    }
  }
  return {true, {}};
}

/// Throws AlgebraError naming the first violation.
inline void require_valid(const Algebra& a) {
  if (auto r = validate(a); !r) throw AlgebraError(r.message);
}

/// K(A): span of b_i b_j - b_j b_i over i < j.
inline Subspace commutator_space(const Algebra& a) {
  const std::size_t d = a.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector c = a.commutator(a.basis_vector(i), a.basis_vector(j));
      if (!is_zero(c)) gens.push_back(std::move(c));
    }
  return Subspace::span(a.field(), d, gens);
}

/// Z(A): common kernel of x -> x b_j - b_j x over all j.
inline Subspace center(const Algebra& a) {
  const std::size_t d = a.dim();
  const FiniteField& f = a.field();
  // Row (j, k) of the system: coefficient of b_k in x b_j - b_j x, as a linear form in x.
  Matrix system(f, d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& [k, v] : a.basis_product(i, j)) system(j * d + k, i) = f.add(system(j * d + k, i), v);
      for (const auto& [k, v] : a.basis_product(j, i)) system(j * d + k, i) = f.sub(system(j * d + k, i), v);
    }
  return kernel(system);
}

inline bool is_commutative(const Algebra& a) { return commutator_space(a).dim() == 0; }

/// A linear functional in dual-basis coordinates.
struct LinearFunctional {
  Vector coords;

  Element operator()(const FiniteField& f, std::span<const Element> x) const { return dot(f, coords, x); }
  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

/// The bilinear form <a, b> = pi(ab) of a symmetric algebra.
class SymmetrizingForm {
 public:
  const LinearFunctional& pi() const noexcept { return pi_; }
  const Matrix& gram() const noexcept { return gram_; }

  /// <a, b> = a^T gram b
  Element pair(std::span<const Element> a, std::span<const Element> b) const {
    return dot(gram_.field(), a, gram_.apply(b));
  }

 private:
  friend SymmetrizingForm form_from_functional(const Algebra&, const LinearFunctional&);
  SymmetrizingForm(LinearFunctional pi, Matrix gram) : pi_(std::move(pi)), gram_(std::move(gram)) {}

  LinearFunctional pi_;
  Matrix gram_;
};

/// gram[i][j] = pi(b_i b_j); accepted only if symmetric, associative and nondegenerate.
inline SymmetrizingForm form_from_functional(const Algebra& a, const LinearFunctional& pi) {
  const std::size_t d = a.dim();
  const FiniteField& f = a.field();
  if (pi.coords.size() != d)
    throw FormError("functional has length " + std::to_string(pi.coords.size()) + ", expected " +
                    std::to_string(d));
  Matrix gram(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Element acc = 0;
      for (const auto& [k, v] : a.basis_product(i, j)) acc = f.add(acc, f.mul(v, pi.coords[k]));
      gram(i, j) = acc;
    }
  if (!gram.is_symmetric()) throw FormError("not a trace form: pi(ab) != pi(ba) for some basis pair");
  // <ab, c> = pi((ab)c) and <a, bc> = pi(a(bc)) agree for associative algebras; checked all the same.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        Element lhs = 0, rhs = 0;
        for (const auto& [k, v] : a.basis_product(i, j)) lhs = f.add(lhs, f.mul(v, gram(k, l)));
        for (const auto& [k, v] : a.basis_product(j, l)) rhs = f.add(rhs, f.mul(v, gram(i, k)));
        if (lhs != rhs)
          throw FormError("form is not associative on basis triple (" + std::to_string(i) + ", " +
                          std::to_string(j) + ", " + std::to_string(l) + ")");
      }
  if (!is_invertible(gram)) throw FormError("degenerate form (algebra not symmetric via this pi)");
  return SymmetrizingForm(pi, std::move(gram));
}

/// GF(p^e) as a one-dimensional algebra.
inline Algebra field_algebra(const FiniteField& f) { return Algebra(f, 1, {{0, 0, 0, 1}}, {1}, {"1"}); }

/// M_m(A) with basis e_rs (x) b_i at index (r m + s) d + i.
inline Algebra matrix_algebra(const Algebra& a, std::size_t m) {
  if (m == 0) throw AlgebraError("matrix size must be at least 1");
  const std::size_t d = a.dim();
  auto index = [&](std::size_t r, std::size_t s, std::size_t i) { return (r * m + s) * d + i; };
  std::vector<StructureConstant> sc;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t u = 0; u < m; ++u)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, v] : a.basis_product(i, j)) sc.push_back({index(r, s, i), index(s, u, j), index(r, u, k), v});
  Vector unit(m * m * d, 0);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < d; ++i) unit[index(r, r, i)] = a.unit()[i];
  std::vector<std::string> labels;
  if (m == 1) return Algebra(a.field(), d, sc, unit, a.labels());
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t i = 0; i < d; ++i)
        labels.push_back("e" + std::to_string(r + 1) + std::to_string(s + 1) + "(" + a.label(i) + ")");
  return Algebra(a.field(), m * m * d, sc, unit, labels);
}

/// A x B with block-diagonal structure constants.
inline Algebra direct_product(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw FieldError("direct product of algebras over different fields");
  const std::size_t da = a.dim();
  std::vector<StructureConstant> sc = a.structure_constants();
  for (auto c : b.structure_constants()) sc.push_back({c.i + da, c.j + da, c.k + da, c.value});
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i) labels.push_back("(" + a.label(i) + ",0)");
  for (std::size_t i = 0; i < b.dim(); ++i) labels.push_back("(0," + b.label(i) + ")");
  return Algebra(a.field(), da + b.dim(), sc, unit, labels);
}

/// Relabels the basis so that old basis vector i becomes new basis vector perm[i].
inline Algebra permute_basis(const Algebra& a, const std::vector<std::size_t>& perm) {
  const std::size_t d = a.dim();
  if (perm.size() != d) throw DimensionError("permutation length mismatch");
  std::vector<bool> hit(d, false);
  for (auto p : perm) {
    if (p >= d || hit[p]) throw DimensionError("not a permutation");
    hit[p] = true;
  }
  std::vector<StructureConstant> sc;
  for (auto c : a.structure_constants()) sc.push_back({perm[c.i], perm[c.j], perm[c.k], c.value});
  Vector unit(d);
  std::vector<std::string> labels(d);
  for (std::size_t i = 0; i < d; ++i) {
    unit[perm[i]] = a.unit()[i];
    labels[perm[i]] = a.label(i);
  }
  return Algebra(a.field(), d, sc, unit, labels);
}

/// Coordinates of a vector after permute_basis(perm).
inline Vector permute_vector(std::span<const Element> v, const std::vector<std::size_t>& perm) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[perm.at(i)] = v[i];
  return out;
}

/// Human-readable element, e.g. "e11 + 2*e12".
inline std::string format_element(const Algebra& a, std::span<const Element> x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (x[i] != 1) out += "(" + a.field().format(x[i]) + ")*";
    out += a.label(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace reynolds

#endif  // REYNOLDS_ALGEBRA_HPP
