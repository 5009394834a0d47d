#ifndef REYNOLDS_KULSHAMMER_HPP
#define REYNOLDS_KULSHAMMER_HPP

// The p-power map on A/K(A), the chain T_n(A) = {x | x^(p^n) in K(A)}, and for
// symmetric algebras the generalized Reynolds ideals T_n(A)^perp together with
// the maps xi_n : Z(A) -> Z(A) and kappa_n : A/K(A) -> A/K(A).
//
// All maps here are semilinear: f(c x) = c^(p^t) f(x) for a twist t. They are
// stored as f(x) = M * sigma^t(x), where sigma^t raises every coordinate to the
// p^t-th power.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reynolds/algebra.hpp"
#include "reynolds/error.hpp"
#include "reynolds/gf.hpp"
#include "reynolds/linalg.hpp"

namespace reynolds {

/// V / W with coset representatives given by the unit vectors at the non-pivot coordinates of W.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  explicit QuotientSpace(Subspace modded) : modded_(std::move(modded)), reps_(modded_.non_pivots()) {}

  const Subspace& modded() const noexcept { return modded_; }
  const std::vector<std::size_t>& representatives() const noexcept { return reps_; }
  std::size_t dim() const noexcept { return reps_.size(); }
  std::size_t ambient_dim() const noexcept { return modded_.ambient_dim(); }
  const FiniteField& field() const noexcept { return modded_.field(); }

  /// Quotient coordinates of the class of v.
  Vector project(std::span<const Element> v) const {
    const Vector r = modded_.reduce(v);
    Vector c(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) c[i] = r[reps_[i]];
    return c;
  }

  /// The canonical representative with the given quotient coordinates.
  Vector lift(std::span<const Element> coords) const {
    if (coords.size() != reps_.size()) throw DimensionError("quotient coordinate length mismatch");
    Vector v(ambient_dim(), 0);
    for (std::size_t i = 0; i < reps_.size(); ++i) v[reps_[i]] = coords[i];
    return v;
  }

  /// Canonical representative of the class of v.
  Vector canonical(std::span<const Element> v) const { return modded_.reduce(v); }

  /// Full preimage in V of a subspace of the quotient (given in quotient coordinates).
  Subspace preimage(const Subspace& q) const {
    if (q.ambient_dim() != dim()) throw DimensionError("quotient subspace has the wrong ambient dimension");
    std::vector<Vector> gens = modded_.basis_vectors();
    for (std::size_t i = 0; i < q.dim(); ++i) gens.push_back(lift(q.basis().row(i)));
    return Subspace::span(field(), ambient_dim(), gens);
  }

  /// Image in quotient coordinates of a subspace of V.
  Subspace project(const Subspace& s) const {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(project(s.basis().row(i)));
    return Subspace::span(field(), dim(), gens);
  }

 private:
  Subspace modded_;
  std::vector<std::size_t> reps_;
};

/// x -> matrix * sigma^twist(x) between coordinate spaces.
class SemilinearMap {
 public:
  SemilinearMap() = default;
  SemilinearMap(Matrix matrix, long long twist) : matrix_(std::move(matrix)), twist_(twist) {}

  const Matrix& matrix() const noexcept { return matrix_; }
  long long twist() const noexcept { return twist_; }
  std::size_t domain_dim() const noexcept { return matrix_.cols(); }
  std::size_t codomain_dim() const noexcept { return matrix_.rows(); }
  const FiniteField& field() const noexcept { return matrix_.field(); }

  Vector apply(std::span<const Element> x) const { return matrix_.apply(reynolds::twist(field(), x, twist_)); }

  /// f o g has matrix M_f * sigma^{t_f}(M_g) and twist t_f + t_g.
  friend SemilinearMap compose(const SemilinearMap& f, const SemilinearMap& g) {
    if (f.domain_dim() != g.codomain_dim()) throw DimensionError("semilinear composition dimension mismatch");
    return SemilinearMap(f.matrix_ * g.matrix_.twisted(f.twist_), f.twist_ + g.twist_);
  }

  /// Kernel, computed by expanding every coordinate into e prime-field coordinates
  /// (the map is GF(p)-linear), then reading the prime-field kernel back as a
  /// GF(p^e)-subspace. The GF(p)-dimension must be e times the recognized dimension.
  Subspace kernel() const {
    const FiniteField& f = field();
    const unsigned e = f.degree();
    const std::size_t n = domain_dim(), r = codomain_dim();
    const FiniteField fp = f.prime_field();
    Matrix lin(fp, r * e, n * e);
    for (unsigned j = 0; j < e; ++j) {
      std::vector<long long> tj(e, 0);
      tj[j] = 1;
      const Element twisted_basis = f.twist(f.from_coefficients(tj), twist_);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t row = 0; row < r; ++row) {
          const auto c = f.coefficients(f.mul(matrix_(row, i), twisted_basis));
          for (unsigned l = 0; l < e; ++l) lin(row * e + l, i * e + j) = static_cast<Element>(c[l]);
        }
    }
    const Subspace prime_kernel = reynolds::kernel(lin);
    std::vector<Vector> packed;
    for (std::size_t b = 0; b < prime_kernel.dim(); ++b) {
      Vector x(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> c(e);
        for (unsigned l = 0; l < e; ++l) c[l] = prime_kernel.basis()(b, i * e + l);
        x[i] = f.from_coefficients(c);
      }
      packed.push_back(std::move(x));
    }
    Subspace k = Subspace::span(f, n, packed);
    if (prime_kernel.dim() != e * k.dim())
      throw ConsistencyError("semilinear kernel is not closed under scalar multiplication");
    return k;
  }

  /// Span of the columns; equals the image because sigma^twist is bijective.
  Subspace image() const {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < domain_dim(); ++c) cols.push_back(matrix_.column(c));
    return Subspace::span(field(), codomain_dim(), cols);
  }

 private:
  Matrix matrix_;
  long long twist_ = 0;
};

/// x + K(A) -> x^p + K(A) on A/K(A).
struct PowerMap {
  QuotientSpace quotient;
  SemilinearMap map;
};

/// Builds the twist-1 map on A/K(A) and checks that it is well defined on a basis of K(A).
inline PowerMap power_map_on_quotient(const Algebra& a) {
  QuotientSpace q(commutator_space(a));
  const Subspace& k = q.modded();
  for (std::size_t i = 0; i < k.dim(); ++i)
    if (!k.contains(a.p_power(k.basis().row(i), 1)))
      throw ConsistencyError("p-th power of a commutator-space basis vector leaves K(A)");
  std::vector<Vector> cols;
  for (std::size_t r : q.representatives()) cols.push_back(q.project(a.p_power(a.basis_vector(r), 1)));
  Matrix m = Matrix::from_columns(a.field(), q.dim(), cols);
  return {std::move(q), SemilinearMap(std::move(m), 1)};
}

/// T_0(A), ..., T_{n_max}(A).
inline std::vector<Subspace> t_n_chain(const Algebra& a, unsigned n_max) {
  const PowerMap pm = power_map_on_quotient(a);
  std::vector<Subspace> chain{pm.quotient.modded()};
  SemilinearMap iterate = pm.map;
  for (unsigned n = 1; n <= n_max; ++n) {
    chain.push_back(pm.quotient.preimage(iterate.kernel()));
    if (n < n_max) iterate = compose(pm.map, iterate);
  }
  return chain;
}

/// T_n(A) = {x | x^(p^n) in K(A)}; T_0(A) = K(A).
inline Subspace t_n(const Algebra& a, unsigned n) { return t_n_chain(a, n).back(); }

/// A chain of subspaces recorded up to the first n with S_n = S_{n+1}.
struct StableChain {
  std::vector<Subspace> terms;   // S_0 .. S_{max(stab, 1)}
  std::optional<std::size_t> stab;  // first n with S_n = S_{n+1}; empty if the bound was hit first

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : terms) d.push_back(s.dim());
    return d;
  }
};

/// Evaluates term(0), term(1), ... until two consecutive terms coincide, or up to term(bound).
/// Only valid for chains S_{n+1} = F(S_n), which stay constant once they repeat.
inline StableChain stabilize(const std::function<Subspace(unsigned)>& term, unsigned bound) {
  StableChain out;
  out.terms.push_back(term(0));
  for (unsigned n = 1; n <= bound; ++n) {
    Subspace next = term(n);
    if (next == out.terms.back()) {
      out.stab = n - 1;
      if (out.terms.size() < 2) out.terms.push_back(std::move(next));
      break;
    }
    out.terms.push_back(std::move(next));
  }
  return out;
}

/// The T_n chain with automatic stabilization detection. Stabilizes by n = dim A.
inline StableChain t_n_stable_chain(const Algebra& a) {
  const PowerMap pm = power_map_on_quotient(a);
  SemilinearMap iterate = pm.map;
  unsigned computed = 0;
  return stabilize(
      [&](unsigned n) {
        if (n == 0) return pm.quotient.modded();
        while (computed + 1 < n) {
          iterate = compose(pm.map, iterate);
          ++computed;
        }
        return pm.quotient.preimage(iterate.kernel());
      },
      static_cast<unsigned>(a.dim()) + 1);
}

struct CodimSequence {
  std::vector<std::size_t> values;   // dim A - dim T_n(A)
  std::optional<std::size_t> stab;   // first n with T_n = T_{n+1}
};

/// Auto mode (no n_max): values for n = 0 .. max(stab, 1). Explicit n_max: values for n = 0 .. n_max.
inline CodimSequence codim_sequence(const Algebra& a, std::optional<unsigned> n_max = std::nullopt) {
  CodimSequence out;
  if (!n_max) {
    const StableChain c = t_n_stable_chain(a);
    for (const auto& s : c.terms) out.values.push_back(a.dim() - s.dim());
    out.stab = c.stab;
    return out;
  }
  const auto chain = t_n_chain(a, *n_max + 1);
  for (unsigned n = 0; n <= *n_max; ++n) {
    out.values.push_back(a.dim() - chain[n].dim());
    if (!out.stab && chain[n] == chain[n + 1]) out.stab = n;
  }
  return out;
}

/// P_n(Z(A)) = span{z^(p^n) | z in Z(A)}.
inline Subspace p_n_center(const Algebra& a, unsigned n) {
  const Subspace z = center(a);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < z.dim(); ++i) gens.push_back(a.p_power(z.basis().row(i), n));
  return Subspace::span(a.field(), a.dim(), gens);
}

/// T_n(Z(A)) = {z in Z(A) | z^(p^n) = 0}; Z(A) is commutative so no commutator correction applies.
inline Subspace t_n_center(const Algebra& a, unsigned n) {
  const Subspace z = center(a);
  const auto basis = z.basis_vectors();
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(a.p_power(b, n));
  const SemilinearMap m(Matrix::from_columns(a.field(), a.dim(), cols), n);
  const Subspace coeffs = m.kernel();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < coeffs.dim(); ++i) gens.push_back(combine(a.field(), a.dim(), basis, coeffs.basis().row(i)));
  return Subspace::span(a.field(), a.dim(), gens);
}

/// T_n(A)^perp. Checked to be an ideal of Z(A); n = 0 gives Z(A).
inline Subspace reynolds_ideal(const Algebra& a, const SymmetrizingForm& form, unsigned n) {
  const Subspace r = orthogonal(t_n(a, n), form.gram());
  const Subspace z = center(a);
  if (!z.contains(r)) throw ConsistencyError("T_" + std::to_string(n) + "(A)^perp is not contained in Z(A)");
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j)
      if (!r.contains(a.multiply(z.basis().row(i), r.basis().row(j))))
        throw ConsistencyError("T_" + std::to_string(n) + "(A)^perp is not an ideal of Z(A)");
  return r;
}

namespace detail {

inline Vector xi_unchecked(const Algebra& a, const SymmetrizingForm& form, unsigned n, std::span<const Element> z) {
  const FiniteField& f = a.field();
  const std::size_t d = a.dim();
  // x -> sigma^{-n}(<z, x^(p^n)>) is linear in x; record it on the basis.
  Vector rhs(d);
  std::vector<Element> lhs_target(d);
  for (std::size_t i = 0; i < d; ++i) {
    lhs_target[i] = form.pair(z, a.p_power(a.basis_vector(i), n));
    rhs[i] = f.frobenius_inverse(lhs_target[i], n);
  }
  auto x = solve(form.gram(), rhs);
  if (!x) throw ConsistencyError("xi_n: gram system has no solution");
  for (std::size_t i = 0; i < d; ++i)
    if (f.frobenius(form.pair(*x, a.basis_vector(i)), n) != lhs_target[i])
      throw ConsistencyError("xi_n: defining equation fails on basis vector " + std::to_string(i));
  return *x;
}

}  // namespace detail

/// xi_n(z): the element with <xi_n(z), x>^(p^n) = <z, x^(p^n)> for all x. Requires z central.
inline Vector xi_n(const Algebra& a, const SymmetrizingForm& form, unsigned n, std::span<const Element> z) {
  if (!center(a).contains(z)) throw Error("xi_n: argument is not in the center");
  return detail::xi_unchecked(a, form, n, z);
}

/// span{xi_n(z_i)} over a basis z_i of Z(A).
inline Subspace xi_image(const Algebra& a, const SymmetrizingForm& form, unsigned n) {
  const Subspace z = center(a);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < z.dim(); ++i) gens.push_back(detail::xi_unchecked(a, form, n, z.basis().row(i)));
  return Subspace::span(a.field(), a.dim(), gens);
}

/// kappa_n as a twist -n semilinear map on A/K(A) in quotient coordinates.
struct KappaMap {
  QuotientSpace quotient;
  SemilinearMap map;
};

/// Solves <z, kappa_n(x)>^(p^n) = <z^(p^n), x> for all z in Z(A), using that
/// Z(A) x A/K(A) -> k is a perfect pairing.
inline KappaMap kappa_map(const Algebra& a, const SymmetrizingForm& form, unsigned n) {
  const FiniteField& f = a.field();
  QuotientSpace q(commutator_space(a));
  const Subspace z = center(a);
  if (z.dim() != q.dim()) throw ConsistencyError("dim Z(A) != dim A/K(A) for a symmetric algebra");
  const auto& reps = q.representatives();
  const std::size_t m = q.dim();
  Matrix pairing(f, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) pairing(i, j) = form.pair(z.basis().row(i), a.basis_vector(reps[j]));
  const Matrix pairing_inv = inverse(pairing);
  std::vector<Vector> zp;
  for (std::size_t i = 0; i < m; ++i) zp.push_back(a.p_power(z.basis().row(i), n));
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m; ++j) {
    Vector rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = f.frobenius_inverse(form.pair(zp[i], a.basis_vector(reps[j])), n);
    cols.push_back(pairing_inv.apply(rhs));
  }
  Matrix mat = Matrix::from_columns(f, m, cols);
  return {std::move(q), SemilinearMap(std::move(mat), -static_cast<long long>(n))};
}

/// kappa_n of the class of x, as its canonical representative. The defining equation is checked on Z(A)'s basis.
inline Vector kappa_n(const Algebra& a, const SymmetrizingForm& form, unsigned n, std::span<const Element> x) {
  const KappaMap km = kappa_map(a, form, n);
  const Vector y = km.quotient.lift(km.map.apply(km.quotient.project(x)));
  const Subspace z = center(a);
  const FiniteField& f = a.field();
  for (std::size_t i = 0; i < z.dim(); ++i) {
    const Element lhs = f.frobenius(form.pair(z.basis().row(i), y), n);
    const Element rhs = form.pair(a.p_power(z.basis().row(i), n), x);
    if (lhs != rhs) throw ConsistencyError("kappa_n: defining equation fails");
  }
  return y;
}

/// Preimage in A of ker kappa_n.
inline Subspace kappa_kernel(const Algebra& a, const SymmetrizingForm& form, unsigned n) {
  const KappaMap km = kappa_map(a, form, n);
  return km.quotient.preimage(km.map.kernel());
}

/// Preimage in A of im kappa_n.
inline Subspace kappa_image(const Algebra& a, const SymmetrizingForm& form, unsigned n) {
  const KappaMap km = kappa_map(a, form, n);
  return km.quotient.preimage(km.map.image());
}

}  // namespace reynolds

#endif  // REYNOLDS_KULSHAMMER_HPP
