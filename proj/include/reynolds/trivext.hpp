#ifndef REYNOLDS_TRIVEXT_HPP
#define REYNOLDS_TRIVEXT_HPP

// The trivial extension T(L) = L x L* with product
//   (a, f) * (b, g) = (ab, a g + f b),   (a f)(x) = f(x a),   (f a)(x) = f(a x),
// and its symmetrizing functional pi(a, f) = f(1).
//
// Basis order of T(L): (b_1, 0), ..., (b_d, 0), (0, b_1*), ..., (0, b_d*).
// The verifiers below compare subspaces computed intrinsically on T(L) with the
// same subspaces assembled from data of L; every comparison is an exact
// equality of canonical bases.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reynolds/algebra.hpp"
#include "reynolds/error.hpp"
#include "reynolds/kulshammer.hpp"
#include "reynolds/linalg.hpp"

namespace reynolds {

/// a . phi in dual coordinates: (a phi)(b_l) = phi(b_l a).
inline Vector left_dual_action(const Algebra& a, std::span<const Element> x, std::span<const Element> phi) {
  const FiniteField& f = a.field();
  Vector out(a.dim(), 0);
  for (std::size_t l = 0; l < a.dim(); ++l) out[l] = dot(f, phi, a.multiply(a.basis_vector(l), x));
  return out;
}

/// phi . a in dual coordinates: (phi a)(b_l) = phi(a b_l).
inline Vector right_dual_action(const Algebra& a, std::span<const Element> phi, std::span<const Element> x) {
  const FiniteField& f = a.field();
  Vector out(a.dim(), 0);
  for (std::size_t l = 0; l < a.dim(); ++l) out[l] = dot(f, phi, a.multiply(x, a.basis_vector(l)));
  return out;
}

class TrivialExtension {
 public:
  explicit TrivialExtension(const Algebra& base)
      : base_(base), ext_(build(base)), form_(make_form(base_, ext_)) {}

  const Algebra& base() const noexcept { return base_; }
  const Algebra& ext() const noexcept { return ext_; }
  const SymmetrizingForm& form() const noexcept { return form_; }
  std::size_t base_dim() const noexcept { return base_.dim(); }

  /// pi(a, phi) = phi(1) as a functional on T(L).
  LinearFunctional pi() const { return form_.pi(); }

  /// (a, phi) as a vector of T(L).
  Vector element(std::span<const Element> a, std::span<const Element> phi) const {
    Vector v(a.begin(), a.end());
    v.insert(v.end(), phi.begin(), phi.end());
    return v;
  }

  /// V x 0
  Subspace embed_base(const Subspace& v) const {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < v.dim(); ++i) gens.push_back(element(v.basis().row(i), Vector(base_dim(), 0)));
    return Subspace::span(base_.field(), 2 * base_dim(), gens);
  }

  /// 0 x W, W given in dual coordinates.
  Subspace embed_dual(const Subspace& w) const {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < w.dim(); ++i) gens.push_back(element(Vector(base_dim(), 0), w.basis().row(i)));
    return Subspace::span(base_.field(), 2 * base_dim(), gens);
  }

  /// V x W
  Subspace embed(const Subspace& v, const Subspace& w) const { return embed_base(v) + embed_dual(w); }

 private:
  Algebra base_;
  Algebra ext_;
  SymmetrizingForm form_;

  static Algebra build(const Algebra& a) {
    const std::size_t d = a.dim();
    std::vector<StructureConstant> sc;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& [k, v] : a.basis_product(i, j)) {
          // c = c[i][j][k]; b_j . b_k* = sum_l c[l][j][k] b_l* and b_k* . b_i = sum_l c[i][l][k] b_l*.
          sc.push_back({i, j, k, v});
          sc.push_back({j, d + k, d + i, v});
          sc.push_back({d + k, i, d + j, v});
        }
    Vector unit(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i) unit[i] = a.unit()[i];
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back(a.label(i));
    for (std::size_t i = 0; i < d; ++i) labels.push_back(a.label(i) + "*");
    Algebra ext(a.field(), 2 * d, sc, unit, labels);
    require_valid(ext);
    return ext;
  }

  static SymmetrizingForm make_form(const Algebra& base, const Algebra& ext) {
    const std::size_t d = base.dim();
    Vector pi(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i) pi[d + i] = base.unit()[i];
    SymmetrizingForm form = form_from_functional(ext, LinearFunctional{pi});
    const Matrix& g = form.gram();
    for (std::size_t r = 0; r < 2 * d; ++r)
      for (std::size_t c = 0; c < 2 * d; ++c) {
        const Element expected = (r + d == c || c + d == r) ? 1 : 0;
        if (g(r, c) != expected) throw ConsistencyError("gram of T(L) is not [[0, I], [I, 0]]");
      }
    return form;
  }
};

inline TrivialExtension trivial_extension(const Algebra& a) { return TrivialExtension(a); }

/// [L, L*] = span{b_i . b_j* - b_j* . b_i} in dual coordinates.
inline Subspace dual_commutator(const Algebra& a) {
  const std::size_t d = a.dim();
  const FiniteField& f = a.field();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      // (b_i b_j* - b_j* b_i)(b_l) = c[l][i][j] - c[i][l][j]
      Vector v(d, 0);
      for (std::size_t l = 0; l < d; ++l) v[l] = f.sub(a.coefficient(l, i, j), a.coefficient(i, l, j));
      if (!is_zero(v)) gens.push_back(std::move(v));
    }
  return Subspace::span(f, d, gens);
}

/// One identity checked on one input.
struct Check {
  std::string identity;
  std::optional<unsigned> n;
  bool passed = false;
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }

  void add(std::string identity, std::optional<unsigned> n, const Subspace& lhs, const Subspace& rhs) {
    checks.push_back({std::move(identity), n, lhs == rhs, lhs.dim(), rhs.dim()});
  }

  void add(std::string identity, bool passed) { checks.push_back({std::move(identity), std::nullopt, passed, 0, 0}); }

  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  std::string to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
      os << (c.passed ? "PASS" : "FAIL") << "  " << c.identity;
      if (c.n) os << "  [n=" << *c.n << "]";
      if (c.lhs_dim || c.rhs_dim) os << "  dims " << c.lhs_dim << " / " << c.rhs_dim;
      os << "\n";
    }
    return os.str();
  }
};

/// pi(a, phi) = phi(1) is a symmetrizing functional with gram [[0, I], [I, 0]], and (0 x L*)^2 = 0.
inline Report verify_symmetric(const TrivialExtension& t) {
  Report r;
  const std::size_t d = t.base_dim();
  bool symmetric = true;
  try {
    const SymmetrizingForm form = form_from_functional(t.ext(), t.pi());
    Matrix block(t.ext().field(), 2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) block(i, d + i) = block(d + i, i) = 1;
    symmetric = form.gram() == block;
  } catch (const FormError&) {
    symmetric = false;
  }
  r.add("T(L) is symmetric via pi(a,phi) = phi(1), gram [[0,I],[I,0]]", symmetric);
  bool square_zero = true;
  for (std::size_t i = d; i < 2 * d; ++i)
    for (std::size_t j = d; j < 2 * d; ++j) square_zero = square_zero && t.ext().basis_product(i, j).empty();
  r.add("(0 x L*)^2 = 0", square_zero);
  return r;
}

/// Z(T(L)) = Z(L) x Ann(K(L)).
inline Report verify_center(const TrivialExtension& t) {
  Report r;
  const Subspace lhs = center(t.ext());
  const Subspace rhs = t.embed(center(t.base()), annihilator(commutator_space(t.base())));
  r.add("Z(T(L)) = Z(L) x Ann(K(L))", std::nullopt, lhs, rhs);
  return r;
}

/// Lemma on commutators: K(T(L)) = K(L) x [L, L*].
inline Report verify_commutator(const TrivialExtension& t) {
  Report r;
  r.add("K(T(L)) = K(L) x [L,L*]", std::nullopt, commutator_space(t.ext()),
        t.embed(commutator_space(t.base()), dual_commutator(t.base())));
  return r;
}

/// T_n(T(L)) = T_n(L) x L* for n >= 1; at n = 0, T_0(T(L)) = K(T(L)) = K(L) x [L, L*].
inline Report verify_tn_structure(const TrivialExtension& t, unsigned n_max) {
  Report r;
  const auto ext_chain = t_n_chain(t.ext(), n_max);
  const auto base_chain = t_n_chain(t.base(), n_max);
  const Subspace full_dual = Subspace::full(t.base().field(), t.base_dim());
  r.add("T_0(T(L)) = K(T(L))", 0u, ext_chain[0], commutator_space(t.ext()));
  r.add("T_0(T(L)) = K(L) x [L,L*]", 0u, ext_chain[0], t.embed(base_chain[0], dual_commutator(t.base())));
  for (unsigned n = 1; n <= n_max; ++n) r.add("T_n(T(L)) = T_n(L) x L*", n, ext_chain[n], t.embed(base_chain[n], full_dual));
  return r;
}

/// The four families of the Reynolds-ideal theorem for T(L). Quotient statements are
/// compared through their preimages in T(L).
inline Report verify_theorem(const TrivialExtension& t, unsigned n_max) {
  Report r;
  const Algebra& base = t.base();
  const Algebra& ext = t.ext();
  const Matrix& gram = t.form().gram();
  const auto ext_chain = t_n_chain(ext, n_max);
  const auto base_chain = t_n_chain(base, n_max);
  const Subspace k_ext = ext_chain[0];
  const Subspace z_ext = center(ext);
  const Subspace full_base = Subspace::full(base.field(), base.dim());

  const Subspace t0_perp = orthogonal(ext_chain[0], gram);
  r.add("T_0(T(L))^perp = Z(T(L))", 0u, t0_perp, z_ext);
  r.add("T_0(T(L))^perp = Z(L) x Ann(K(L))", 0u, t0_perp,
        t.embed(center(base), annihilator(base_chain[0])));

  for (unsigned n = 1; n <= n_max; ++n) {
    r.add("T_n(T(L))^perp = 0 x Ann(T_n(L))", n, orthogonal(ext_chain[n], gram),
          t.embed_dual(annihilator(base_chain[n])));

    const Subspace tz_perp = orthogonal(t_n_center(ext, n), gram);
    r.add("T_n(Z(T(L)))^perp = K(T(L)) + 0 x Ann(T_n(Z(L)))", n, tz_perp,
          k_ext + t.embed_dual(annihilator(t_n_center(base, n))));

    const Subspace pz_perp = orthogonal(p_n_center(ext, n), gram);
    r.add("P_n(Z(T(L)))^perp = K(T(L)) + L x Ann(P_n(Z(L)))", n, pz_perp,
          k_ext + t.embed(full_base, annihilator(p_n_center(base, n))));
  }
  return r;
}

/// The bimodule isomorphism L -> L*, b -> <-, b>, as a matrix into dual coordinates.
/// Throws ConsistencyError if it is not a bimodule map on basis pairs.
inline Matrix lambda_iso(const Algebra& a, const SymmetrizingForm& form) {
  const Matrix& lambda = form.gram();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector bi = a.basis_vector(i), bj = a.basis_vector(j);
      if (lambda.apply(a.multiply(bi, bj)) != left_dual_action(a, bi, lambda.apply(bj)))
        throw ConsistencyError("lambda(ab) != a . lambda(b) on a basis pair");
      if (lambda.apply(a.multiply(bj, bi)) != right_dual_action(a, lambda.apply(bj), bi))
        throw ConsistencyError("lambda(ba) != lambda(b) . a on a basis pair");
    }
  return lambda;
}

/// For symmetric L: lambda carries the Reynolds data of L onto the annihilator data of T(L).
inline Report verify_remark_correspondence(const Algebra& a, const SymmetrizingForm& form, unsigned n_max) {
  Report r;
  const Matrix lambda = lambda_iso(a, form);
  const auto chain = t_n_chain(a, n_max);
  const Subspace k = chain[0];
  r.add("lambda(K(L)) = [L,L*]", std::nullopt, image(lambda, k), dual_commutator(a));
  r.add("lambda(Z(L)) = Ann(K(L))", 0u, image(lambda, center(a)), annihilator(k));
  for (unsigned n = 0; n <= n_max; ++n)
    r.add("lambda(T_n(L)^perp) = Ann(T_n(L))", n, image(lambda, reynolds_ideal(a, form, n)),
          annihilator(chain[n]));
  for (unsigned n = 1; n <= n_max; ++n) {
    const Subspace tz = t_n_center(a, n);
    r.add("lambda(T_n(Z(L))^perp) = Ann(T_n(Z(L)))", n, image(lambda, orthogonal(tz, form.gram())), annihilator(tz));
    const Subspace pz = p_n_center(a, n);
    r.add("lambda(P_n(Z(L))^perp) = Ann(P_n(Z(L)))", n, image(lambda, orthogonal(pz, form.gram())), annihilator(pz));
  }
  return r;
}

/// Lemma statements that need a symmetrizing form on L.
inline Report verify_symmetric_lemma(const Algebra& a, const SymmetrizingForm& form) {
  Report r;
  const Subspace k = commutator_space(a);
  // <-, ab - ba> for all basis pairs
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      gens.push_back(form.gram().apply(a.commutator(a.basis_vector(i), a.basis_vector(j))));
  r.add("[L,L*] = span{<-, ab-ba>}", std::nullopt, dual_commutator(a), Subspace::span(a.field(), a.dim(), gens));
  r.add("[L,L*] = Ann(Z(L))", std::nullopt, dual_commutator(a), annihilator(center(a)));
  r.add("Z(L) = K(L)^perp", std::nullopt, center(a), orthogonal(k, form.gram()));
  return r;
}

/// xi_n(Z) = T_n^perp, ker kappa_n = P_n(Z)^perp, im kappa_n = T_n(Z)^perp (preimages in L).
inline Report verify_kulshammer_maps(const Algebra& a, const SymmetrizingForm& form, unsigned n_max) {
  Report r;
  for (unsigned n = 1; n <= n_max; ++n) {
    r.add("xi_n(Z(L)) = T_n(L)^perp", n, xi_image(a, form, n), reynolds_ideal(a, form, n));
    r.add("ker kappa_n = P_n(Z(L))^perp", n, kappa_kernel(a, form, n), orthogonal(p_n_center(a, n), form.gram()));
    r.add("im kappa_n = T_n(Z(L))^perp", n, kappa_image(a, form, n), orthogonal(t_n_center(a, n), form.gram()));
  }
  return r;
}

/// Everything applicable to L: the trivial-extension identities, plus the symmetric-only ones when a form is given.
inline Report verify_all(const Algebra& a, const std::optional<SymmetrizingForm>& form, unsigned n_max) {
  const TrivialExtension t(a);
  Report r;
  r.append(verify_symmetric(t));
  r.append(verify_center(t));
  r.append(verify_commutator(t));
  r.append(verify_tn_structure(t, n_max));
  r.append(verify_theorem(t, n_max));
  if (form) {
    r.append(verify_symmetric_lemma(a, *form));
    r.append(verify_remark_correspondence(a, *form, n_max));
    r.append(verify_kulshammer_maps(a, *form, n_max));
  }
  return r;
}

}  // namespace reynolds

#endif  // REYNOLDS_TRIVEXT_HPP
