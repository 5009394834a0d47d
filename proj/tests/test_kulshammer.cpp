#include <gtest/gtest.h>

#include "reynolds/kulshammer.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace reynolds;

namespace {

const FiniteField kGF2(2);

const corpus::Entry& c2() { return corpus::get("GF(2)C2"); }  // basis 1, g
Algebra dual_numbers() { return corpus::truncated_polynomial(kGF2, 2); }
Algebra m2() { return corpus::full_matrix(kGF2, 2); }
Algebra gf2_squared() { return direct_product(field_algebra(kGF2), field_algebra(kGF2)); }

Subspace line(const FiniteField& f, const Vector& v) { return Subspace::span(f, v.size(), {v}); }

}  // namespace

TEST(PowerMap, CommutativeQuotientIsTheAlgebra) {
  const PowerMap pm = power_map_on_quotient(dual_numbers());
  EXPECT_EQ(pm.quotient.dim(), 2u);
  EXPECT_EQ(pm.map.twist(), 1);
  // 1 -> 1, x -> 0
  EXPECT_EQ(pm.map.matrix(), Matrix::from_rows(kGF2, 2, {{1, 0}, {0, 0}}));
}

TEST(PowerMap, M2HasOneDimensionalQuotient) {
  const PowerMap pm = power_map_on_quotient(m2());
  ASSERT_EQ(pm.quotient.dim(), 1u);
  EXPECT_EQ(pm.map.matrix(), Matrix::identity(kGF2, 1));
  // The representative is E22 (E11 is a pivot of K); E11 = E22 mod K, and e11^2 = e11.
  EXPECT_EQ(pm.quotient.project(Vector{1, 0, 0, 0}), (Vector{1}));
}

TEST(PowerMap, AdditiveModuloCommutators) {
  gen::Rng rng(gen::seed() + 20);
  for (const auto& e : corpus::all()) {
    const Algebra& a = e.algebra;
    const FiniteField& f = a.field();
    const Subspace k = commutator_space(a);
    for (int t = 0; t < 10; ++t) {
      const Vector x = gen::vector(rng, f, a.dim()), y = gen::vector(rng, f, a.dim());
      const Vector defect = sub(f, a.p_power(add(f, x, y), 1), add(f, a.p_power(x, 1), a.p_power(y, 1)));
      EXPECT_TRUE(k.contains(defect)) << e.name;
    }
  }
}

TEST(SemilinearMap, CompositionMatchesSequentialApplication) {
  gen::Rng rng(gen::seed() + 21);
  for (int t = 0; t < 100; ++t) {
    const FiniteField f = gen::small_field(rng);
    const std::size_t a = gen::uniform(rng, 1, 4), b = gen::uniform(rng, 1, 4), c = gen::uniform(rng, 1, 4);
    const SemilinearMap g(gen::matrix(rng, f, b, a), static_cast<long long>(gen::uniform(rng, 0, 3)) - 1);
    const SemilinearMap h(gen::matrix(rng, f, c, b), static_cast<long long>(gen::uniform(rng, 0, 3)) - 1);
    const Vector x = gen::vector(rng, f, a, 1.0);
    EXPECT_EQ(compose(h, g).apply(x), h.apply(g.apply(x)));
  }
}

// Independent route: ker(x -> M sigma^t(x)) = sigma^{-t}(ker M).
TEST(SemilinearMap, KernelAgreesWithUntwistedKernel) {
  gen::Rng rng(gen::seed() + 22);
  for (int t = 0; t < 200; ++t) {
    const FiniteField f = gen::small_field(rng);
    const long long twist = static_cast<long long>(gen::uniform(rng, 0, 4)) - 2;
    const SemilinearMap m(gen::matrix(rng, f, gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 5)), twist);
    std::vector<Vector> gens;
    for (const auto& v : kernel(m.matrix()).basis_vectors()) gens.push_back(reynolds::twist(f, v, -twist));
    EXPECT_EQ(m.kernel(), Subspace::span(f, m.domain_dim(), gens)) << f.spec();
  }
}

TEST(SemilinearMap, KernelAndImageByEnumeration) {
  const FiniteField f(2, 2, {1, 1, 1});
  gen::Rng rng(gen::seed() + 23);
  for (int t = 0; t < 30; ++t) {
    const SemilinearMap m(gen::matrix(rng, f, 2, 3), 1);
    const Subspace k = m.kernel(), im = m.image();
    for (std::size_t idx = 0; idx < 64; ++idx) {
      const Vector x{static_cast<Element>(idx % 4), static_cast<Element>(idx / 4 % 4), static_cast<Element>(idx / 16)};
      EXPECT_EQ(k.contains(x), is_zero(m.apply(x)));
      EXPECT_TRUE(im.contains(m.apply(x)));
    }
  }
}

TEST(TN, DualNumbers) {
  EXPECT_EQ(t_n(dual_numbers(), 0).dim(), 0u);
  EXPECT_EQ(t_n(dual_numbers(), 1), line(kGF2, {0, 1}));
}

TEST(TN, GF2Squared) {
  for (unsigned n = 0; n <= 3; ++n) EXPECT_EQ(t_n(gf2_squared(), n).dim(), 0u);
}

TEST(TN, M2IsTraceZero) {
  EXPECT_EQ(t_n(m2(), 1), commutator_space(m2()));
  EXPECT_EQ(t_n(m2(), 1).dim(), 3u);
}

TEST(TN, AscendingAndStabilizing) {
  for (const auto& e : corpus::all()) {
    const auto chain = t_n_chain(e.algebra, static_cast<unsigned>(e.algebra.dim()) + 2);
    EXPECT_EQ(chain[0], commutator_space(e.algebra));
    for (std::size_t n = 1; n < chain.size(); ++n) EXPECT_TRUE(chain[n].contains(chain[n - 1])) << e.name;
    const StableChain s = t_n_stable_chain(e.algebra);
    ASSERT_TRUE(s.stab.has_value()) << e.name;
    EXPECT_LE(*s.stab, e.algebra.dim());
    for (std::size_t n = *s.stab; n < chain.size(); ++n) EXPECT_EQ(chain[n], chain[*s.stab]) << e.name;
  }
}

TEST(TN, MatchesBruteForce) {
  for (const auto& e : corpus::all()) {
    if (!oracle::BruteForce::feasible(e.algebra)) continue;
    SCOPED_TRACE(e.name);
    const oracle::BruteForce bf(e.algebra);
    EXPECT_EQ(bf.from_subspace(commutator_space(e.algebra)), bf.commutators());
    EXPECT_EQ(bf.from_subspace(center(e.algebra)), bf.center());
    const auto chain = t_n_chain(e.algebra, 3);
    for (unsigned n = 0; n <= 3; ++n) EXPECT_EQ(bf.from_subspace(chain[n]), bf.t_n(n)) << "n=" << n;
  }
}

TEST(CenterChains, GroupAlgebraOfC2) {
  EXPECT_EQ(p_n_center(c2().algebra, 1), line(kGF2, {1, 0}));
  EXPECT_EQ(t_n_center(c2().algebra, 1), line(kGF2, {1, 1}));
}

TEST(CenterChains, SemisimpleHasNoNilpotents) {
  for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(t_n_center(gf2_squared(), n).dim(), 0u);
}

TEST(CenterChains, MatchBruteForce) {
  for (const auto& e : corpus::all()) {
    if (!oracle::BruteForce::feasible(e.algebra)) continue;
    SCOPED_TRACE(e.name);
    const oracle::BruteForce bf(e.algebra);
    for (unsigned n = 1; n <= 3; ++n) {
      EXPECT_EQ(bf.from_subspace(p_n_center(e.algebra, n)), bf.p_n_center(n));
      EXPECT_EQ(bf.from_subspace(t_n_center(e.algebra, n)), bf.t_n_center(n));
    }
  }
}

TEST(ReynoldsIdeal, ZeroIsTheCenter) {
  for (const auto& e : corpus::all()) {
    if (!e.symmetric()) continue;
    EXPECT_EQ(reynolds_ideal(e.algebra, e.form(), 0), center(e.algebra)) << e.name;
  }
}

TEST(ReynoldsIdeal, GroupAlgebraOfC2) { EXPECT_EQ(reynolds_ideal(c2().algebra, c2().form(), 1), line(kGF2, {1, 1})); }

TEST(ReynoldsIdeal, M2IsScalars) {
  const auto& e = corpus::get("M2(GF(2))");
  EXPECT_EQ(reynolds_ideal(e.algebra, e.form(), 1), line(kGF2, {1, 0, 0, 1}));
}

TEST(ReynoldsIdeal, DescendingInsideTheCenter) {
  for (const auto& e : corpus::all()) {
    if (!e.symmetric()) continue;
    const Subspace z = center(e.algebra);
    Subspace prev = reynolds_ideal(e.algebra, e.form(), 0);
    for (unsigned n = 1; n <= 3; ++n) {
      const Subspace r = reynolds_ideal(e.algebra, e.form(), n);
      EXPECT_TRUE(prev.contains(r)) << e.name;
      EXPECT_TRUE(z.contains(r)) << e.name;
      prev = r;
    }
  }
}

TEST(Xi, ZeroIsIdentity) {
  for (const auto& e : corpus::all()) {
    if (!e.symmetric()) continue;
    for (const auto& z : center(e.algebra).basis_vectors()) EXPECT_EQ(xi_n(e.algebra, e.form(), 0, z), z) << e.name;
  }
}

TEST(Xi, GroupAlgebraOfC2) {
  const Algebra& a = c2().algebra;
  const Subspace s = Subspace::span(kGF2, 2, {xi_n(a, c2().form(), 1, Vector{1, 0}), xi_n(a, c2().form(), 1, Vector{0, 1})});
  EXPECT_EQ(s, line(kGF2, {1, 1}));
  EXPECT_EQ(s, reynolds_ideal(a, c2().form(), 1));
}

TEST(Xi, DefiningEquationOnRandomCentralElements) {
  gen::Rng rng(gen::seed() + 24);
  for (const auto& e : corpus::all()) {
    if (!e.symmetric()) continue;
    const Algebra& a = e.algebra;
    const FiniteField& f = a.field();
    const SymmetrizingForm form = e.form();
    const Subspace z = center(a);
    for (int t = 0; t < 5; ++t) {
      const Vector c = combine(f, a.dim(), z.basis_vectors(), gen::vector(rng, f, z.dim(), 1.0));
      for (unsigned n = 1; n <= 3; ++n) {
        const Vector xi = xi_n(a, form, n, c);
        for (std::size_t i = 0; i < a.dim(); ++i) {
          const Vector x = a.basis_vector(i);
          EXPECT_EQ(f.frobenius(form.pair(xi, x), n), form.pair(c, a.p_power(x, n))) << e.name;
        }
      }
    }
  }
}

TEST(Xi, RejectsNonCentralArgument) {
  const auto& e = corpus::get("M2(GF(2))");
  EXPECT_THROW(xi_n(e.algebra, e.form(), 1, Vector{0, 1, 0, 0}), Error);
}

TEST(Kappa, GroupAlgebraOfC2) {
  EXPECT_EQ(kappa_kernel(c2().algebra, c2().form(), 1), line(kGF2, {0, 1}));
  EXPECT_EQ(kappa_image(c2().algebra, c2().form(), 1), line(kGF2, {1, 1}));
}

TEST(Kappa, DefiningEquationOnRandomElements) {
  gen::Rng rng(gen::seed() + 25);
  for (const auto& e : corpus::all()) {
    if (!e.symmetric()) continue;
    const Algebra& a = e.algebra;
    const FiniteField& f = a.field();
    const SymmetrizingForm form = e.form();
    const Subspace z = center(a);
    for (int t = 0; t < 5; ++t) {
      const Vector x = gen::vector(rng, f, a.dim());
      for (unsigned n = 1; n <= 3; ++n) {
        const Vector y = kappa_n(a, form, n, x);
        for (const auto& zb : z.basis_vectors())
          EXPECT_EQ(f.frobenius(form.pair(zb, y), n), form.pair(a.p_power(zb, n), x)) << e.name;
      }
    }
  }
}

TEST(Kappa, WellDefinedModuloCommutators) {
  gen::Rng rng(gen::seed() + 26);
  for (const auto& e : corpus::all()) {
    if (!e.symmetric()) continue;
    const Algebra& a = e.algebra;
    const Subspace k = commutator_space(a);
    for (int t = 0; t < 5 && k.dim() > 0; ++t) {
      const Vector x = gen::vector(rng, a.field(), a.dim());
      const Vector w = combine(a.field(), a.dim(), k.basis_vectors(), gen::vector(rng, a.field(), k.dim(), 1.0));
      EXPECT_EQ(kappa_n(a, e.form(), 1, x), kappa_n(a, e.form(), 1, add(a.field(), x, w))) << e.name;
    }
  }
}

TEST(KulshammerMaps, MatchBruteForce) {
  for (const auto& e : corpus::all()) {
    if (!e.symmetric() || !oracle::BruteForce::feasible(e.algebra)) continue;
    SCOPED_TRACE(e.name);
    const oracle::BruteForce bf(e.algebra, e.pi);
    const SymmetrizingForm form = e.form();
    for (unsigned n = 1; n <= 3; ++n) {
      const auto tn_perp = bf.orthogonal(bf.t_n(n));
      EXPECT_EQ(bf.from_subspace(reynolds_ideal(e.algebra, form, n)), tn_perp);
      EXPECT_EQ(bf.from_subspace(xi_image(e.algebra, form, n)), bf.xi_image(n));
      EXPECT_EQ(bf.xi_image(n), tn_perp);
      EXPECT_EQ(bf.from_subspace(kappa_kernel(e.algebra, form, n)), bf.kappa_kernel(n));
      EXPECT_EQ(bf.kappa_kernel(n), bf.orthogonal(bf.p_n_center(n)));
      EXPECT_EQ(bf.from_subspace(kappa_image(e.algebra, form, n)), bf.kappa_image(n));
      EXPECT_EQ(bf.kappa_image(n), bf.orthogonal(bf.t_n_center(n)));
    }
  }
}

TEST(CodimSequence, Examples) {
  const auto dn = codim_sequence(dual_numbers());
  EXPECT_EQ(dn.values, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(dn.stab, 1u);
  const auto sq = codim_sequence(gf2_squared());
  EXPECT_EQ(sq.values, (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(sq.stab, 0u);
  const auto m = codim_sequence(m2());
  EXPECT_EQ(m.values, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(m.stab, 0u);
  const auto x4 = codim_sequence(corpus::get("GF(2)[x]/(x^4)").algebra);
  EXPECT_EQ(x4.values, (std::vector<std::size_t>{4, 2, 1}));
  EXPECT_EQ(x4.stab, 2u);
}

TEST(CodimSequence, ExplicitBound) {
  const auto s = codim_sequence(dual_numbers(), 4);
  EXPECT_EQ(s.values, (std::vector<std::size_t>{2, 1, 1, 1, 1}));
  EXPECT_EQ(s.stab, 1u);
  const auto short_run = codim_sequence(corpus::get("GF(2)[x]/(x^4)").algebra, 1);
  EXPECT_EQ(short_run.values, (std::vector<std::size_t>{4, 2}));
  EXPECT_FALSE(short_run.stab.has_value());
}

TEST(CodimSequence, MoritaInvariant) {
  for (const auto& e : corpus::all()) {
    const auto a = codim_sequence(e.algebra, 4);
    const auto b = codim_sequence(matrix_algebra(e.algebra, 2), 4);
    EXPECT_EQ(a.values, b.values) << e.name;
    EXPECT_EQ(a.stab, b.stab) << e.name;
  }
}
