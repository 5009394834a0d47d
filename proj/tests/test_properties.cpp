// Seeded property tests; set REYNOLDS_SEED to reproduce a run.
#include <gtest/gtest.h>

#include "reynolds/reynolds.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace reynolds;

namespace {

constexpr int kCases = 200;

Matrix symmetric_invertible(gen::Rng& rng, const FiniteField& f, std::size_t d) {
  while (true) {
    const Matrix m = gen::matrix(rng, f, d, d);
    Matrix s(f, d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) s(r, c) = r == c ? gen::element(rng, f) : f.add(m(r, c), m(c, r));
    if (is_invertible(s)) return s;
  }
}

}  // namespace

TEST(Properties, SubspaceDimensionLaw) {
  gen::Rng rng(gen::seed());
  for (int t = 0; t < kCases; ++t) {
    const FiniteField f = gen::small_field(rng);
    const std::size_t d = gen::uniform(rng, 1, 7);
    const Subspace u = gen::subspace(rng, f, d), v = gen::subspace(rng, f, d);
    const Subspace sum = u + v, meet = intersect(u, v);
    EXPECT_EQ(sum.dim() + meet.dim(), u.dim() + v.dim()) << "case " << t;
    EXPECT_TRUE(sum.contains(u) && sum.contains(v));
    EXPECT_TRUE(u.contains(meet) && v.contains(meet));
  }
}

TEST(Properties, DoubleOrthogonal) {
  gen::Rng rng(gen::seed() + 1);
  for (int t = 0; t < kCases; ++t) {
    const FiniteField f = gen::small_field(rng);
    const std::size_t d = gen::uniform(rng, 1, 6);
    const Matrix g = symmetric_invertible(rng, f, d);
    const Subspace v = gen::subspace(rng, f, d);
    const Subspace perp = orthogonal(v, g);
    EXPECT_EQ(perp.dim() + v.dim(), d);
    EXPECT_EQ(orthogonal(perp, g), v) << "case " << t;
  }
}

TEST(Properties, DoubleAnnihilator) {
  gen::Rng rng(gen::seed() + 2);
  for (int t = 0; t < kCases; ++t) {
    const FiniteField f = gen::small_field(rng);
    const std::size_t d = gen::uniform(rng, 1, 7);
    const Subspace v = gen::subspace(rng, f, d);
    const Subspace ann = annihilator(v);
    EXPECT_EQ(ann.dim() + v.dim(), d);
    EXPECT_EQ(annihilator(ann), v) << "case " << t;
  }
}

TEST(Properties, FrobeniusAutomorphism) {
  gen::Rng rng(gen::seed() + 3);
  for (int t = 0; t < kCases; ++t) {
    const FiniteField f = gen::small_field(rng);
    const Element a = gen::element(rng, f), b = gen::element(rng, f);
    const unsigned n = static_cast<unsigned>(gen::uniform(rng, 0, 4));
    EXPECT_EQ(f.frobenius(f.add(a, b), n), f.add(f.frobenius(a, n), f.frobenius(b, n)));
    EXPECT_EQ(f.frobenius(f.mul(a, b), n), f.mul(f.frobenius(a, n), f.frobenius(b, n)));
    EXPECT_EQ(f.frobenius_inverse(f.frobenius(a, n), n), a);
    EXPECT_EQ(f.frobenius(a, f.degree()), a);
  }
}

TEST(Properties, FingerprintRoundTrip) {
  gen::Rng rng(gen::seed() + 4);
  for (int t = 0; t < kCases; ++t) {
    const Algebra base = gen::algebra(rng, 5);
    Fingerprint fp;
    if (t % 2 == 0) {
      fp = compute_fingerprint(base);
    } else {
      const TrivialExtension tx(base);
      fp = compute_fingerprint(tx.ext(), tx.form());
    }
    EXPECT_TRUE(invariant_violations(fp).empty()) << "case " << t;
    const std::string text = serialize(fp);
    EXPECT_EQ(deserialize(text), fp) << "case " << t;
    EXPECT_EQ(serialize(deserialize(text)), text);
  }
}

TEST(Properties, FingerprintBasisPermutationInvariance) {
  gen::Rng rng(gen::seed() + 5);
  for (int t = 0; t < kCases; ++t) {
    const Algebra a = gen::algebra(rng, 8);
    const auto perm = gen::permutation(rng, a.dim());
    EXPECT_EQ(compute_fingerprint(permute_basis(a, perm)), compute_fingerprint(a)) << "case " << t;
  }
}

TEST(Properties, SymmetricFingerprintBasisPermutationInvariance) {
  gen::Rng rng(gen::seed() + 6);
  for (int t = 0; t < kCases; ++t) {
    const TrivialExtension tx(gen::algebra(rng, 4));
    const auto perm = gen::permutation(rng, tx.ext().dim());
    const Algebra b = permute_basis(tx.ext(), perm);
    const LinearFunctional pi{permute_vector(tx.pi().coords, perm)};
    EXPECT_EQ(compute_fingerprint(b, pi), compute_fingerprint(tx.ext(), tx.form())) << "case " << t;
  }
}

TEST(Properties, VerifyAllOnRandomAlgebras) {
  gen::Rng rng(gen::seed() + 7);
  for (int t = 0; t < kCases; ++t) {
    const Algebra a = gen::algebra(rng, 6);
    const Report r = verify_all(a, std::nullopt, 3);
    EXPECT_TRUE(r.passed()) << "case " << t << "\n" << algebra_to_json(a, std::nullopt).dump() << "\n" << r.to_string();
  }
}

TEST(Properties, SymmetricIdentitiesOnRandomTrivialExtensions) {
  gen::Rng rng(gen::seed() + 8);
  for (int t = 0; t < kCases; ++t) {
    const TrivialExtension tx(gen::algebra(rng, 3));
    const Report r = verify_all(tx.ext(), tx.form(), 2);
    EXPECT_TRUE(r.passed()) << "case " << t << "\n" << r.to_string();
  }
}

TEST(Properties, TnAgreesWithBruteForceOnRandomAlgebras) {
  gen::Rng rng(gen::seed() + 9);
  int checked = 0;
  for (int t = 0; checked < kCases && t < 10 * kCases; ++t) {
    const Algebra a = gen::algebra(rng, 6);
    if (!oracle::BruteForce::feasible(a)) continue;
    ++checked;
    const oracle::BruteForce bf(a);
    const auto chain = t_n_chain(a, 2);
    EXPECT_EQ(bf.from_subspace(center(a)), bf.center()) << "case " << t;
    for (unsigned n = 0; n <= 2; ++n) EXPECT_EQ(bf.from_subspace(chain[n]), bf.t_n(n)) << "case " << t << " n=" << n;
  }
  EXPECT_EQ(checked, kCases);
}
