#include <gtest/gtest.h>

#include "dequiv/builders/cohomology.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

namespace {

using namespace dequiv;
using namespace dequiv::builders;
using core::CycScalar;
using exact::cyc_root;

TEST(Groups, GroupAlgebras) {
  const auto z2 = group_algebra(FiniteGroup::cyclic(2));
  EXPECT_EQ(z2.dim(), 2);
  const auto d4g = FiniteGroup::dihedral4();
  EXPECT_FALSE(d4g.is_abelian());
  const auto d4 = group_algebra(d4g);
  EXPECT_EQ(d4.dim(), 8);
  EXPECT_TRUE(core::check_hopf(d4).ok());
  for (int i = 0; i < 8; ++i) EXPECT_TRUE(d4.coalgebra.is_grouplike(i));
  EXPECT_NE(d4.algebra.product(1, 4), d4.algebra.product(4, 1));
  EXPECT_EQ(group_algebra(FiniteGroup::cyclic(9), 9).conductor(), 9u);
  EXPECT_EQ(center(d4g), (std::vector<int>{0, 2}));
}

TEST(Groups, FromTableRejectsNonGroups) {
  EXPECT_THROW(FiniteGroup::from_table(2, {0, 1, 1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(FiniteGroup::from_table(2, {0, 1, 1, 0}));
}

TEST(Cosets, TrivialSubgroup) {
  const auto g = FiniteGroup::cyclic(5);
  const auto dec = coset_decomposition(g, {});
  EXPECT_EQ(dec.count(), 5);
  for (int p = 0; p < 5; ++p)
    for (int q = 0; q < 5; ++q) EXPECT_EQ(dec.theta_at(p, q), g.identity);
}

TEST(Cosets, Z4OverZ2) {
  const auto g = FiniteGroup::cyclic(4);
  const auto dec = coset_decomposition(g, {2});
  EXPECT_EQ(dec.reps, (std::vector<int>{0, 1}));
  EXPECT_EQ(dec.theta_at(1, 1), 2);
  EXPECT_EQ(dec.dot_at(1, 1), 0);
}

TEST(Cosets, Z9OverZ3RemainderArithmetic) {
  const auto g = FiniteGroup::cyclic(9);
  const auto dec = coset_decomposition(g, {3});
  EXPECT_EQ(dec.reps, (std::vector<int>{0, 1, 2}));
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(dec.theta_at(j, k), 3 * ((j + k) / 3));
      EXPECT_EQ(dec.dot_at(j, k), (j + k) % 3);
      // gamma = g p factorization is unique.
      EXPECT_EQ(g.mul(dec.reps[j], dec.reps[k]), g.mul(dec.theta_at(j, k), dec.reps[dec.dot_at(j, k)]));
    }
}

TEST(Cosets, NonCentralSubgroupRejected) {
  EXPECT_THROW(coset_decomposition(FiniteGroup::dihedral4(), {4}), std::invalid_argument);
}

TEST(Bicharacter, Examples) {
  const auto g = FiniteGroup::cyclic(4);
  const auto dec = coset_decomposition(g, {2});
  const BicharacterTable ones(8, CycScalar(1));
  EXPECT_TRUE(braided::check_pairing(bicharacter_pair(g, dec.G, ones, 1)).ok());
  auto table = bicharacter_from_generators(g, dec.G, {2}, 2, {{1}});
  EXPECT_EQ(table[1 * 2 + 1], CycScalar(-1));
  EXPECT_TRUE(braided::check_pairing(bicharacter_pair(g, dec.G, table, 2)).ok());
  table[2 * 2 + 1] = -1;
  try {
    bicharacter_pair(g, dec.G, table, 2);
    FAIL() << "expected rejection";
  } catch (const core::AxiomFailure& e) {
    EXPECT_EQ(e.witness().axiom.rfind("bicharacter", 0), 0u) << e.witness().axiom;
  }
}

TEST(Bicharacter, RestrictionViolationNamed) {
  // G = Gamma = Z2 with r(g, g) = -1: a bicharacter, but not trivial on G x G.
  const auto g = FiniteGroup::cyclic(2);
  const auto dec = coset_decomposition(g, {1});
  const auto table = bicharacter_from_generators(g, dec.G, {1}, 2, {{1}});
  try {
    bicharacter_pair(g, dec.G, table, 2);
    FAIL() << "expected rejection";
  } catch (const core::AxiomFailure& e) {
    EXPECT_EQ(e.witness().axiom, "bicharacter-restriction");
  }
}

TEST(ClosedForm, TrivialPairingIsHopf) {
  const auto g = FiniteGroup::cyclic(6);
  const auto dec = coset_decomposition(g, {3});
  const auto q = baby_example_closed_form(dec, BicharacterTable(12, CycScalar(1)), 1);
  EXPECT_TRUE(q.has_trivial_associator());
  EXPECT_EQ(q.dim(), 3);
}

TEST(ClosedForm, Z4SignCocycle) {
  const auto f = fixtures::z4_fixture();
  const auto q = baby_example_closed_form(f.dec, f.table, f.conductor);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) EXPECT_EQ(q.omega.at(i, j, k), (i & j & k) ? CycScalar(-1) : CycScalar(1));
  EXPECT_TRUE(core::check_quasi_antipode(q).ok());
}

TEST(ClosedForm, Z9TableOn27Triples) {
  const auto f = fixtures::z9_fixture();
  const auto q = baby_example_closed_form(f.dec, f.table, f.conductor);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) EXPECT_EQ(q.omega.at(i, j, k), cyc_root(9, 3 * i * ((j + k) / 3)));
  EXPECT_TRUE(core::check_coquasi(q).ok());
  EXPECT_TRUE(core::check_quasi_antipode(q).ok());
}

TEST(QuantumLinearSpace, TaftDimensionsAndRelations) {
  for (int n : {2, 3}) {
    const auto h = fixtures::taft(n);
    const int N = n * n;
    EXPECT_EQ(h.H->dim(), N * N);
    EXPECT_EQ(h.nilpotency, std::vector<int>{N});
    const auto& A = h.H->algebra;
    const int x = h.index(0, {1}), g = h.index(1, {0});
    // g x = chi(g) x g and x^N = 0.
    EXPECT_EQ(A.product(g, x), core::scaled(A.product(x, g), cyc_root(N, 1)));
    core::SparseVector p = core::basis_vector(x);
    for (int k = 1; k < N; ++k) p = A.multiply(p, core::basis_vector(x));
    EXPECT_TRUE(p.empty());
  }
}

TEST(QuantumLinearSpace, QuantumPlaneOverZ3xZ3) {
  QuantumLinearSpaceData data{{3, 3}, 3, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
  const auto h = quantum_linear_space(data);
  EXPECT_EQ(h.H->dim(), 81);
  const auto& A = h.H->algebra;
  const int x1 = h.index(0, {1, 0}), x2 = h.index(0, {0, 1});
  // x2 x1 = chi_1(g_2) x1 x2 with chi_1(g_2) = 1.
  EXPECT_EQ(A.product(x2, x1), A.product(x1, x2));
  EXPECT_EQ(A.product(x2, x1), core::basis_vector(h.index(0, {1, 1})));
}

TEST(QuantumLinearSpace, InvalidDataRejected) {
  // chi_1(g_2) chi_2(g_1) = zeta_3 != 1.
  QuantumLinearSpaceData braided{{3, 3}, 3, {{1, 0}, {0, 1}}, {{1, 1}, {0, 1}}};
  EXPECT_THROW(quantum_linear_space(braided), DatumRejected);
  // chi(g) = 1 gives nilpotency order 1.
  QuantumLinearSpaceData trivial{{4}, 4, {{2}}, {{2}}};
  EXPECT_THROW(quantum_linear_space(trivial), DatumRejected);
  // chi(gamma) = zeta_3 is not a character of Z4.
  QuantumLinearSpaceData undefined{{4}, 3, {{1}}, {{1}}};
  EXPECT_THROW(quantum_linear_space(undefined), DatumRejected);
}

TEST(PointedPair, TrivialPhiWithTrivialActionIsCentral) {
  // chi(gamma) = zeta_9^3 so G = <gamma^3> fixes x.
  const auto h = quantum_linear_space(cyclic_pointed_data(3, {1}, {3}));
  const auto p = pointed_pair(h, cyclic_phi(3, 0));
  for (int i = 0; i < h.H->dim(); ++i)
    for (int k = 0; k < 3; ++k) EXPECT_EQ(p.r(i, k), h.H->coalgebra.counit[i]) << i << "," << k;
}

TEST(PointedPair, TaftDatumValidity) {
  const auto h = fixtures::taft(3);
  const auto p = pointed_pair(h, cyclic_phi(3, 1));
  EXPECT_TRUE(braided::check_pairing(p).ok());
  // r(gamma, gamma^3) = <gamma, chi^3> = zeta_9^3; zero on positive degree.
  EXPECT_EQ(p.r(h.index(1, {0}), 1), cyc_root(9, 3));
  EXPECT_TRUE(p.r(h.index(1, {1}), 1).is_zero());
  EXPECT_THROW(pointed_pair(h, cyclic_phi(3, 2)), DatumRejected);
}

TEST(Upsilon, Examples) {
  EXPECT_EQ(upsilon_prime(3, {1}, {1}), (std::set<int>{1}));
  EXPECT_TRUE(upsilon_prime(4, {2}, {1}).empty());
  EXPECT_EQ(upsilon_prime(4, {0}, {0}), (std::set<int>{0, 1, 2, 3}));
  EXPECT_EQ(upsilon_prime(2, {1}, {1}), (std::set<int>{1}));
}

TEST(PointedCointegral, TaftValues) {
  const auto h = fixtures::taft(3);
  const auto p = pointed_pair(h, cyclic_phi(3, 1));
  const auto c = pointed_cointegral(h, p.embedding);
  EXPECT_TRUE(braided::check_cointegral(c).ok());
  EXPECT_TRUE(braided::is_normalized(c));
  // K = k<gamma^3> indexed 1, gamma^3, gamma^6.
  EXPECT_TRUE(c.pi.apply(h.index(5, {1})).empty());
  EXPECT_EQ(c.pi.apply(h.index(6, {0})), core::basis_vector(2));
  EXPECT_EQ(c.pi.apply(h.index(5, {0})), core::basis_vector(1));
  // pi^-1(gamma x) = (G-part of gamma)^-1 eps(x).
  for (int g = 0; g < 9; ++g)
    for (int b = 0; b < 9; ++b) {
      const auto img = c.pi_inv.apply(h.index(g, {b}));
      if (b > 0) {
        EXPECT_TRUE(img.empty());
      } else {
        EXPECT_EQ(img, core::basis_vector((3 - g / 3) % 3));
      }
    }
}

TEST(BuildA, GroupAlgebraAgreesWithClosedForm) {
  QuantumLinearSpaceData data{{4}, 2, {}, {}};
  const auto h = quantum_linear_space(data);
  EXPECT_EQ(h.H->dim(), 4);
  const PhiDatum datum{{{2}}, {{1}}};
  const auto A = build_A(h, datum);
  const auto f = fixtures::z4_fixture();
  EXPECT_EQ(A.result.Q.omega, baby_example_closed_form(f.dec, f.table, f.conductor).omega);
}

TEST(BuildA, TaftOverZ4) {
  const auto h = fixtures::taft(2);
  const auto A = build_A(h, cyclic_phi(2, 1));
  const auto& Q = A.result.Q;
  EXPECT_EQ(Q.dim(), 8);
  EXPECT_TRUE(A.result.free);
  EXPECT_FALSE(A.result.hopf);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        const bool grouplike = h.is_grouplike_index(A.lift_indices[a]) && h.is_grouplike_index(A.lift_indices[b]) &&
                               h.is_grouplike_index(A.lift_indices[c]);
        if (!grouplike) EXPECT_TRUE(Q.omega.at(a, b, c).is_zero());
      }
  EXPECT_EQ(oracles::diagonal_mismatches(h, A, 4, {2}, {{1}}).size(), 0u);
}

TEST(BuildA, A1ProductOracleOverZ8) {
  const auto h = quantum_linear_space(a1_product_data(8, 1));
  const auto A = build_A(h, a1_product_phi(8, {4}));
  EXPECT_EQ(A.result.Q.dim(), 16);
  EXPECT_EQ(oracles::diagonal_mismatches(h, A, 8, {4}, oracles::a1_exponents(1)).size(), 0u);
}

TEST(BuildA, DivisibilityConditionsEnforced) {
  EXPECT_THROW(a1_product_phi(8, {2, 4}), DatumRejected);  // m_1 = 4 does not divide n_1 = 2
  EXPECT_THROW(a1_product_phi(4, {3}), DatumRejected);     // 3 does not divide 4
  EXPECT_NO_THROW(a1_product_phi(4, {2, 2}));
}

TEST(Cohomology, SignCocycleIsNotACoboundary) {
  const auto q = fixtures::z4_fixture().dequiv().Q;
  const auto part = grouplike_part(q);
  EXPECT_EQ(part.order(), 2);
  EXPECT_FALSE(check_three_cocycle(part).has_value());
  EXPECT_FALSE(find_coboundary(part, 4).has_value());
  EXPECT_EQ(cyclic_invariant(part, 1), CycScalar(-1));
}

TEST(Cohomology, TrivialAssociatorIsACoboundary) {
  const auto q = fixtures::d4_fixture().dequiv().Q;
  const auto part = grouplike_part(q);
  EXPECT_EQ(part.order(), 4);
  EXPECT_TRUE(find_coboundary(part, 2).has_value());
}

TEST(Cohomology, NonCocycleIsWitnessed) {
  const auto part = grouplike_part(fixtures::z2_with_sign(cyc_root(4, 1)));
  const auto w = check_three_cocycle(part);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->tuple, (std::vector<int>{1, 1, 1, 1}));
}

}  // namespace
