#include <map>

#include <gtest/gtest.h>

#include "dequiv/core/checks.hpp"
#include "dequiv/core/convolution.hpp"
#include "dequiv/core/quotient.hpp"
#include "../support/fixtures.hpp"

namespace {

using namespace dequiv;
using core::CycScalar;
using exact::cyc_root;
using exact::ExactMatrix;
using fixtures::FiniteGroup;

bool family_passed(const core::CheckReport& r, const std::string& axiom) {
  const auto* v = r.find(axiom);
  return v != nullptr && v->passed;
}

CycScalar q_binomial(int n, int k, const CycScalar& q) {
  // Pascal recursion [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<std::vector<CycScalar>> t(n + 1, std::vector<CycScalar>(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[i][0] = 1;
    for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? q.pow(j) * t[i - 1][j] : CycScalar());
  }
  return t[n][k];
}

TEST(Coalgebra, GroupAlgebraCoassociative) {
  const auto h = builders::group_algebra(FiniteGroup::cyclic(2));
  EXPECT_TRUE(core::check_coassoc(h.coalgebra).ok());
  EXPECT_TRUE(h.coalgebra.is_grouplike(0));
  EXPECT_TRUE(h.coalgebra.is_grouplike(1));
}

TEST(Coalgebra, TaftCoproductMatchesQBinomialExpansion) {
  // Delta(g^a x^b) = sum_k [b,k]_q g^a x^(b-k) (x) q^(-k(b-k)) g^(a+b-k) x^k with q = chi(g).
  const auto h = fixtures::taft(2);
  ASSERT_EQ(h.H->dim(), 16);
  const CycScalar q = cyc_root(4, 1);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      std::map<std::pair<int, int>, CycScalar> expect, got;
      for (int k = 0; k <= b; ++k)
        expect[{a * 4 + (b - k), ((a + b - k) % 4) * 4 + k}] += q_binomial(b, k, q) * q.pow(-k * (b - k));
      for (const auto& t : h.H->coalgebra.delta[a * 4 + b]) got[{t.left, t.right}] += t.coef;
      std::erase_if(expect, [](const auto& e) { return e.second.is_zero(); });
      EXPECT_EQ(got, expect) << "at g^" << a << " x^" << b;
    }
  EXPECT_TRUE(core::check_coassoc(h.H->coalgebra).ok());
}

TEST(Coalgebra, PerturbedCoproductIsLocated) {
  auto h = builders::group_algebra(FiniteGroup::cyclic(3));
  h.coalgebra.delta[2].front().coef += 1;
  const auto r = core::check_coassoc(h.coalgebra);
  ASSERT_FALSE(r.ok());
  ASSERT_NE(r.witness(), nullptr);
  EXPECT_EQ(r.witness()->tuple, std::vector<int>{2});
}

TEST(Hopf, ExamplesPass) {
  EXPECT_TRUE(core::check_hopf(builders::group_algebra(FiniteGroup::dihedral4())).ok());
  EXPECT_TRUE(core::check_hopf(*fixtures::taft(2).H).ok());
  const auto plane = builders::quantum_linear_space(builders::a1_product_data(3, 2));
  EXPECT_EQ(plane.H->dim(), 81);
  EXPECT_TRUE(core::check_hopf(*plane.H).ok());
}

TEST(Hopf, IdentityAntipodeOnTaftFails) {
  auto h = *fixtures::taft(2).H;
  h.antipode = core::LinearMap::identity(h.dim());
  const auto r = core::check_hopf(h);
  EXPECT_FALSE(family_passed(r, "antipode"));
  EXPECT_TRUE(family_passed(r, "assoc"));
  EXPECT_TRUE(family_passed(r, "bialg"));
}

TEST(Hopf, FaultsAreAttributedToTheirFamily) {
  const auto base = *fixtures::taft(2).H;
  {
    auto h = base;
    h.algebra.mult[1 * 16 + 1] = core::scaled(h.algebra.mult[1 * 16 + 1], CycScalar(2));
    EXPECT_FALSE(family_passed(core::check_hopf(h), "assoc"));
  }
  {
    auto h = base;
    h.algebra.unit = core::basis_vector(4);
    EXPECT_FALSE(family_passed(core::check_hopf(h), "unit"));
  }
  {
    auto h = base;
    h.coalgebra.counit[4] = 2;
    const auto r = core::check_hopf(h);
    EXPECT_FALSE(family_passed(r, "counit"));
  }
}

TEST(Convolution, UnitLaws) {
  const auto h = builders::group_algebra(FiniteGroup::cyclic(4));
  const auto field = core::Algebra::field();
  const auto eps = core::convolution_unit(h.coalgebra, field);
  EXPECT_EQ(core::convolution_product(h.coalgebra, field, eps, eps), eps);
  ExactMatrix f(4, 1);
  for (int i = 0; i < 4; ++i) f(i, 0) = cyc_root(4, i) + 1;
  EXPECT_EQ(core::convolution_product(h.coalgebra, field, f, eps), f);
  EXPECT_EQ(core::convolution_product(h.coalgebra, field, eps, f), f);
  const auto inv = core::convolution_inverse(h.coalgebra, field, eps);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv, eps);
}

TEST(Convolution, ZeroMapIsNotInvertible) {
  const auto h = builders::group_algebra(FiniteGroup::cyclic(4));
  EXPECT_FALSE(core::convolution_inverse(h.coalgebra, core::Algebra::field(), ExactMatrix(4, 1)).has_value());
}

TEST(Convolution, MismatchedShapesRejected) {
  const auto h = builders::group_algebra(FiniteGroup::cyclic(4));
  EXPECT_THROW(core::convolution_product(h.coalgebra, core::Algebra::field(), ExactMatrix(4, 1), ExactMatrix(3, 1)),
               std::invalid_argument);
}

TEST(Convolution, GrouplikeProjectionInverseIsAntipodeAfterPi) {
  const auto f = fixtures::z4_fixture();
  const auto& e = f.pair.embedding;
  const auto pi = f.cointegral.pi.to_matrix();
  const auto inv = core::convolution_inverse(e.H->coalgebra, e.K->algebra, pi);
  ASSERT_TRUE(inv.has_value());
  const auto s_pi = core::compose(e.K->antipode, f.cointegral.pi).to_matrix();
  EXPECT_EQ(*inv, s_pi);
  // gamma = x p maps to x^-1: gamma^3 = gamma^2 gamma maps to gamma^2.
  EXPECT_EQ(f.cointegral.pi_inv.apply(3), core::basis_vector(1));
  const auto unit = core::convolution_unit(e.H->coalgebra, e.K->algebra);
  EXPECT_EQ(core::convolution_product(e.H->coalgebra, e.K->algebra, pi, *inv), unit);
  EXPECT_EQ(core::convolution_product(e.H->coalgebra, e.K->algebra, *inv, pi), unit);
}

TEST(ConvolutionProperty, InverseIsTwoSidedOnTaft) {
  const auto h = fixtures::taft(2);
  const auto& H = *h.H;
  const auto field = core::Algebra::field();
  // An invertible functional: eps plus a multiple of the dual of x.
  ExactMatrix f = core::convolution_unit(H.coalgebra, field);
  f(1, 0) = 3;
  f(5, 0) = cyc_root(4, 1);
  const auto g = core::convolution_inverse(H.coalgebra, field, f);
  ASSERT_TRUE(g.has_value());
  const auto unit = core::convolution_unit(H.coalgebra, field);
  EXPECT_EQ(core::convolution_product(H.coalgebra, field, f, *g), unit);
  EXPECT_EQ(core::convolution_product(H.coalgebra, field, *g, f), unit);
}

TEST(Coquasi, HopfWithTrivialAssociatorPasses) {
  const auto q = core::as_coquasi(*fixtures::taft(2).H);
  EXPECT_TRUE(core::check_coquasi(q).ok());
  EXPECT_TRUE(core::check_quasi_antipode(q).ok());
  EXPECT_TRUE(q.has_trivial_associator());
}

TEST(Coquasi, SignCocycleOnZ2) {
  const auto q = fixtures::z2_with_sign(CycScalar(-1));
  EXPECT_TRUE(core::check_coquasi(q).ok());
  EXPECT_EQ(q.omega_inv.at(1, 1, 1), CycScalar(-1));
  // Flipping omega(g,g,g) back to +1 gives the trivial associator, which is
  // still a 3-cocycle.
  EXPECT_TRUE(core::check_coquasi(fixtures::z2_with_sign(CycScalar(1))).ok());
}

TEST(Coquasi, NonCocyclePentagonWitness) {
  // omega(g,g,g) = i: at (g,g,g,g) the pentagon reads i * 1 * i = -1 against 1.
  const auto q = fixtures::z2_with_sign(cyc_root(4, 1));
  const auto r = core::check_coquasi(q);
  EXPECT_TRUE(family_passed(r, "quasi-assoc"));
  ASSERT_FALSE(family_passed(r, "pentagon"));
  EXPECT_EQ(r.find("pentagon")->witness->tuple, (std::vector<int>{1, 1, 1, 1}));
}

TEST(Coquasi, NormalizationFailure) {
  auto q = fixtures::z2_with_sign(CycScalar(-1));
  q.omega.at(0, 1, 1) = -1;
  q.omega_inv.at(0, 1, 1) = -1;
  EXPECT_FALSE(family_passed(core::check_coquasi(q), "normalized"));
}

TEST(Coquasi, QuasiAssociativityFailureNeedsNoncocommutativeQ) {
  // On a group algebra quasi-associativity holds for any omega; on the
  // 8-dimensional Taft quotient a perturbed omega breaks it.
  const auto h = fixtures::taft(2);
  auto res = builders::build_A(h, builders::cyclic_phi(2, 1)).result;
  auto q = res.Q;
  EXPECT_TRUE(core::check_coquasi(q).ok());
  q.omega.at(1, 2, 2) = q.omega.at(1, 2, 2) + 1;
  q = core::make_coquasi(q.coalgebra, q.algebra, q.omega);
  EXPECT_FALSE(family_passed(core::check_coquasi(q), "quasi-assoc"));
}

TEST(QuasiAntipode, GroupQuasiAntipodeOnZ2) {
  auto base = fixtures::z2_with_sign(CycScalar(-1));
  // S(g) = g, alpha = eps, beta(g^i) = omega(g^i, g^i, g^i)^-1.
  core::QuasiAntipode qa{core::LinearMap::identity(2), {1, 1}, {1, CycScalar(-1)}};
  auto q = core::make_coquasi(base.coalgebra, base.algebra, base.omega, qa);
  EXPECT_TRUE(core::check_quasi_antipode(q).ok());
  q.quasi_antipode->alpha = {0, 0};
  const auto r = core::check_quasi_antipode(q);
  EXPECT_FALSE(family_passed(r, "antipode-alpha"));
}

TEST(QuasiAntipode, WrongBetaFailsOmegaIdentity) {
  auto base = fixtures::z2_with_sign(CycScalar(-1));
  core::QuasiAntipode qa{core::LinearMap::identity(2), {1, 1}, {1, 1}};
  const auto q = core::make_coquasi(base.coalgebra, base.algebra, base.omega, qa);
  EXPECT_FALSE(core::check_quasi_antipode(q).ok());
}

TEST(Coideal, Examples) {
  const auto h4 = builders::group_algebra(FiniteGroup::cyclic(4));
  EXPECT_FALSE(core::coideal_check(h4.coalgebra, {}).has_value());
  // K+H for kZ2 in kZ4: span{g^2 - 1, g^3 - g}.
  const std::vector<exact::Vector> w{{-1, 0, 1, 0}, {0, -1, 0, 1}};
  EXPECT_FALSE(core::coideal_check(h4.coalgebra, w).has_value());
  const std::vector<exact::Vector> one{{1, 0, 0, 0}};
  const auto bad = core::coideal_check(h4.coalgebra, one);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->coordinate, "counit");
  // eps vanishes on g + g^2 - 2 but its coproduct leaves W (x) C + C (x) W.
  const std::vector<exact::Vector> skew{{-2, 1, 1, 0}};
  EXPECT_TRUE(core::coideal_check(h4.coalgebra, skew).has_value());
}

TEST(Quotient, Examples) {
  const auto h4 = builders::group_algebra(FiniteGroup::cyclic(4));
  const auto same = core::quotient_coalgebra(h4.coalgebra, {});
  EXPECT_EQ(same.q.dim, 4);
  EXPECT_EQ(same.nu, core::LinearMap::identity(4));
  EXPECT_EQ(same.lift, core::LinearMap::identity(4));

  const std::vector<exact::Vector> w{{-1, 0, 1, 0}, {0, -1, 0, 1}};
  const auto q = core::quotient_coalgebra(h4.coalgebra, w);
  EXPECT_EQ(q.q.dim, 2);
  for (int i = 0; i < 2; ++i) EXPECT_TRUE(q.q.is_grouplike(i));
  EXPECT_TRUE(core::check_coassoc(q.q).ok());
  EXPECT_EQ(core::compose(q.nu, q.lift), core::LinearMap::identity(2));

  const auto d4 = fixtures::d4_fixture();
  const auto kh = engine::kplus_h_subspace(d4.pair.embedding);
  EXPECT_EQ(core::quotient_coalgebra(d4.pair.embedding.H->coalgebra, kh).q.dim, 4);

  const std::vector<exact::Vector> one{{1, 0, 0, 0}};
  EXPECT_THROW(core::quotient_coalgebra(h4.coalgebra, one), core::AxiomFailure);
}

TEST(QuotientProperty, NuIsACoalgebraMap) {
  const auto h = fixtures::taft(2);
  const auto e = builders::pointed_pair(h, builders::cyclic_phi(2, 1)).embedding;
  const auto kh = engine::kplus_h_subspace(e);
  const auto q = core::quotient_coalgebra(e.H->coalgebra, kh);
  EXPECT_EQ(q.q.dim, 8);
  EXPECT_TRUE(core::check_coassoc(q.q).ok());
  const int d = q.q.dim;
  for (int i = 0; i < e.H->dim(); ++i) {
    const auto lhs = core::coproduct_of(q.q, q.nu.apply(i));
    core::Accumulator acc(d * d);
    for (const auto& t : e.H->coalgebra.delta[i])
      for (const auto& a : q.nu.apply(t.left))
        for (const auto& b : q.nu.apply(t.right)) acc.add(a.index * d + b.index, t.coef * a.value * b.value);
    EXPECT_EQ(lhs, acc.take()) << "at basis " << i;
    EXPECT_EQ(q.q.counit_of(q.nu.apply(i)), e.H->coalgebra.counit[i]);
  }
}

TEST(Checks, ThreadCountDoesNotChangeWitness) {
  const auto q = fixtures::z2_with_sign(cyc_root(4, 1));
  core::CheckOptions one{1, std::nullopt}, many{8, std::nullopt};
  const auto a = core::check_coquasi(q, one), b = core::check_coquasi(q, many);
  ASSERT_EQ(a.verdicts.size(), b.verdicts.size());
  for (size_t i = 0; i < a.verdicts.size(); ++i) {
    EXPECT_EQ(a.verdicts[i].passed, b.verdicts[i].passed);
    if (a.verdicts[i].witness) {
      EXPECT_EQ(a.verdicts[i].witness->tuple, b.verdicts[i].witness->tuple);
    }
  }
}

}  // namespace
