#include <gtest/gtest.h>

#include "dequiv/braided/pairing.hpp"
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

ExactMatrix trivial_r(const braided::SubalgebraEmbedding& e) {
  ExactMatrix r(e.H->dim(), e.K->dim());
  for (int h = 0; h < e.H->dim(); ++h)
    for (int k = 0; k < e.K->dim(); ++k) r(h, k) = e.H->coalgebra.counit[h] * e.K->coalgebra.counit[k];
  return r;
}

braided::BraidedCentralPair with_entry(const braided::BraidedCentralPair& p, int h, int k, const CycScalar& v) {
  ExactMatrix r = p.r;
  r(h, k) = v;
  return braided::make_pair(p.embedding, r);
}

TEST(Pairing, CentralSubalgebraWithTrivialFormPasses) {
  const auto f = fixtures::d4_fixture();
  const auto& e = f.pair.embedding;
  EXPECT_TRUE(braided::check_embedding(e).ok());
  const auto p = braided::make_pair(e, trivial_r(e));
  EXPECT_TRUE(braided::check_pairing(p).ok());
  EXPECT_TRUE(braided::check_pairing_absorbs_subalgebra(p).ok());
}

TEST(Pairing, TrivialFormOnNoncentralSubalgebraFailsBraiding) {
  // <s> in D4 is commutative but not central: the braiding axiom with
  // r = eps (x) eps reduces to k h = h k.
  const auto d4 = FiniteGroup::dihedral4();
  const auto H = std::make_shared<const core::HopfAlgebra>(builders::group_algebra(d4));
  const auto K = std::make_shared<const core::HopfAlgebra>(builders::group_algebra(FiniteGroup::cyclic(2)));
  core::LinearMap inc{2, 8, {core::basis_vector(0), core::basis_vector(4)}};
  braided::SubalgebraEmbedding e{H, K, inc};
  EXPECT_TRUE(braided::check_embedding(e).ok());
  const auto r = braided::check_pairing(braided::make_pair(e, trivial_r(e)));
  EXPECT_FALSE(family_passed(r, "pairing-braided"));
  EXPECT_TRUE(family_passed(r, "pairing-mult-left"));
}

TEST(Pairing, Z4BicharacterPasses) {
  const auto f = fixtures::z4_fixture();
  EXPECT_TRUE(braided::check_pairing(f.pair).ok());
  EXPECT_TRUE(braided::check_pairing_absorbs_subalgebra(f.pair).ok());
  // r(gamma, gamma^2) = -1, r(gamma^2, gamma^2) = 1, all eight pairs.
  for (int h = 0; h < 4; ++h) {
    EXPECT_TRUE(f.pair.r(h, 0).is_one());
    EXPECT_EQ(f.pair.r(h, 1), h % 2 ? CycScalar(-1) : CycScalar(1));
  }
}

TEST(Pairing, RestrictionFaultIsDetected) {
  const auto f = fixtures::z4_fixture();
  const auto bad = with_entry(f.pair, 2, 1, -1);
  const auto r = braided::check_pairing(bad);
  ASSERT_FALSE(family_passed(r, "pairing-restriction"));
  EXPECT_EQ(r.find("pairing-restriction")->witness->tuple, (std::vector<int>{1, 1}));
}

TEST(Pairing, MultiplicativityAndUnitFaults) {
  const auto f = fixtures::z4_fixture();
  EXPECT_FALSE(family_passed(braided::check_pairing(with_entry(f.pair, 3, 1, 1)), "pairing-mult-left"));
  EXPECT_FALSE(family_passed(braided::check_pairing(with_entry(f.pair, 1, 0, 2)), "pairing-mult-right"));
  EXPECT_FALSE(family_passed(braided::check_pairing(with_entry(f.pair, 0, 1, -1)), "pairing-unit"));
}

TEST(Pairing, BraidingFaultOnTaft) {
  const auto h = fixtures::taft(2);
  const auto p = builders::pointed_pair(h, builders::cyclic_phi(2, 1));
  EXPECT_TRUE(braided::check_pairing(p).ok());
  // r(x, g^2) = 1 breaks the braiding identity at h = x.
  const auto r = braided::check_pairing(with_entry(p, 1, 1, 1));
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(family_passed(r, "pairing-braided"));
}

TEST(Pairing, AbsorptionOfSubalgebra) {
  const auto f = fixtures::z9_fixture();
  EXPECT_TRUE(braided::check_pairing_absorbs_subalgebra(f.pair).ok());
  const auto bad = with_entry(f.pair, 3, 1, cyc_root(9, 3));
  EXPECT_FALSE(braided::check_pairing_absorbs_subalgebra(bad).ok());
}

TEST(PairingInverse, Examples) {
  const auto d4 = fixtures::d4_fixture();
  EXPECT_EQ(braided::pairing_inverse(d4.pair), d4.pair.r);

  const auto z4 = fixtures::z4_fixture();
  const auto inv = braided::pairing_inverse(z4.pair);
  EXPECT_EQ(inv(1, 1), CycScalar(-1));

  const auto h = fixtures::taft(3);
  const auto p = builders::pointed_pair(h, builders::cyclic_phi(3, 1));
  const auto tinv = braided::pairing_inverse(p);
  for (int i = 0; i < h.H->dim(); ++i)
    for (int k = 0; k < p.embedding.K->dim(); ++k)
      if (!h.is_grouplike_index(i)) EXPECT_TRUE(tinv(i, k).is_zero());
}

TEST(PairingInverseProperty, MatchesGenericConvolutionSolve) {
  std::vector<braided::BraidedCentralPair> pairs{fixtures::z4_fixture().pair, fixtures::z9_fixture().pair,
                                                 fixtures::d4_fixture().pair};
  const auto h = fixtures::taft(2);
  pairs.push_back(builders::pointed_pair(h, builders::cyclic_phi(2, 1)));
  for (const auto& p : pairs) {
    const auto tk = fixtures::h_tensor_k(p.embedding);
    const auto generic = core::convolution_inverse(tk, core::Algebra::field(), fixtures::as_functional(p.r));
    ASSERT_TRUE(generic.has_value());
    EXPECT_EQ(*generic, fixtures::as_functional(braided::pairing_inverse(p)));
    EXPECT_EQ(braided::pairing_convolution(p.embedding, p.r, p.r_inv), trivial_r(p.embedding));
    EXPECT_EQ(braided::pairing_convolution(p.embedding, p.r_inv, p.r), trivial_r(p.embedding));
  }
}

TEST(Cointegral, IdentityOnKItself) {
  const auto K = std::make_shared<const core::HopfAlgebra>(builders::group_algebra(FiniteGroup::cyclic(3)));
  braided::SubalgebraEmbedding e{K, K, core::LinearMap::identity(3)};
  const auto c = braided::make_cointegral(e, core::LinearMap::identity(3));
  EXPECT_TRUE(braided::check_cointegral(c).ok());
  EXPECT_EQ(c.pi_inv, K->antipode);
}

TEST(Cointegral, GrouplikeProjection) {
  const auto f = fixtures::z4_fixture();
  EXPECT_TRUE(braided::check_cointegral(f.cointegral).ok());
  EXPECT_TRUE(braided::is_normalized(f.cointegral));
}

TEST(Cointegral, CounitProjectionIsNotKLinear) {
  const auto f = fixtures::z4_fixture();
  const auto& e = f.pair.embedding;
  core::LinearMap pi{4, 2, {}};
  for (int h = 0; h < 4; ++h) pi.images.push_back(core::basis_vector(0));
  const auto c = braided::make_cointegral(e, pi);
  const auto r = braided::check_cointegral(c);
  ASSERT_FALSE(family_passed(r, "k-linear"));
  EXPECT_FALSE(r.find("k-linear")->witness->tuple.empty());
}

TEST(Cointegral, ZeroIsNotInvertible) {
  const auto f = fixtures::z4_fixture();
  core::LinearMap pi{4, 2, std::vector<core::SparseVector>(4)};
  EXPECT_THROW(braided::make_cointegral(f.pair.embedding, pi), core::NotInvertible);
}

TEST(Normalize, CounitExamples) {
  const auto f = fixtures::z4_fixture();
  EXPECT_EQ(braided::normalize_counit(f.cointegral).pi, f.cointegral.pi);

  // 2 pi is still a cointegral but eps(2 pi) = 2 eps.
  const auto h = fixtures::taft(2);
  const auto p = builders::pointed_pair(h, builders::cyclic_phi(2, 1));
  const auto base = builders::pointed_cointegral(h, p.embedding);
  auto pi = base.pi;
  for (auto& img : pi.images) img = core::scaled(img, CycScalar(2));
  const auto c = braided::make_cointegral(p.embedding, pi);
  ASSERT_TRUE(braided::check_cointegral(c).ok());
  const auto n = braided::normalize_counit(c);
  EXPECT_TRUE(braided::check_cointegral(n).ok());
  for (int i = 0; i < h.H->dim(); ++i)
    EXPECT_EQ(p.embedding.K->coalgebra.counit_of(n.pi.apply(i)), h.H->coalgebra.counit[i]);
  EXPECT_EQ(braided::normalize_counit(n).pi, n.pi);
}

TEST(Normalize, UnitExamples) {
  const auto f = fixtures::z4_fixture();
  EXPECT_EQ(braided::normalize_unit(f.cointegral).pi, f.cointegral.pi);

  auto pi = f.cointegral.pi;
  for (auto& img : pi.images) img = core::scaled(img, cyc_root(4, 1));
  const auto scaled = braided::make_cointegral(f.pair.embedding, pi);
  EXPECT_EQ(braided::normalize_unit(scaled).pi, f.cointegral.pi);

  // pi(1) = g^2 grouplike: pi'(h) = pi(h) g^2.
  core::LinearMap shifted{4, 2, {}};
  for (int h = 0; h < 4; ++h) shifted.images.push_back(f.pair.embedding.K->algebra.multiply(f.cointegral.pi.apply(h),
                                                                                          core::basis_vector(1)));
  const auto c = braided::make_cointegral(f.pair.embedding, shifted);
  EXPECT_TRUE(braided::check_cointegral(c).ok());
  const auto n = braided::normalize_unit(c);
  EXPECT_EQ(n.pi, f.cointegral.pi);
  EXPECT_EQ(braided::normalize_unit(n).pi, n.pi);
  EXPECT_TRUE(braided::is_normalized(braided::normalize(c)));
}

TEST(Normalize, NonUnitPiOfOneRejected) {
  const auto f = fixtures::z4_fixture();
  // pi(1) = 1 + g^2 is a zero divisor in kZ2, so pi has no convolution inverse.
  core::LinearMap pi{4, 2, {}};
  const core::SparseVector zd{{0, CycScalar(1)}, {1, CycScalar(1)}};
  for (int h = 0; h < 4; ++h)
    pi.images.push_back(f.pair.embedding.K->algebra.multiply(f.cointegral.pi.apply(h), zd));
  EXPECT_THROW(braided::make_cointegral(f.pair.embedding, pi), core::NotInvertible);
}

}  // namespace
