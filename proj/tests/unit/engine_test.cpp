#include <algorithm>

#include <gtest/gtest.h>

#include "dequiv/engine/dequiv.hpp"
#include "../support/fixtures.hpp"

namespace {

using namespace dequiv;
using core::CycScalar;
using core::SparseVector;
using exact::cyc_root;
using fixtures::FiniteGroup;

std::vector<exact::Vector> dense_span(const std::vector<exact::Vector>& v, size_t n) {
  return exact::span_basis(v, n);
}

void expect_section_invariants(const engine::DequivResult& r, const core::HopfAlgebra& H) {
  const int d = r.Q.dim();
  EXPECT_EQ(core::compose(r.nu, r.j), core::LinearMap::identity(d));
  EXPECT_EQ(r.j.apply(r.nu.apply(H.algebra.unit)), H.algebra.unit);
  for (int q = 0; q < d; ++q) EXPECT_EQ(H.coalgebra.counit_of(r.j.apply(q)), r.Q.coalgebra.counit[q]);
}

TEST(KplusH, TrivialSubalgebra) {
  const auto H = std::make_shared<const core::HopfAlgebra>(builders::group_algebra(FiniteGroup::cyclic(4)));
  const auto K = std::make_shared<const core::HopfAlgebra>(builders::group_algebra(FiniteGroup::cyclic(1)));
  braided::SubalgebraEmbedding e{H, K, core::LinearMap{1, 4, {core::basis_vector(0)}}};
  EXPECT_TRUE(engine::kplus_h_subspace(e).empty());
}

TEST(KplusH, Z2InZ4) {
  const auto f = fixtures::z4_fixture();
  const auto w = engine::kplus_h_subspace(f.pair.embedding);
  ASSERT_EQ(w.size(), 2u);
  const std::vector<exact::Vector> expect{{-1, 0, 1, 0}, {0, -1, 0, 1}};
  EXPECT_EQ(dense_span(w, 4), dense_span(expect, 4));
}

TEST(KplusH, TaftOverZ9) {
  const auto h = fixtures::taft(3);
  const auto p = builders::pointed_pair(h, builders::cyclic_phi(3, 1));
  EXPECT_EQ(engine::kplus_h_subspace(p.embedding).size(), 54u);
}

TEST(Section, GroupCaseIsRepresentativeInclusion) {
  const auto f = fixtures::z9_fixture();
  const auto r = f.dequiv();
  for (int q = 0; q < f.dec.count(); ++q) EXPECT_EQ(r.j.apply(q), core::basis_vector(f.dec.reps[q]));
  expect_section_invariants(r, *f.pair.embedding.H);
}

TEST(Section, NonRepresentativeLiftsGiveTheSameSection) {
  // Lifting the class of gamma by gamma^3 (another coset member) changes nothing.
  const auto f = fixtures::z4_fixture();
  engine::DequivOptions opt;
  opt.lifts = std::vector<SparseVector>{core::basis_vector(2), core::basis_vector(3)};
  const auto r = engine::de_equivariantize(f.pair, f.cointegral, opt);
  EXPECT_EQ(r.j.apply(0), core::basis_vector(0));
  EXPECT_EQ(r.j.apply(1), core::basis_vector(1));
  EXPECT_EQ(r.Q.omega, f.dequiv().Q.omega);
}

TEST(Section, TrivialSubalgebraSectionIsTheLift) {
  const auto gamma = FiniteGroup::cyclic(3);
  const auto dec = builders::coset_decomposition(gamma, {});
  const builders::BicharacterTable table(3, CycScalar(1));
  const auto p = builders::bicharacter_pair(gamma, dec.G, table, 1);
  const auto c = builders::grouplike_cointegral(p.embedding, dec);
  const auto r = engine::de_equivariantize(p, c);
  EXPECT_EQ(r.Q.dim(), 3);
  EXPECT_EQ(r.j, core::LinearMap::identity(3));
  EXPECT_TRUE(r.hopf);
}

TEST(Section, TaftSectionLandsOnRepresentativeMonomials) {
  // Whatever lifts are used, j(class of gamma^a x^b) = gamma^(a mod 3) x^b.
  const auto h = fixtures::taft(3);
  const auto p = builders::pointed_pair(h, builders::cyclic_phi(3, 1));
  const auto c = builders::pointed_cointegral(h, p.embedding);
  const auto r = engine::de_equivariantize(p, c);  // default complement lifts
  for (int q = 0; q < r.Q.dim(); ++q) {
    const auto img = r.j.apply(q);
    ASSERT_EQ(img.size(), 1u);
    EXPECT_TRUE(img[0].value.is_one());
    EXPECT_LT(h.group_part(img[0].index), 3);
  }
  expect_section_invariants(r, *h.H);
}

TEST(Multiplication, CentralCaseIsQuotientProduct) {
  const auto f = fixtures::d4_fixture();
  const auto r = f.dequiv();
  const auto& H = *f.pair.embedding.H;
  for (int a = 0; a < r.Q.dim(); ++a)
    for (int b = 0; b < r.Q.dim(); ++b)
      EXPECT_EQ(r.Q.algebra.product(a, b), r.nu.apply(H.algebra.multiply(r.j.apply(a), r.j.apply(b))));
  EXPECT_TRUE(r.hopf);
}

TEST(Multiplication, Z4GivesZ2GroupLaw) {
  const auto r = fixtures::z4_fixture().dequiv();
  EXPECT_EQ(r.Q.algebra.product(0, 0), core::basis_vector(0));
  EXPECT_EQ(r.Q.algebra.product(0, 1), core::basis_vector(1));
  EXPECT_EQ(r.Q.algebra.product(1, 0), core::basis_vector(1));
  EXPECT_EQ(r.Q.algebra.product(1, 1), core::basis_vector(0));
  EXPECT_EQ(r.Q.algebra.unit, core::basis_vector(0));
}

TEST(Associator, TrivialPairingGivesTrivialOmega) {
  const auto r = fixtures::d4_fixture().dequiv();
  EXPECT_EQ(r.Q.omega, core::trivial_associator(r.Q.coalgebra));
}

TEST(Associator, Z4SignCocycle) {
  const auto r = fixtures::z4_fixture().dequiv();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) EXPECT_EQ(r.Q.omega.at(i, j, k), (i & j & k) ? CycScalar(-1) : CycScalar(1));
  EXPECT_FALSE(r.hopf);
  EXPECT_TRUE(r.free);
}

TEST(Associator, GroupCaseMatchesCosetCocycle) {
  // omega(u, v, w) = r(u, theta(v, w)) evaluated straight from the tables.
  for (const auto& f : {fixtures::z4_fixture(), fixtures::z9_fixture(), fixtures::z8_fixture()}) {
    const auto r = f.dequiv();
    const int t = f.dec.count();
    const int gk = f.dec.G.group.order;
    for (int u = 0; u < t; ++u)
      for (int v = 0; v < t; ++v)
        for (int w = 0; w < t; ++w) {
          const int theta = f.dec.G.index_of[f.dec.theta_at(v, w)];
          EXPECT_EQ(r.Q.omega.at(u, v, w), f.table[static_cast<size_t>(f.dec.reps[u]) * gk + theta]);
        }
  }
}

TEST(Engine, InducedPairingDescends) {
  const auto f = fixtures::z9_fixture();
  const auto r = f.dequiv();
  for (int h = 0; h < 9; ++h)
    for (int k = 0; k < 3; ++k) {
      CycScalar s;
      for (const auto& e : r.nu.apply(h)) s += e.value * r.r_bar(e.index, k);
      EXPECT_EQ(s, f.pair.r(h, k));
    }
}

TEST(Engine, D4QuotientIsKleinFourGroupAlgebra) {
  const auto f = fixtures::d4_fixture();
  const auto r = f.dequiv();
  ASSERT_EQ(r.Q.dim(), 4);
  const auto quotient = f.dec.quotient_group();
  for (int a = 0; a < 4; ++a) {
    EXPECT_TRUE(r.Q.coalgebra.is_grouplike(a));
    EXPECT_EQ(quotient.mul(a, a), quotient.identity);
    for (int b = 0; b < 4; ++b) EXPECT_EQ(r.Q.algebra.product(a, b), core::basis_vector(quotient.mul(a, b)));
  }
  EXPECT_TRUE(quotient.is_abelian());
}

TEST(EngineProperty, PermutedLiftsGiveIsomorphicQ) {
  const auto h = fixtures::taft(2);
  const auto datum = builders::cyclic_phi(2, 1);
  const auto p = builders::pointed_pair(h, datum);
  const auto c = builders::pointed_cointegral(h, p.embedding);
  const auto dec = builders::coset_decomposition(h.gamma, builders::validate_datum(h, datum).generator_indices);
  auto lifts = builders::pointed_lifts(h, dec);
  engine::DequivOptions opt;
  opt.lifts = lifts;
  const auto base = engine::de_equivariantize(p, c, opt);
  // sigma: new position i holds old basis vector perm[i].
  std::vector<int> perm(lifts.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>((i * 3 + 1) % perm.size());
  std::vector<SparseVector> shuffled;
  for (int k : perm) shuffled.push_back(lifts[k]);
  opt.lifts = shuffled;
  const auto other = engine::de_equivariantize(p, c, opt);
  const int d = base.Q.dim();
  std::vector<int> pos(d);
  for (int i = 0; i < d; ++i) pos[perm[i]] = i;
  auto relabel = [&](const SparseVector& v) {
    std::vector<core::Entry> raw;
    for (const auto& e : v) raw.push_back({pos[e.index], e.value});
    return core::combine(raw);
  };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      EXPECT_EQ(other.Q.algebra.product(pos[a], pos[b]), relabel(base.Q.algebra.product(a, b)));
      for (int cc = 0; cc < d; ++cc) EXPECT_EQ(other.Q.omega.at(pos[a], pos[b], pos[cc]), base.Q.omega.at(a, b, cc));
    }
}

TEST(Engine, InvalidPairingIsRejectedWithStage) {
  const auto f = fixtures::z4_fixture();
  auto r = f.pair.r;
  r(2, 1) = -1;
  const auto bad = braided::make_pair(f.pair.embedding, r);
  try {
    engine::de_equivariantize(bad, f.cointegral);
    FAIL() << "expected InputRejected";
  } catch (const engine::InputRejected& e) {
    EXPECT_EQ(e.stage(), "pairing");
    EXPECT_FALSE(e.report().ok());
  }
}

TEST(Engine, UnnormalizedCointegralIsRejected) {
  const auto f = fixtures::z4_fixture();
  auto pi = f.cointegral.pi;
  for (auto& img : pi.images) img = core::scaled(img, CycScalar(3));
  const auto c = braided::make_cointegral(f.pair.embedding, pi);
  EXPECT_THROW(engine::de_equivariantize(f.pair, c), core::AxiomFailure);
  EXPECT_NO_THROW(engine::de_equivariantize(f.pair, braided::normalize(c)));
}

TEST(Engine, CertificationIsEmbedded) {
  const auto r = fixtures::z8_fixture().dequiv();
  EXPECT_TRUE(r.certification.ok());
  for (const char* axiom : {"coassoc", "counit", "quasi-assoc", "pentagon", "normalized"})
    EXPECT_NE(r.certification.find(axiom), nullptr) << axiom;
  EXPECT_EQ(r.certification.find("pentagon")->tuples, 4u * 4 * 4 * 4);
}

}  // namespace
