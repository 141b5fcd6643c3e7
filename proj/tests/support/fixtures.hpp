// Shared fixtures for the test suites. Every fixture keeps the groups its
// coset decomposition points into alive.
#pragma once

#include <memory>
#include <vector>

#include "dequiv/builders/cohomology.hpp"
#include "dequiv/builders/groups.hpp"
#include "dequiv/builders/pointed.hpp"
#include "dequiv/core/convolution.hpp"
#include "dequiv/engine/dequiv.hpp"

namespace fixtures {

using namespace dequiv;
using builders::FiniteGroup;
using core::CycScalar;
using exact::cyc_root;

struct GroupFixture {
  std::unique_ptr<FiniteGroup> gamma;
  builders::CosetDecomposition dec;
  builders::BicharacterTable table;
  unsigned conductor = 1;
  braided::BraidedCentralPair pair;
  braided::Cointegral cointegral;

  std::vector<core::SparseVector> lifts() const {
    std::vector<core::SparseVector> out;
    for (int rep : dec.reps) out.push_back(core::basis_vector(rep));
    return out;
  }
  engine::DequivResult dequiv() const {
    engine::DequivOptions opt;
    opt.lifts = lifts();
    return engine::de_equivariantize(pair, cointegral, opt);
  }
};

/// Cyclic Gamma = Z_order, G = <gamma^index>, r(gamma, gamma^index) = zeta_conductor^e.
inline GroupFixture cyclic_group_fixture(int order, int index, unsigned conductor, long e) {
  GroupFixture f;
  f.gamma = std::make_unique<FiniteGroup>(FiniteGroup::cyclic(order));
  f.dec = builders::coset_decomposition(*f.gamma, {index});
  f.conductor = conductor;
  f.table = builders::bicharacter_from_generators(*f.gamma, f.dec.G, {index}, conductor, {{e}});
  f.pair = builders::bicharacter_pair(*f.gamma, f.dec.G, f.table, conductor);
  f.cointegral = builders::grouplike_cointegral(f.pair.embedding, f.dec);
  return f;
}

/// Z4 over <gamma^2> with r(gamma, gamma^2) = -1.
inline GroupFixture z4_fixture() { return cyclic_group_fixture(4, 2, 2, 1); }
/// Z9 over <gamma^3> with r(gamma, gamma^3) = zeta_9^3.
inline GroupFixture z9_fixture() { return cyclic_group_fixture(9, 3, 9, 3); }
/// Z8 over <gamma^4> with r(gamma, gamma^4) = -1.
inline GroupFixture z8_fixture() { return cyclic_group_fixture(8, 4, 2, 1); }

/// D4 over its center with the trivial pairing.
inline GroupFixture d4_fixture() {
  GroupFixture f;
  f.gamma = std::make_unique<FiniteGroup>(FiniteGroup::dihedral4());
  f.dec = builders::coset_decomposition(*f.gamma, {2});
  f.table.assign(static_cast<size_t>(f.gamma->order) * f.dec.G.group.order, CycScalar(1));
  f.pair = builders::bicharacter_pair(*f.gamma, f.dec.G, f.table, 1);
  f.cointegral = builders::grouplike_cointegral(f.pair.embedding, f.dec);
  return f;
}

/// Taft algebra over Z_{n^2}: chi(gamma) = zeta_{n^2}, g = gamma.
inline builders::QuantumLinearSpace taft(int n) {
  return builders::quantum_linear_space(builders::cyclic_pointed_data(n, {1}, {1}));
}

/// kZ2 with omega(g^i, g^j, g^k) = value^{ijk}.
inline core::CoquasiBialgebra z2_with_sign(const CycScalar& value) {
  const auto h = builders::group_algebra(FiniteGroup::cyclic(2), value.conductor());
  core::Tensor3 omega = core::trivial_associator(h.coalgebra);
  omega.at(1, 1, 1) = value;
  return core::make_coquasi(h.coalgebra, h.algebra, omega);
}

/// Coalgebra of H (x) K.
inline core::TensorCoalgebra h_tensor_k(const braided::SubalgebraEmbedding& e) {
  return core::TensorCoalgebra({&e.H->coalgebra, &e.K->coalgebra});
}

/// r as a functional on H (x) K (one column), for the generic convolution solver.
inline exact::ExactMatrix as_functional(const exact::ExactMatrix& r) {
  exact::ExactMatrix f(r.rows() * r.cols(), 1);
  for (size_t h = 0; h < r.rows(); ++h)
    for (size_t k = 0; k < r.cols(); ++k) f(h * r.cols() + k, 0) = r(h, k);
  return f;
}

}  // namespace fixtures
