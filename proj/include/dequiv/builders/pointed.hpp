/**
 * @file pointed.hpp
 * @brief Quantum linear spaces B(V)#k Gamma over abelian Gamma (Cartan type
 * A1 x ... x A1), the (G, Phi) data that classify their braided central
 * subalgebras, and the resulting de-equivariantizations.
 *
 * Basis: gamma * x_t^{b_t} ... x_1^{b_1} with index gamma * M + mono, where M
 * is the number of monomials and mono encodes (b_t, ..., b_1) mixed-radix
 * with b_t most significant.
 */
#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "dequiv/braided/pairing.hpp"
#include "dequiv/builders/groups.hpp"
#include "dequiv/engine/dequiv.hpp"

namespace dequiv::builders {

/// Raised when builder input data violates a stated condition.
class DatumRejected : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QuantumLinearSpaceData {
  std::vector<int> gamma;                      // invariant factors of Gamma
  unsigned conductor = 1;                      // characters take values in mu_N
  std::vector<std::vector<long>> grouplikes;   // g_i as exponent vectors
  std::vector<std::vector<long>> characters;   // chi_i(gamma_k) = zeta_N^{characters[i][k]}
};

struct QuantumLinearSpace {
  QuantumLinearSpaceData data;
  FiniteGroup gamma;
  std::vector<int> nilpotency;  // N_i = ord chi_i(g_i)
  int monomials = 1;
  std::shared_ptr<const core::HopfAlgebra> H;

  int rank() const { return static_cast<int>(nilpotency.size()); }
  int index(int g, const std::vector<int>& b) const;
  int group_part(int idx) const { return idx / monomials; }
  /// (b_1, ..., b_t) of a basis index.
  std::vector<int> exponents(int idx) const;
  bool is_grouplike_index(int idx) const { return idx % monomials == 0; }
  /// chi_i(gamma) for a group element index.
  CycScalar chi(int i, int g) const;
  /// <gamma, zeta_N^{phi . a}> for a character given by exponents.
  CycScalar character(const std::vector<long>& phi, int g) const;
};

/// Validates the data (characters well defined, chi_i(g_j) chi_j(g_i) = 1 for
/// i != j, N_i >= 2) and builds H; check_hopf must pass or AxiomFailure is thrown.
QuantumLinearSpace quantum_linear_space(const QuantumLinearSpaceData& data);

struct PhiDatum {
  std::vector<std::vector<long>> generators;  // G generators as exponent vectors
  std::vector<std::vector<long>> phi;         // Phi(generator l) as character exponents
};

/// Phi evaluated on all of G, with the conditions <g', Phi(g)> = 1 and
/// <g_i, Phi(g)> = chi_i(g) verified. Throws DatumRejected naming the failure.
struct ValidatedDatum {
  Subgroup G;
  std::vector<int> generator_indices;
  std::vector<std::vector<long>> phi_of;  // subgroup index -> character exponents
};
ValidatedDatum validate_datum(const QuantumLinearSpace& h, const PhiDatum& datum);

/// r(gamma x, g) = <gamma, Phi(g)> delta_{x,1}; passes check_pairing or throws.
braided::BraidedCentralPair pointed_pair(const QuantumLinearSpace& h, const PhiDatum& datum);

/// pi(gamma x) = (G-part of gamma) eps(x), with G-parts from the least-index
/// coset representatives. Checked and normalized before return.
braided::Cointegral pointed_cointegral(const QuantumLinearSpace& h, const braided::SubalgebraEmbedding& e);

/// Coset representative times monomial, in H index order.
std::vector<core::SparseVector> pointed_lifts(const QuantumLinearSpace& h, const CosetDecomposition& dec);

struct PointedResult {
  braided::BraidedCentralPair pair;
  braided::Cointegral cointegral;
  CosetDecomposition cosets;
  std::vector<int> lift_indices;  // H basis index of each Q basis vector
  engine::DequivResult result;
};

PointedResult build_A(const QuantumLinearSpace& h, const PhiDatum& datum, const engine::DequivOptions& opt = {});

/// {s : 0 <= s < n, b_i s = d_i mod n for all i}.
std::set<int> upsilon_prime(int n, const std::vector<long>& b, const std::vector<long>& d);

/// Cyclic Gamma of order n^2 with q = zeta_{n^2}, chi_i(gamma) = q^{d_i},
/// g_i = gamma^{b_i}.
QuantumLinearSpaceData cyclic_pointed_data(int n, const std::vector<long>& b, const std::vector<long>& d);
/// G = <gamma^n> and Phi(gamma^n) = chi^{ns}, chi(gamma) = q.
PhiDatum cyclic_phi(int n, long s);

/// A1 x ... x A1 at q = zeta_N: Gamma = Z_N^t, g_i = gamma_i, chi_j(gamma_i) = q_ij
/// with q_ii = q^2 and q_ij = 1 otherwise.
QuantumLinearSpaceData a1_product_data(int N, int rank);
/// G = <gamma_i^{n_i}>, <gamma_j, Phi(g_i)> = q_ij^{n_i}. Requires n_i | N and
/// m_i | n_j for all i, j where m_i = N / n_i; throws DatumRejected otherwise.
PhiDatum a1_product_phi(int N, const std::vector<int>& n);

}  // namespace dequiv::builders
