/**
 * @file groups.hpp
 * @brief Finite groups, group algebras, coset factorizations and bicharacter
 * pairings for central subgroups.
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dequiv/braided/pairing.hpp"
#include "dequiv/core/structures.hpp"

namespace dequiv::builders {

using core::CycScalar;
using core::HopfAlgebra;

struct FiniteGroup {
  int order = 0;
  std::vector<int> table;  // table[a * order + b] = ab
  int identity = 0;
  std::vector<int> inverse;
  std::vector<std::string> labels;
  /// Set for abelian groups in invariant-factor form; element index is the
  /// mixed-radix encoding of its exponent vector, first factor most significant.
  std::vector<int> factors;

  int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
  int pow(int a, long k) const;
  int element_order(int a) const;
  bool is_abelian() const;

  std::vector<int> exponents(int a) const;
  int from_exponents(const std::vector<long>& e) const;

  static FiniteGroup cyclic(int n, const std::string& gen = "g");
  static FiniteGroup abelian(const std::vector<int>& factors, const std::string& gen = "g");
  /// Dihedral group of order 8, elements r^i s^j at index 4j + i.
  static FiniteGroup dihedral4();
  /// Throws std::invalid_argument unless table is a group with the given identity and inverses.
  static FiniteGroup from_table(int order, std::vector<int> table, std::vector<std::string> labels = {});
  void validate() const;
};

/// A subgroup with its own indexing; element i of the subgroup is
/// `elements[i]` in the ambient group (sorted, identity first).
struct Subgroup {
  FiniteGroup group;
  std::vector<int> elements;
  std::vector<int> index_of;  // ambient index -> subgroup index, or -1

  static Subgroup generated(const FiniteGroup& ambient, const std::vector<int>& generators);
  bool contains(int ambient) const { return index_of[ambient] >= 0; }
};

std::vector<int> center(const FiniteGroup& g);

HopfAlgebra group_algebra(const FiniteGroup& g, unsigned conductor = 1);

/// Factorization gamma = g q with g in a central subgroup and q a coset
/// representative (least ambient index in its coset, identity first).
struct CosetDecomposition {
  const FiniteGroup* gamma = nullptr;
  Subgroup G;
  std::vector<int> reps;       // ambient indices
  std::vector<int> rep_of;     // ambient index -> position in reps
  std::vector<int> g_part;     // ambient index -> ambient index of its G factor
  std::vector<int> dot;        // dot[p * t + q] = position of rep of pq
  std::vector<int> theta;      // theta[p * t + q] = ambient index in G with pq = theta (p.q)

  int count() const { return static_cast<int>(reps.size()); }
  int dot_at(int p, int q) const { return dot[static_cast<size_t>(p) * count() + q]; }
  int theta_at(int p, int q) const { return theta[static_cast<size_t>(p) * count() + q]; }
  /// Quotient group Gamma/G indexed by representative position.
  FiniteGroup quotient_group() const;
};

/// Throws std::invalid_argument if G is not central. Verifies the 2-cocycle
/// identity of theta and throws core::AxiomFailure if it fails.
CosetDecomposition coset_decomposition(const FiniteGroup& gamma, const std::vector<int>& subgroup_generators);

/// r(gamma, g) for gamma in Gamma and g in G, indexed [gamma * |G| + g] with
/// G in subgroup indexing.
using BicharacterTable = std::vector<CycScalar>;

/// Bicharacter of an abelian Gamma determined by r(gamma_k, G generator l) = zeta_N^{e[k][l]}.
BicharacterTable bicharacter_from_generators(const FiniteGroup& gamma, const Subgroup& G,
                                             const std::vector<int>& g_generators, unsigned conductor,
                                             const std::vector<std::vector<long>>& e);

/// Verifies multiplicativity in both arguments and r|GxG = 1 (throws
/// core::AxiomFailure naming the violating pair), then returns the braided
/// central pair (kG, r) in k Gamma.
braided::BraidedCentralPair bicharacter_pair(const FiniteGroup& gamma, const Subgroup& G,
                                             const BicharacterTable& r, unsigned conductor);

/// pi: k Gamma -> kG, gamma = x p |-> x.
braided::Cointegral grouplike_cointegral(const braided::SubalgebraEmbedding& e, const CosetDecomposition& dec);

/// k[Gamma/G] with omega(u, v, w) = r(u~, theta(v~, w~)) and the quasi-antipode
/// S(u) = u^-1, alpha = eps, beta(u) = omega(u, u^-1, u)^-1. Certified before return.
core::CoquasiBialgebra baby_example_closed_form(const CosetDecomposition& dec, const BicharacterTable& r,
                                                unsigned conductor);

}  // namespace dequiv::builders
