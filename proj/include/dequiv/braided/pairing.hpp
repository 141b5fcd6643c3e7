/**
 * @file pairing.hpp
 * @brief Braided central Hopf subalgebras (K, r) of a Hopf algebra H and
 * cointegrals pi: H -> K.
 *
 * Sweedler legs follow the usual convention Delta(h) = h_1 (x) h_2.  The
 * pairing axioms checked are
 *   pairing-mult-left     r(hh', k) = r(h', k_1) r(h, k_2)
 *   pairing-mult-right    r(h, kk') = r(h_1, k) r(h_2, k')
 *   pairing-unit          r(h, 1) = eps(h), r(1, k) = eps(k)
 *   pairing-braided       r(h_1, k_1) k_2 h_2 = h_1 k_1 r(h_2, k_2)
 *   pairing-restriction   r(k, k') = eps(kk')
 */
#pragma once

#include <memory>

#include "dequiv/core/checks.hpp"
#include "dequiv/core/structures.hpp"

namespace dequiv::braided {

using core::CheckOptions;
using core::CheckReport;
using core::CycScalar;
using core::HopfAlgebra;
using core::LinearMap;
using core::SparseVector;
using core::Witness;
using exact::ExactMatrix;

struct SubalgebraEmbedding {
  std::shared_ptr<const HopfAlgebra> H;
  std::shared_ptr<const HopfAlgebra> K;
  LinearMap inclusion;  // K -> H

  SparseVector iota(int k) const { return inclusion.images[k]; }
};

/// Injective, intertwines Delta, eps, m, unit and S, and K is commutative.
CheckReport check_embedding(const SubalgebraEmbedding& e, const CheckOptions& opt = {});

struct BraidedCentralPair {
  SubalgebraEmbedding embedding;
  ExactMatrix r;      // dim H x dim K
  ExactMatrix r_inv;  // r(h, S(k))

  /// r(x, k) for x in H.
  CycScalar pair(const SparseVector& x, int k) const;
};

/// Builds the pair and its inverse r(h, S(k)). Does not check axioms.
BraidedCentralPair make_pair(SubalgebraEmbedding e, ExactMatrix r);

CheckReport check_pairing(const BraidedCentralPair& p, const CheckOptions& opt = {});

/// r(xh, k) = r(hx, k) = eps(x) r(h, k) for x in K; this is what lets r
/// descend to H/K^+H. Families: pairing-absorbs-left, pairing-absorbs-right.
CheckReport check_pairing_absorbs_subalgebra(const BraidedCentralPair& p, const CheckOptions& opt = {});

/// r(h, S(k)), verified as a two-sided convolution inverse of r on H (x) K.
/// Throws core::AxiomFailure if verification fails.
ExactMatrix pairing_inverse(const BraidedCentralPair& p);

/// Convolution product of two forms H (x) K -> k.
ExactMatrix pairing_convolution(const SubalgebraEmbedding& e, const ExactMatrix& f, const ExactMatrix& g);

struct Cointegral {
  SubalgebraEmbedding embedding;
  LinearMap pi;      // H -> K
  LinearMap pi_inv;  // convolution inverse in Hom(H, K)
};

/// Builds pi and its convolution inverse. Throws core::NotInvertible.
Cointegral make_cointegral(SubalgebraEmbedding e, LinearMap pi);

/// Families: k-linear (pi(iota(k) h) = k pi(h)), invertible.
CheckReport check_cointegral(const Cointegral& c, const CheckOptions& opt = {});

/// pi'(h) = pi(h_1) eps(pi^-1(h_2)).
Cointegral normalize_counit(const Cointegral& c);
/// pi'(h) = pi(h) pi(1)^-1. Throws core::NotInvertible if pi(1) is not a unit of K.
Cointegral normalize_unit(const Cointegral& c);
/// normalize_unit then normalize_counit; asserts both normalizations hold.
Cointegral normalize(const Cointegral& c);
bool is_normalized(const Cointegral& c);

}  // namespace dequiv::braided
