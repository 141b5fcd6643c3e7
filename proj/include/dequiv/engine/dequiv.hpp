/**
 * @file dequiv.hpp
 * @brief De-equivariantization: from (H, K, r, pi) build the coquasi-bialgebra
 * Q = H/K^+H and certify it.
 *
 * With j(q) = pi^-1(l(q)_1) l(q)_2 for a lift l(q) of q,
 *   m(a, b)     = nu(j(a_1) j(b)_1) r(a_2, pi(j(b)_2))
 *   omega(a,b,c) = r(a, pi(j(b)_1 j(c)_1)) r(j(b)_2, pi(j(c)_2))
 *   unit       = nu(1_H)
 * where r on Q (x) K is induced from r on H (x) K.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "dequiv/braided/pairing.hpp"
#include "dequiv/core/checks.hpp"
#include "dequiv/core/quotient.hpp"
#include "dequiv/core/structures.hpp"

namespace dequiv::engine {

using braided::BraidedCentralPair;
using braided::Cointegral;
using braided::SubalgebraEmbedding;
using core::Algebra;
using core::CheckOptions;
using core::CheckReport;
using core::CoquasiBialgebra;
using core::LinearMap;
using core::QuotientCoalgebra;
using core::SparseVector;
using core::Tensor3;
using exact::ExactMatrix;

/// Span of (iota(k) - eps(k) 1) h over basis k of K and h of H, row-reduced.
/// Throws core::AxiomFailure if it is not a coideal.
std::vector<exact::Vector> kplus_h_subspace(const SubalgebraEmbedding& e);

/// j(q) = iota(pi^-1(l(q)_1)) l(q)_2 for the quotient's lifts. Verifies
/// nu(j(q)) = q and that a second lift (shifted by kernel vectors) gives the
/// same j; throws core::AxiomFailure otherwise.
LinearMap build_section(const Cointegral& c, const QuotientCoalgebra& quotient);

/// r on Q (x) K via lifts, with r(w, k) = 0 asserted for w in K^+H.
ExactMatrix induced_pairing(const BraidedCentralPair& p, const QuotientCoalgebra& quotient);

Algebra dequiv_multiplication(const BraidedCentralPair& p, const Cointegral& c, const QuotientCoalgebra& quotient,
                              const LinearMap& j, const ExactMatrix& r_bar);

Tensor3 dequiv_associator(const BraidedCentralPair& p, const Cointegral& c, const LinearMap& j,
                          const ExactMatrix& r_bar, int qdim);

struct DequivOptions {
  CheckOptions check;
  /// Distinguished lifts of the quotient basis (e.g. coset representative
  /// times PBW monomial). Defaults to the complement of K^+H.
  std::optional<std::vector<SparseVector>> lifts;
  /// Re-run the Hopf, embedding, pairing and cointegral checks on the inputs.
  bool check_inputs = true;
};

struct DequivResult {
  CoquasiBialgebra Q;
  LinearMap nu;   // H -> Q
  LinearMap j;    // Q -> H
  ExactMatrix r_bar;
  std::vector<exact::Vector> kplus_h;
  CheckReport input_checks;
  CheckReport certification;
  bool hopf = false;  // omega = eps (x) eps (x) eps
  bool free = false;  // dim Q * dim K = dim H
};

/// Upstream check failure: carries the full report of the failed stage.
class InputRejected : public std::runtime_error {
 public:
  InputRejected(std::string stage, CheckReport report);
  const std::string& stage() const { return stage_; }
  const CheckReport& report() const { return report_; }

 private:
  std::string stage_;
  CheckReport report_;
};

/// The assembled Q failed its own certification.
class EngineInconsistency : public std::runtime_error {
 public:
  explicit EngineInconsistency(CheckReport report);
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

/// Runs the whole construction. Never returns an uncertified Q.
DequivResult de_equivariantize(const BraidedCentralPair& p, const Cointegral& c, const DequivOptions& opt = {});

}  // namespace dequiv::engine
