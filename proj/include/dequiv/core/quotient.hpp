#pragma once

#include <optional>
#include <vector>

#include "dequiv/core/checks.hpp"
#include "dequiv/core/structures.hpp"

namespace dequiv::core {

/// eps(W) = 0 and Delta(W) in W (x) C + C (x) W. W is given by spanning vectors.
std::optional<Witness> coideal_check(const Coalgebra& c, const std::vector<exact::Vector>& w);

struct QuotientCoalgebra {
  Coalgebra q;
  LinearMap nu;    // C -> Q
  LinearMap lift;  // Q -> C, nu after lift = id
  std::vector<exact::Vector> kernel_basis;  // row-reduced basis of W
};

/// C/W with basis given by `lifts` (images in C of the quotient basis) or,
/// when absent, by the non-pivot standard vectors of W. Throws AxiomFailure
/// when W is not a coideal and std::invalid_argument when the lifts do not
/// complement W.
QuotientCoalgebra quotient_coalgebra(const Coalgebra& c, const std::vector<exact::Vector>& w,
                                     const std::optional<std::vector<SparseVector>>& lifts = std::nullopt);

}  // namespace dequiv::core
