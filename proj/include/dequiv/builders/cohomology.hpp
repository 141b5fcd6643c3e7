/**
 * @file cohomology.hpp
 * @brief Grouplike part of a coquasi-bialgebra and brute-force 3-cocycle tools
 * on small finite groups.
 */
#pragma once

#include <optional>
#include <vector>

#include "dequiv/builders/groups.hpp"
#include "dequiv/core/checks.hpp"

namespace dequiv::builders {

/// Group of grouplike basis vectors of Q with omega restricted to it.
struct GrouplikePart {
  FiniteGroup group;
  std::vector<int> basis;          // group element -> Q basis index
  std::vector<CycScalar> omega;    // [(u * n + v) * n + w]
  unsigned conductor = 1;

  int order() const { return group.order; }
  const CycScalar& at(int u, int v, int w) const {
    return omega[(static_cast<size_t>(u) * group.order + v) * group.order + w];
  }
};

/// Throws std::invalid_argument if grouplike basis vectors are not closed
/// under m with coefficient 1.
GrouplikePart grouplike_part(const core::CoquasiBialgebra& q);

/// omega(v,w,x) omega(u,vw,x) omega(u,v,w) = omega(uv,w,x) omega(u,v,wx); also
/// checks normalization. Returns the first failing (u,v,w,x).
std::optional<core::Witness> check_three_cocycle(const GrouplikePart& p);

/// Exhaustive search for a normalized 2-cochain f with values in mu_M and
/// omega(u,v,w) = f(v,w) f(u,vw) / (f(uv,w) f(u,v)). Throws std::length_error
/// if more than `limit` candidates would be enumerated.
std::optional<std::vector<CycScalar>> find_coboundary(const GrouplikePart& p, unsigned root_order,
                                                      long limit = 10'000'000);

/// prod_{i < n} omega(g, g^i, g) for a generator g of a cyclic group; the
/// class of omega is trivial iff this is 1.
CycScalar cyclic_invariant(const GrouplikePart& p, int generator);

}  // namespace dequiv::builders
