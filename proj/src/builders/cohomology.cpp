#include "dequiv/builders/cohomology.hpp"

#include <cmath>
#include <stdexcept>

#include "dequiv/exact/cyclotomic.hpp"

namespace dequiv::builders {

GrouplikePart grouplike_part(const core::CoquasiBialgebra& q) {
  GrouplikePart p;
  p.conductor = q.conductor();
  std::vector<int> position(q.dim(), -1);
  for (int i = 0; i < q.dim(); ++i)
    if (q.coalgebra.is_grouplike(i)) {
      position[i] = static_cast<int>(p.basis.size());
      p.basis.push_back(i);
    }
  const int n = static_cast<int>(p.basis.size());
  if (n == 0) throw std::invalid_argument("no grouplike basis vectors");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& prod = q.algebra.product(p.basis[a], p.basis[b]);
      if (prod.size() != 1 || position[prod[0].index] < 0 || !prod[0].value.is_one())
        throw std::invalid_argument("grouplike basis vectors are not closed under multiplication");
      table[static_cast<size_t>(a) * n + b] = position[prod[0].index];
    }
  std::vector<std::string> labels;
  for (int i : p.basis) labels.push_back(q.coalgebra.labels.empty() ? "e" + std::to_string(i) : q.coalgebra.labels[i]);
  p.group = FiniteGroup::from_table(n, std::move(table), std::move(labels));
  p.omega.resize(static_cast<size_t>(n) * n * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        p.omega[(static_cast<size_t>(u) * n + v) * n + w] = q.omega.at(p.basis[u], p.basis[v], p.basis[w]);
  return p;
}

std::optional<core::Witness> check_three_cocycle(const GrouplikePart& p) {
  const auto& g = p.group;
  const int n = g.order;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (!p.at(u, g.identity, v).is_one())
        return core::Witness{"normalized", {u, g.identity, v}, "omega(u, 1, v) != 1", p.at(u, g.identity, v), 1};
      for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x) {
          const CycScalar lhs = p.at(v, w, x) * p.at(u, g.mul(v, w), x) * p.at(u, v, w);
          const CycScalar rhs = p.at(g.mul(u, v), w, x) * p.at(u, v, g.mul(w, x));
          if (!(lhs == rhs)) return core::Witness{"three-cocycle", {u, v, w, x}, "", lhs, rhs};
        }
    }
  return std::nullopt;
}

std::optional<std::vector<CycScalar>> find_coboundary(const GrouplikePart& p, unsigned root_order, long limit) {
  const auto& g = p.group;
  const int n = g.order;
  const long M = root_order;
  // omega as exponents of zeta_M; a value outside mu_M cannot be a coboundary here.
  std::vector<long> e(p.omega.size());
  const CycScalar z = exact::cyc_root(static_cast<unsigned>(M), 1);
  for (size_t i = 0; i < p.omega.size(); ++i) {
    const long ord = exact::root_of_unity_order(p.omega[i]);
    if (ord == 0 || M % ord != 0) return std::nullopt;
    CycScalar acc(1);
    long k = 0;
    while (!(acc == p.omega[i])) {
      acc *= z;
      ++k;
    }
    e[i] = k;
  }
  std::vector<std::pair<int, int>> free;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != g.identity && v != g.identity) free.emplace_back(u, v);
  if (static_cast<double>(free.size()) * std::log(static_cast<double>(M)) > std::log(static_cast<double>(limit)))
    throw std::length_error("coboundary search space exceeds the limit");
  std::vector<long> f(static_cast<size_t>(n) * n, 0);
  auto F = [&](int u, int v) { return f[static_cast<size_t>(u) * n + v]; };
  while (true) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        for (int w = 0; w < n && ok; ++w) {
          const long d = F(v, w) + F(u, g.mul(v, w)) - F(g.mul(u, v), w) - F(u, v);
          ok = ((d - e[(static_cast<size_t>(u) * n + v) * n + w]) % M + M) % M == 0;
        }
    if (ok) {
      std::vector<CycScalar> out;
      for (long x : f) out.push_back(exact::cyc_root(static_cast<unsigned>(M), x));
      return out;
    }
    size_t i = 0;
    for (; i < free.size(); ++i) {
      auto& slot = f[static_cast<size_t>(free[i].first) * n + free[i].second];
      if (++slot < M) break;
      slot = 0;
    }
    if (i == free.size()) return std::nullopt;
  }
}

CycScalar cyclic_invariant(const GrouplikePart& p, int generator) {
  const auto& g = p.group;
  if (g.element_order(generator) != g.order) throw std::invalid_argument("element does not generate the group");
  CycScalar acc(1);
  int power = g.identity;
  for (int i = 0; i < g.order; ++i) {
    acc *= p.at(generator, power, generator);
    power = g.mul(power, generator);
  }
  return acc;
}

}  // namespace dequiv::builders
