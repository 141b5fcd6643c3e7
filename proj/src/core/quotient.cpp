#include "dequiv/core/quotient.hpp"

#include <stdexcept>

namespace dequiv::core {

namespace {

/// Projection onto the lift coordinates of the basis [W basis; lifts].
LinearMap projection(const std::vector<exact::Vector>& wbasis, const std::vector<SparseVector>& lifts, int dim) {
  std::vector<exact::Vector> rows = wbasis;
  for (const auto& l : lifts) rows.push_back(to_dense(l, dim));
  const auto inv = exact::invert(exact::ExactMatrix::from_rows(rows, dim));
  if (!inv) throw std::invalid_argument("quotient lifts do not complement the subspace");
  const int qdim = static_cast<int>(lifts.size());
  const size_t offset = wbasis.size();
  LinearMap nu{dim, qdim, {}};
  for (int i = 0; i < dim; ++i) {
    exact::Vector coords(qdim);
    for (int q = 0; q < qdim; ++q) coords[q] = (*inv)(i, offset + q);
    nu.images.push_back(from_dense(coords));
  }
  return nu;
}

/// (nu (x) nu) Delta(x), keyed a * qdim + b.
SparseVector pushed_coproduct(const Coalgebra& c, const LinearMap& nu, const SparseVector& x) {
  std::vector<Entry> raw;
  for (const auto& e : x)
    for (const auto& t : c.delta[e.index]) {
      const auto& l = nu.images[t.left];
      const auto& r = nu.images[t.right];
      if (l.empty() || r.empty()) continue;
      const CycScalar s = e.value * t.coef;
      for (const auto& a : l)
        for (const auto& b : r) raw.push_back({a.index * nu.target_dim + b.index, s * a.value * b.value});
    }
  return combine(std::move(raw));
}

std::vector<SparseVector> default_lifts(const std::vector<exact::Vector>& wbasis, int dim) {
  std::vector<SparseVector> lifts;
  for (const auto& v : exact::subspace_complement(wbasis, dim)) lifts.push_back(from_dense(v));
  return lifts;
}

}  // namespace

std::optional<Witness> coideal_check(const Coalgebra& c, const std::vector<exact::Vector>& w) {
  const auto wbasis = exact::span_basis(w, c.dim);
  for (size_t i = 0; i < wbasis.size(); ++i) {
    const CycScalar e = c.counit_of(from_dense(wbasis[i]));
    if (!e.is_zero()) return Witness{"coideal", {static_cast<int>(i)}, "counit", e, CycScalar()};
  }
  const auto nu = projection(wbasis, default_lifts(wbasis, c.dim), c.dim);
  for (size_t i = 0; i < wbasis.size(); ++i) {
    const auto image = pushed_coproduct(c, nu, from_dense(wbasis[i]));
    if (!image.empty())
      return Witness{"coideal", {static_cast<int>(i)}, "coproduct leaves W(x)C + C(x)W", image.front().value,
                     CycScalar()};
  }
  return std::nullopt;
}

QuotientCoalgebra quotient_coalgebra(const Coalgebra& c, const std::vector<exact::Vector>& w,
                                     const std::optional<std::vector<SparseVector>>& lifts) {
  if (auto bad = coideal_check(c, w)) throw AxiomFailure(*bad);
  QuotientCoalgebra out;
  out.kernel_basis = exact::span_basis(w, c.dim);
  auto chosen = lifts ? *lifts : default_lifts(out.kernel_basis, c.dim);
  if (chosen.size() + out.kernel_basis.size() != static_cast<size_t>(c.dim))
    throw std::invalid_argument("quotient lifts have the wrong count");
  out.nu = projection(out.kernel_basis, chosen, c.dim);
  const int qdim = static_cast<int>(chosen.size());
  out.lift = LinearMap{qdim, c.dim, chosen};

  Coalgebra& q = out.q;
  q.dim = qdim;
  q.conductor = c.conductor;
  q.delta.resize(qdim);
  q.counit.resize(qdim);
  for (int i = 0; i < qdim; ++i) {
    const auto& l = chosen[i];
    if (l.size() == 1 && l[0].value.is_one() && static_cast<size_t>(l[0].index) < c.labels.size())
      q.labels.push_back(c.labels[l[0].index]);
    else
      q.labels.push_back("q" + std::to_string(i));
    for (const auto& e : pushed_coproduct(c, out.nu, l))
      q.delta[i].push_back({e.index / qdim, e.index % qdim, e.value});
    q.counit[i] = c.counit_of(l);
  }

  // Self-tests: Q is a coalgebra and nu is a coalgebra map.
  const auto report = check_coassoc(q, {.threads = 1});
  if (!report.ok()) throw AxiomFailure(*report.witness());
  for (int i = 0; i < c.dim; ++i) {
    std::vector<Entry> lhs;
    for (const auto& e : out.nu.images[i])
      for (const auto& t : q.delta[e.index]) lhs.push_back({t.left * qdim + t.right, e.value * t.coef});
    const auto rhs = pushed_coproduct(c, out.nu, basis_vector(i));
    if (combine(std::move(lhs)) != rhs)
      throw AxiomFailure(Witness{"quotient-coalgebra-map", {i}, "Delta_Q nu != (nu (x) nu) Delta", {}, {}});
    if (!(q.counit_of(out.nu.images[i]) == c.counit[i]))
      throw AxiomFailure(Witness{"quotient-coalgebra-map", {i}, "eps_Q nu != eps", {}, {}});
  }
  return out;
}

}  // namespace dequiv::core
