#include "dequiv/core/structures.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "dequiv/core/convolution.hpp"

namespace dequiv::core {

CycScalar Coalgebra::counit_of(const SparseVector& v) const {
  CycScalar out;
  for (const auto& e : v) out.add_product(e.value, counit[e.index]);
  return out;
}

bool Coalgebra::is_grouplike(int i) const {
  const auto& d = delta[i];
  return d.size() == 1 && d[0].left == i && d[0].right == i && d[0].coef.is_one() &&
         counit[i].is_one();
}

std::vector<Coalgebra::Term3> Coalgebra::iterated_coproduct(int i) const {
  std::map<std::tuple<int, int, int>, CycScalar> acc;
  for (const auto& t : delta[i])
    for (const auto& u : delta[t.left]) acc[{u.left, u.right, t.right}].add_product(t.coef, u.coef);
  std::vector<Term3> out;
  for (auto& [k, v] : acc)
    if (!v.is_zero()) out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), std::move(v)});
  return out;
}

SparseVector Algebra::multiply(const SparseVector& a, const SparseVector& b) const {
  std::vector<Entry> raw;
  for (const auto& x : a)
    for (const auto& y : b) {
      const auto& p = product(x.index, y.index);
      if (p.empty()) continue;
      const CycScalar s = x.value * y.value;
      for (const auto& z : p) raw.push_back({z.index, z.value * s});
    }
  return combine(std::move(raw));
}

Algebra Algebra::field() {
  Algebra k;
  k.dim = 1;
  k.mult = {basis_vector(0)};
  k.unit = basis_vector(0);
  return k;
}

SparseVector LinearMap::apply(const SparseVector& v) const {
  Accumulator acc(target_dim);
  for (const auto& e : v) acc.add_scaled(images[e.index], e.value);
  return acc.take();
}

LinearMap LinearMap::identity(int n) {
  LinearMap m{n, n, {}};
  for (int i = 0; i < n; ++i) m.images.push_back(basis_vector(i));
  return m;
}

LinearMap LinearMap::from_matrix(const exact::ExactMatrix& m) {
  LinearMap f{static_cast<int>(m.rows()), static_cast<int>(m.cols()), {}};
  for (size_t r = 0; r < m.rows(); ++r) f.images.push_back(from_dense(m.row(r)));
  return f;
}

exact::ExactMatrix LinearMap::to_matrix() const {
  exact::ExactMatrix m(source_dim, target_dim);
  for (int i = 0; i < source_dim; ++i)
    for (const auto& e : images[i]) m(i, e.index) = e.value;
  return m;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.target_dim != g.source_dim) throw std::invalid_argument("compose: dimension mismatch");
  LinearMap out{f.source_dim, g.target_dim, {}};
  for (const auto& img : f.images) out.images.push_back(g.apply(img));
  return out;
}

CycScalar Tensor3::evaluate(const SparseVector& x, const SparseVector& y, const SparseVector& z) const {
  CycScalar out;
  for (const auto& a : x)
    for (const auto& b : y) {
      const CycScalar ab = a.value * b.value;
      for (const auto& c : z) {
        const CycScalar& w = at(a.index, b.index, c.index);
        if (!w.is_zero()) out.add_product(ab * c.value, w);
      }
    }
  return out;
}

Tensor3 trivial_associator(const Coalgebra& c) {
  Tensor3 t(c.dim);
  for (int a = 0; a < c.dim; ++a) {
    if (c.counit[a].is_zero()) continue;
    for (int b = 0; b < c.dim; ++b) {
      if (c.counit[b].is_zero()) continue;
      const CycScalar ab = c.counit[a] * c.counit[b];
      for (int d = 0; d < c.dim; ++d)
        if (!c.counit[d].is_zero()) t.at(a, b, d) = ab * c.counit[d];
    }
  }
  return t;
}

bool CoquasiBialgebra::has_trivial_associator() const { return omega == trivial_associator(coalgebra); }

CoquasiBialgebra make_coquasi(Coalgebra coalgebra, Algebra algebra, Tensor3 omega,
                              std::optional<QuasiAntipode> quasi_antipode) {
  if (omega.dim() != coalgebra.dim || algebra.dim != coalgebra.dim)
    throw std::invalid_argument("make_coquasi: dimension mismatch");
  CoquasiBialgebra q;
  TensorCoalgebra cube({&coalgebra, &coalgebra, &coalgebra});
  auto inv = functional_inverse(cube, omega.data());
  if (!inv) throw NotInvertible("associator is not convolution invertible");
  q.omega_inv = Tensor3(coalgebra.dim);
  q.omega_inv.data() = std::move(*inv);
  q.coalgebra = std::move(coalgebra);
  q.algebra = std::move(algebra);
  q.omega = std::move(omega);
  q.quasi_antipode = std::move(quasi_antipode);
  return q;
}

CoquasiBialgebra as_coquasi(const HopfAlgebra& h) {
  QuasiAntipode qa{h.antipode, h.coalgebra.counit, h.coalgebra.counit};
  return make_coquasi(h.coalgebra, h.algebra, trivial_associator(h.coalgebra), std::move(qa));
}

}  // namespace dequiv::core
