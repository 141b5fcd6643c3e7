#include "dequiv/core/convolution.hpp"

namespace dequiv::core {

TensorCoalgebra::TensorCoalgebra(std::vector<const Coalgebra*> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("TensorCoalgebra needs at least one factor");
  dim = 1;
  for (const auto* f : factors_) dim *= f->dim;
}

std::vector<int> TensorCoalgebra::split(int index) const {
  std::vector<int> parts(factors_.size());
  for (size_t k = factors_.size(); k-- > 0;) {
    parts[k] = index % factors_[k]->dim;
    index /= factors_[k]->dim;
  }
  return parts;
}

CycScalar TensorCoalgebra::counit_at(int index) const {
  const auto parts = split(index);
  CycScalar e(1);
  for (size_t k = 0; k < parts.size(); ++k) {
    const auto& c = factors_[k]->counit[parts[k]];
    if (c.is_zero()) return {};
    e *= c;
  }
  return e;
}

bool TensorCoalgebra::is_grouplike(int index) const {
  const auto parts = split(index);
  for (size_t k = 0; k < parts.size(); ++k)
    if (!factors_[k]->is_grouplike(parts[k])) return false;
  return true;
}

std::optional<SparseVector> algebra_inverse(const Algebra& a, const SparseVector& x) {
  if (x.empty()) return std::nullopt;
  ExactMatrix left(a.dim, a.dim);  // column j = x e_j
  for (int j = 0; j < a.dim; ++j)
    for (const auto& e : a.multiply(x, basis_vector(j))) left(e.index, j) = e.value;
  const auto sol = exact::linear_solve(left, to_dense(a.unit, a.dim));
  if (sol.status != exact::SolveResult::Status::unique) return std::nullopt;
  auto y = from_dense(sol.solution);
  if (a.multiply(y, x) != a.unit) return std::nullopt;
  return y;
}

}  // namespace dequiv::core
