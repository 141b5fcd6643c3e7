#include "dequiv/exact/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace dequiv::exact {

ExactMatrix ExactMatrix::identity(size_t n) {
  ExactMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = CycScalar(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vector>& rows, size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
    for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  ExactMatrix out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const CycScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j).add_product(aik, b(k, j));
    }
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

RowReduction row_reduce(ExactMatrix m) {
  RowReduction out;
  size_t lead = 0;
  for (size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead)
      for (size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead, c));
    const CycScalar inv = m(lead, col).inverse();
    for (size_t c = col; c < m.cols(); ++c)
      if (!m(lead, c).is_zero()) m(lead, c) = m(lead, c) * inv;
    // indices of nonzero entries in the pivot row, reused for every elimination
    std::vector<size_t> support;
    for (size_t c = col; c < m.cols(); ++c)
      if (!m(lead, c).is_zero()) support.push_back(c);
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      const CycScalar factor = -m(r, col);
      for (size_t c : support) m(r, c).add_product(factor, m(lead, c));
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(m);
  return out;
}

size_t rank(const ExactMatrix& m) { return row_reduce(m).rank; }

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  const auto rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = CycScalar(1);
    for (size_t r = 0; r < rr.rank; ++r) {
      const auto& e = rr.reduced(r, free);
      if (!e.is_zero()) v[rr.pivots[r]] = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, size_t ambient) {
  if (vectors.empty()) return {};
  const auto rr = row_reduce(ExactMatrix::from_rows(vectors, ambient));
  std::vector<Vector> basis;
  for (size_t r = 0; r < rr.rank; ++r) {
    auto row = rr.reduced.row(r);
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

std::vector<Vector> subspace_complement(const std::vector<Vector>& span, size_t ambient) {
  std::vector<bool> is_pivot(ambient, false);
  if (!span.empty()) {
    const auto rr = row_reduce(ExactMatrix::from_rows(span, ambient));
    for (size_t p : rr.pivots) is_pivot[p] = true;
  }
  std::vector<Vector> basis;
  for (size_t c = 0; c < ambient; ++c) {
    if (is_pivot[c]) continue;
    Vector v(ambient);
    v[c] = CycScalar(1);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult linear_solve(const ExactMatrix& m, std::span<const CycScalar> b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("linear_solve: right-hand side has length " + std::to_string(b.size()) +
                                ", matrix has " + std::to_string(m.rows()) + " rows");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto rr = row_reduce(std::move(aug));
  SolveResult out;
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) {
    out.status = SolveResult::Status::inconsistent;
    return out;
  }
  out.solution.assign(m.cols(), CycScalar());
  for (size_t r = 0; r < rr.rank; ++r) out.solution[rr.pivots[r]] = rr.reduced(r, m.cols());
  out.status = rr.rank == m.cols() ? SolveResult::Status::unique : SolveResult::Status::multiple;
  return out;
}

std::optional<ExactMatrix> invert(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix is not square");
  const size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = CycScalar(1);
  }
  const auto rr = row_reduce(std::move(aug));
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
  return inv;
}

}  // namespace dequiv::exact
