#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dequiv/exact/cyclotomic.hpp"

namespace dequiv::exact {

using Vector = std::vector<CycScalar>;

/// Dense row-major matrix over a cyclotomic field. Zero entries are cheap
/// (no allocation), so sparse-in-practice matrices cost little.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix identity(size_t n);
  static ExactMatrix from_rows(const std::vector<Vector>& rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  CycScalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const CycScalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::span<CycScalar> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const CycScalar> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }

  ExactMatrix transpose() const;
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  bool is_zero() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<CycScalar> data_;
};

struct RowReduction {
  ExactMatrix reduced;
  std::vector<size_t> pivots;  // pivot column of each nonzero row, increasing
  size_t rank = 0;
};

/// Reduced row-echelon form. Pivot choice is deterministic: columns are
/// scanned left to right and the lowest-index row with a nonzero entry wins.
RowReduction row_reduce(ExactMatrix m);

/// Basis of {x : M x = 0}, one vector per free column (free entry set to 1).
std::vector<Vector> kernel_basis(const ExactMatrix& m);

/// Complement of span(vectors) in k^ambient, chosen as the standard basis
/// vectors of the non-pivot columns after row-reducing the span.
std::vector<Vector> subspace_complement(const std::vector<Vector>& span, size_t ambient);

/// Row-reduced basis of span(vectors).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, size_t ambient);

struct SolveResult {
  enum class Status { unique, multiple, inconsistent };
  Status status = Status::inconsistent;
  Vector solution;  // a particular solution unless inconsistent
  bool solvable() const { return status != Status::inconsistent; }
};

/// Solves M x = b. Dimension mismatch throws std::invalid_argument;
/// inconsistency is reported through the status.
SolveResult linear_solve(const ExactMatrix& m, std::span<const CycScalar> b);

/// Inverse of a square matrix, or std::nullopt when singular.
std::optional<ExactMatrix> invert(const ExactMatrix& m);

size_t rank(const ExactMatrix& m);

}  // namespace dequiv::exact
