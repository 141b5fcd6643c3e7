#pragma once

#include <span>
#include <vector>

#include "dequiv/exact/cyclotomic.hpp"
#include "dequiv/exact/matrix.hpp"

namespace dequiv::core {

using exact::CycScalar;

struct Entry {
  int index;
  CycScalar value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Coordinates sorted by index, zero entries omitted.
using SparseVector = std::vector<Entry>;

SparseVector basis_vector(int index, CycScalar coef = CycScalar(1));
SparseVector from_dense(std::span<const CycScalar> dense);
exact::Vector to_dense(const SparseVector& v, int dim);
SparseVector scaled(const SparseVector& v, const CycScalar& s);
SparseVector add(const SparseVector& a, const SparseVector& b);
SparseVector subtract(const SparseVector& a, const SparseVector& b);
/// Sorts raw coordinates, merges duplicate indices and drops zeros.
SparseVector combine(std::vector<Entry> raw);

/// Coefficient of e_index (zero if absent).
CycScalar coefficient(const SparseVector& v, int index);

/// Dense scratch space that hands back sparse results; reusable across calls.
class Accumulator {
 public:
  explicit Accumulator(int dim) : slots_(dim), mark_(dim, 0) {}

  void add(int index, const CycScalar& value);
  void add_product(int index, const CycScalar& a, const CycScalar& b);
  void add_scaled(const SparseVector& v, const CycScalar& s);
  /// Returns the accumulated vector and resets to zero.
  SparseVector take();

 private:
  void touch(int index);

  std::vector<CycScalar> slots_;
  std::vector<char> mark_;
  std::vector<int> touched_;
};

}  // namespace dequiv::core
