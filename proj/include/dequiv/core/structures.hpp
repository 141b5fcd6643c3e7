/**
 * @file structures.hpp
 * @brief Structure-constant representations of coalgebras, algebras, Hopf
 * algebras and coquasi-bialgebras over a cyclotomic field.
 *
 * Coproducts and products are sparse coordinate lists; associators are
 * dense d^3 arrays.  Linear maps store the image of each basis vector.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dequiv/core/sparse.hpp"
#include "dequiv/exact/matrix.hpp"

namespace dequiv::core {

struct CoproductTerm {
  int left;
  int right;
  CycScalar coef;
};

struct Coalgebra {
  int dim = 0;
  unsigned conductor = 1;
  std::vector<std::string> labels;
  std::vector<std::vector<CoproductTerm>> delta;  // delta[i] = Delta(e_i)
  std::vector<CycScalar> counit;

  const CycScalar& counit_at(int i) const { return counit[i]; }
  CycScalar counit_of(const SparseVector& v) const;
  template <class Fn>
  void for_each_term(int i, Fn&& fn) const {
    for (const auto& t : delta[i]) fn(t.left, t.right, t.coef);
  }
  /// Delta(e_i) = e_i (x) e_i and eps(e_i) = 1.
  bool is_grouplike(int i) const;
  /// Terms of (Delta (x) id) Delta(e_i) as (a, b, c, coef), duplicates merged.
  struct Term3 {
    int a, b, c;
    CycScalar coef;
  };
  std::vector<Term3> iterated_coproduct(int i) const;
};

struct Algebra {
  int dim = 0;
  std::vector<SparseVector> mult;  // mult[i * dim + j] = e_i e_j
  SparseVector unit;

  const SparseVector& product(int i, int j) const { return mult[static_cast<size_t>(i) * dim + j]; }
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  /// The ground field as a one-dimensional algebra.
  static Algebra field();
};

struct LinearMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<SparseVector> images;  // images[i] = f(e_i)

  SparseVector apply(const SparseVector& v) const;
  SparseVector apply(int i) const { return images[i]; }
  static LinearMap identity(int n);
  static LinearMap from_matrix(const exact::ExactMatrix& m);  // row i = f(e_i)
  exact::ExactMatrix to_matrix() const;
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// g after f.
LinearMap compose(const LinearMap& g, const LinearMap& f);

struct HopfAlgebra {
  Coalgebra coalgebra;
  Algebra algebra;
  LinearMap antipode;

  int dim() const { return coalgebra.dim; }
  unsigned conductor() const { return coalgebra.conductor; }
  const std::vector<std::string>& labels() const { return coalgebra.labels; }
};

/// Dense trilinear form on a d-dimensional space.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int dim) : dim_(dim), data_(static_cast<size_t>(dim) * dim * dim) {}

  int dim() const { return dim_; }
  CycScalar& at(int a, int b, int c) { return data_[index(a, b, c)]; }
  const CycScalar& at(int a, int b, int c) const { return data_[index(a, b, c)]; }
  size_t index(int a, int b, int c) const {
    return (static_cast<size_t>(a) * dim_ + b) * dim_ + c;
  }
  const std::vector<CycScalar>& data() const { return data_; }
  std::vector<CycScalar>& data() { return data_; }

  CycScalar evaluate(const SparseVector& x, const SparseVector& y, const SparseVector& z) const;
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  int dim_ = 0;
  std::vector<CycScalar> data_;
};

/// eps (x) eps (x) eps.
Tensor3 trivial_associator(const Coalgebra& c);

struct QuasiAntipode {
  LinearMap antipode;
  std::vector<CycScalar> alpha;
  std::vector<CycScalar> beta;
};

struct CoquasiBialgebra {
  Coalgebra coalgebra;
  Algebra algebra;
  Tensor3 omega;
  Tensor3 omega_inv;
  std::optional<QuasiAntipode> quasi_antipode;

  int dim() const { return coalgebra.dim; }
  unsigned conductor() const { return coalgebra.conductor; }
  bool has_trivial_associator() const;
};

class NotInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Assembles a coquasi-bialgebra and precomputes the convolution inverse of
/// omega. Throws NotInvertible when omega has none.
CoquasiBialgebra make_coquasi(Coalgebra coalgebra, Algebra algebra, Tensor3 omega,
                              std::optional<QuasiAntipode> quasi_antipode = std::nullopt);

/// A Hopf algebra seen as a coquasi-bialgebra with trivial associator and
/// quasi-antipode (S, eps, eps).
CoquasiBialgebra as_coquasi(const HopfAlgebra& h);

}  // namespace dequiv::core
