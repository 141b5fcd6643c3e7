/**
 * @file convolution.hpp
 * @brief Convolution algebras Hom(C, A) for a finite-dimensional coalgebra C
 * and an algebra A given by structure constants.
 *
 * Maps C -> A are ExactMatrix values with one row per basis vector of C.
 * Field-valued functionals on large tensor-power coalgebras use plain
 * coefficient vectors instead.
 */
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dequiv/core/structures.hpp"
#include "dequiv/exact/matrix.hpp"

namespace dequiv::core {

using exact::ExactMatrix;

/// Product of per-factor coproduct coefficients, multiplied out on first use.
class LazyCoef {
 public:
  LazyCoef(const CoproductTerm* const* terms, size_t n) : terms_(terms), n_(n) {}
  const CycScalar& get() const {
    if (!value_) {
      CycScalar v(1);
      for (size_t i = 0; i < n_; ++i)
        if (!terms_[i]->coef.is_one()) v = v * terms_[i]->coef;
      value_ = std::move(v);
    }
    return *value_;
  }

 private:
  const CoproductTerm* const* terms_;
  size_t n_;
  mutable std::optional<CycScalar> value_;
};

inline const CycScalar& coef_of(const CycScalar& c) { return c; }
inline const CycScalar& coef_of(const LazyCoef& c) { return c.get(); }

/// C_1 (x) ... (x) C_n with the tensor-product coalgebra structure, computed
/// on demand. Basis indices are mixed-radix with the first factor most
/// significant, matching Tensor3 indexing.
class TensorCoalgebra {
 public:
  explicit TensorCoalgebra(std::vector<const Coalgebra*> factors);

  int dim = 0;

  std::vector<int> split(int index) const;
  CycScalar counit_at(int index) const;
  bool is_grouplike(int index) const;

  /// Calls fn(left, right, coef) per term; coef is a LazyCoef.
  template <class Fn>
  void for_each_term(int index, Fn&& fn) const {
    const auto parts = split(index);
    std::vector<const CoproductTerm*> chosen(factors_.size());
    visit(parts, 0, 0, 0, chosen, fn);
  }

 private:
  template <class Fn>
  void visit(const std::vector<int>& parts, size_t k, int left, int right, std::vector<const CoproductTerm*>& chosen,
             Fn& fn) const {
    if (k == factors_.size()) {
      fn(left, right, LazyCoef(chosen.data(), chosen.size()));
      return;
    }
    const int d = factors_[k]->dim;
    for (const auto& t : factors_[k]->delta[parts[k]]) {
      chosen[k] = &t;
      visit(parts, k + 1, left * d + t.left, right * d + t.right, chosen, fn);
    }
  }

  std::vector<const Coalgebra*> factors_;
};

/// f * g for field-valued functionals.
template <class C>
std::vector<CycScalar> convolve(const C& coalg, std::span<const CycScalar> f, std::span<const CycScalar> g) {
  if (f.size() != static_cast<size_t>(coalg.dim) || g.size() != f.size())
    throw std::invalid_argument("convolve: functional length does not match the coalgebra");
  std::vector<CycScalar> out(coalg.dim);
  for (int c = 0; c < coalg.dim; ++c) {
    CycScalar acc;
    coalg.for_each_term(c, [&](int a, int b, const auto& coef) {
      if (f[a].is_zero() || g[b].is_zero()) return;
      acc.add_product(coef_of(coef), f[a] * g[b]);
    });
    out[c] = std::move(acc);
  }
  return out;
}

template <class C>
std::vector<CycScalar> counit_functional(const C& coalg) {
  std::vector<CycScalar> e(coalg.dim);
  for (int c = 0; c < coalg.dim; ++c) e[c] = coalg.counit_at(c);
  return e;
}

/// Unit u∘eps of Hom(C, A).
template <class C>
ExactMatrix convolution_unit(const C& coalg, const Algebra& target) {
  ExactMatrix u(coalg.dim, target.dim);
  for (int c = 0; c < coalg.dim; ++c) {
    const CycScalar e = coalg.counit_at(c);
    if (e.is_zero()) continue;
    for (const auto& t : target.unit) u(c, t.index) = e * t.value;
  }
  return u;
}

/// (f * g)(c) = f(c_1) g(c_2).
template <class C>
ExactMatrix convolution_product(const C& coalg, const Algebra& target, const ExactMatrix& f,
                                const ExactMatrix& g) {
  const size_t rows = coalg.dim, cols = target.dim;
  if (f.rows() != rows || g.rows() != rows || f.cols() != cols || g.cols() != cols)
    throw std::invalid_argument("convolution_product: maps do not share source and target");
  ExactMatrix out(rows, cols);
  for (int c = 0; c < coalg.dim; ++c) {
    coalg.for_each_term(c, [&](int a, int b, const auto& coef) {
      for (size_t s = 0; s < cols; ++s) {
        if (f(a, s).is_zero()) continue;
        const CycScalar fs = coef_of(coef) * f(a, s);
        for (size_t u = 0; u < cols; ++u) {
          if (g(b, u).is_zero()) continue;
          const CycScalar w = fs * g(b, u);
          for (const auto& e : target.product(static_cast<int>(s), static_cast<int>(u)))
            out(c, e.index).add_product(w, e.value);
        }
      }
    });
  }
  return out;
}

/// Convolution inverse by an exact linear solve of f * g = u∘eps, with both
/// f * g and g * f re-verified. std::nullopt when f is not invertible.
template <class C>
std::optional<ExactMatrix> convolution_inverse(const C& coalg, const Algebra& target, const ExactMatrix& f) {
  const size_t rows = coalg.dim, cols = target.dim;
  if (f.rows() != rows || f.cols() != cols)
    throw std::invalid_argument("convolution_inverse: map does not match source and target");
  const size_t n = rows * cols;
  ExactMatrix system(n, n);
  for (int c = 0; c < coalg.dim; ++c) {
    coalg.for_each_term(c, [&](int a, int b, const auto& coef) {
      for (size_t s = 0; s < cols; ++s) {
        if (f(a, s).is_zero()) continue;
        const CycScalar fs = coef_of(coef) * f(a, s);
        for (size_t u = 0; u < cols; ++u)
          for (const auto& e : target.product(static_cast<int>(s), static_cast<int>(u)))
            system(c * cols + e.index, b * cols + u).add_product(fs, e.value);
      }
    });
  }
  const ExactMatrix unit = convolution_unit(coalg, target);
  exact::Vector rhs(n);
  for (size_t c = 0; c < rows; ++c)
    for (size_t t = 0; t < cols; ++t) rhs[c * cols + t] = unit(c, t);
  const auto solved = exact::linear_solve(system, rhs);
  if (solved.status != exact::SolveResult::Status::unique) return std::nullopt;
  ExactMatrix g(rows, cols);
  for (size_t i = 0; i < n; ++i) g(i / cols, i % cols) = solved.solution[i];
  if (!(convolution_product(coalg, target, f, g) == unit)) return std::nullopt;
  if (!(convolution_product(coalg, target, g, f) == unit)) return std::nullopt;
  return g;
}

/// Two-sided inverse of a in A, or std::nullopt.
std::optional<SparseVector> algebra_inverse(const Algebra& a, const SparseVector& x);

/// Convolution inverse by the grouplike seed and nilpotent-series method of
/// functional_inverse, for A-valued maps. Returns std::nullopt when f is not
/// invertible on some grouplike basis vector or the series does not
/// terminate; callers may then fall back to convolution_inverse.
template <class C>
std::optional<ExactMatrix> convolution_inverse_series(const C& coalg, const Algebra& target, const ExactMatrix& f) {
  const size_t cols = target.dim;
  ExactMatrix seed(coalg.dim, cols);
  for (int c = 0; c < coalg.dim; ++c) {
    if (!coalg.is_grouplike(c)) continue;
    auto inv = algebra_inverse(target, from_dense(f.row(c)));
    if (!inv) return std::nullopt;
    for (const auto& e : *inv) seed(c, e.index) = e.value;
  }
  const ExactMatrix unit = convolution_unit(coalg, target);
  const ExactMatrix fs = convolution_product(coalg, target, f, seed);
  ExactMatrix residual(coalg.dim, cols);
  for (int c = 0; c < coalg.dim; ++c)
    for (size_t t = 0; t < cols; ++t) residual(c, t) = unit(c, t) - fs(c, t);
  ExactMatrix sum = unit, term = unit;
  bool nilpotent = residual.is_zero();
  for (int k = 0; !nilpotent && k <= coalg.dim && k < 256; ++k) {
    term = convolution_product(coalg, target, term, residual);
    if (term.is_zero()) {
      nilpotent = true;
      break;
    }
    for (int c = 0; c < coalg.dim; ++c)
      for (size_t t = 0; t < cols; ++t) sum(c, t) += term(c, t);
  }
  if (!nilpotent) return std::nullopt;
  ExactMatrix g = convolution_product(coalg, target, seed, sum);
  if (!(convolution_product(coalg, target, f, g) == unit)) return std::nullopt;
  if (!(convolution_product(coalg, target, g, f) == unit)) return std::nullopt;
  return g;
}

inline ExactMatrix column(std::span<const CycScalar> v) {
  ExactMatrix m(v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

/// Convolution inverse of a field-valued functional.
///
/// Seeds with the pointwise inverse on grouplike basis vectors, then corrects
/// by the geometric series of the residual eps - f * g0, which is nilpotent
/// when the grouplike basis vectors span the coradical. Falls back to the
/// linear solve for small coalgebras. Both products are re-verified.
template <class C>
std::optional<std::vector<CycScalar>> functional_inverse(const C& coalg, std::span<const CycScalar> f,
                                                         int solve_limit = 1024) {
  const auto eps = counit_functional(coalg);
  std::vector<CycScalar> seed(coalg.dim);
  for (int c = 0; c < coalg.dim; ++c) {
    if (!coalg.is_grouplike(c)) continue;
    if (f[c].is_zero()) return std::nullopt;  // restriction to grouplikes is multiplicative
    seed[c] = f[c].inverse();
  }
  auto fs = convolve(coalg, f, seed);
  std::vector<CycScalar> residual(coalg.dim);
  bool residual_zero = true;
  for (int c = 0; c < coalg.dim; ++c) {
    residual[c] = eps[c] - fs[c];
    residual_zero = residual_zero && residual[c].is_zero();
  }
  std::vector<CycScalar> candidate;
  if (residual_zero) {
    candidate = seed;
  } else {
    std::vector<CycScalar> sum = eps, term = eps;
    bool nilpotent = false;
    for (int k = 0; k <= coalg.dim && k < 256; ++k) {
      term = convolve(coalg, std::span<const CycScalar>(term), std::span<const CycScalar>(residual));
      bool zero = true;
      for (const auto& t : term) zero = zero && t.is_zero();
      if (zero) {
        nilpotent = true;
        break;
      }
      for (int c = 0; c < coalg.dim; ++c) sum[c] += term[c];
    }
    if (nilpotent) candidate = convolve(coalg, std::span<const CycScalar>(seed), std::span<const CycScalar>(sum));
  }
  auto verified = [&](const std::vector<CycScalar>& g) {
    return !g.empty() && convolve(coalg, f, std::span<const CycScalar>(g)) == eps &&
           convolve(coalg, std::span<const CycScalar>(g), f) == eps;
  };
  if (verified(candidate)) return candidate;
  if (coalg.dim > solve_limit) return std::nullopt;
  const Algebra k = Algebra::field();
  auto g = convolution_inverse(coalg, k, column(f));
  if (!g) return std::nullopt;
  std::vector<CycScalar> out(coalg.dim);
  for (int c = 0; c < coalg.dim; ++c) out[c] = (*g)(c, 0);
  return out;
}

}  // namespace dequiv::core
