/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_N).
 *
 * Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1),
 * reduced modulo the N-th cyclotomic polynomial, so two elements of the
 * same field are equal iff their coefficient vectors are equal.  Elements
 * of different fields are combined in Q(zeta_lcm).
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dequiv::exact {

using Rational = mpq_class;
using Integer = mpz_class;

/// Reduction data for Q(zeta_N). Instances are interned and never freed.
class CyclotomicField {
 public:
  static const CyclotomicField& get(unsigned conductor);

  unsigned conductor() const { return conductor_; }
  unsigned degree() const { return degree_; }
  /// Phi_N, lowest degree first; monic of length degree()+1.
  const std::vector<Integer>& polynomial() const { return phi_; }
  /// zeta^k reduced to the power basis, for 0 <= k < N.
  const std::vector<Integer>& power(unsigned k) const { return powers_[k]; }

 private:
  explicit CyclotomicField(unsigned conductor);

  unsigned conductor_;
  unsigned degree_;
  std::vector<Integer> phi_;
  std::vector<std::vector<Integer>> powers_;
};

/// Integer polynomial Phi_n, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);
unsigned lcm_conductor(unsigned a, unsigned b);

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

class CycScalar {
 public:
  /// Zero of Q.
  CycScalar() = default;
  CycScalar(long value);  // NOLINT(google-explicit-constructor)
  explicit CycScalar(const Rational& value, unsigned conductor = 1);
  /// Build from explicit power-basis coefficients (length must equal phi(N)).
  CycScalar(unsigned conductor, std::vector<Rational> coeffs);

  unsigned conductor() const { return field_ ? field_->conductor() : 1; }
  const CyclotomicField& field() const;

  /// Canonical coefficients; empty when the value is zero.
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Full-length coefficient vector (zeros included).
  std::vector<Rational> dense_coeffs() const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_rational() const;

  /// The same value viewed in Q(zeta_M); M must be a multiple of conductor().
  CycScalar in_conductor(unsigned target) const;

  CycScalar inverse() const;
  CycScalar pow(long exponent) const;

  CycScalar& operator+=(const CycScalar& other);
  CycScalar& operator-=(const CycScalar& other);
  CycScalar& operator*=(const CycScalar& other);
  CycScalar& operator/=(const CycScalar& other) { return *this *= other.inverse(); }

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b);

  /// Adds a*b into *this without temporaries for the common same-field case.
  void add_product(const CycScalar& a, const CycScalar& b);

  /// Human-readable rendering, e.g. "1 - 2*z9^3".
  std::string to_string() const;

 private:
  void normalize();
  static const CyclotomicField* common_field(const CycScalar& a, const CycScalar& b);

  const CyclotomicField* field_ = nullptr;  // null means Q (conductor 1)
  std::vector<Rational> coeffs_;
};

/// zeta_N^k in canonical form.
CycScalar cyc_root(unsigned conductor, long k);

inline CycScalar cyc_add(const CycScalar& a, const CycScalar& b) { return a + b; }
inline CycScalar cyc_mul(const CycScalar& a, const CycScalar& b) { return a * b; }
inline CycScalar cyc_neg(const CycScalar& a) { return -a; }
inline CycScalar cyc_inv(const CycScalar& a) { return a.inverse(); }

/// If the scalar is a root of unity zeta_M^k, returns its order (smallest n
/// with s^n = 1); returns 0 otherwise.
unsigned root_of_unity_order(const CycScalar& s);

}  // namespace dequiv::exact
