#include "dequiv/exact/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace dequiv::exact {

namespace {

// Exact quotient of integer polynomials, divisor monic.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const size_t dn = den.size() - 1;
  std::vector<Integer> quot(num.size() - dn, 0);
  for (size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  std::vector<Integer> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

CyclotomicField::CyclotomicField(unsigned conductor)
    : conductor_(conductor), degree_(euler_phi(conductor)), phi_(cyclotomic_polynomial(conductor)) {
  powers_.reserve(conductor_);
  std::vector<Integer> cur(degree_, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < conductor_; ++k) {
    powers_.push_back(cur);
    // multiply by x and reduce the overflow coefficient
    Integer top = cur[degree_ - 1];
    for (unsigned i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
  }
}

const CyclotomicField& CyclotomicField::get(unsigned conductor) {
  if (conductor == 0) throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[conductor];
  if (!slot) slot.reset(new CyclotomicField(conductor));
  return *slot;
}

// ---------------------------------------------------------------------------

CycScalar::CycScalar(long value) {
  if (value != 0) coeffs_.assign(1, Rational(value));
}

CycScalar::CycScalar(const Rational& value, unsigned conductor) {
  if (conductor != 1) field_ = &CyclotomicField::get(conductor);
  if (value != 0) {
    coeffs_.assign(field().degree(), Rational(0));
    coeffs_[0] = value;
  }
}

CycScalar::CycScalar(unsigned conductor, std::vector<Rational> coeffs) {
  if (conductor != 1) field_ = &CyclotomicField::get(conductor);
  if (coeffs.size() != field().degree())
    throw std::invalid_argument("coefficient vector length " + std::to_string(coeffs.size()) +
                                " does not match phi(" + std::to_string(conductor) + ")");
  coeffs_ = std::move(coeffs);
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

const CyclotomicField& CycScalar::field() const {
  return field_ ? *field_ : CyclotomicField::get(1);
}

std::vector<Rational> CycScalar::dense_coeffs() const {
  if (!coeffs_.empty()) return coeffs_;
  return std::vector<Rational>(field().degree(), Rational(0));
}

void CycScalar::normalize() {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return;
  coeffs_.clear();
}

bool CycScalar::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

CycScalar CycScalar::in_conductor(unsigned target) const {
  const unsigned n = conductor();
  if (target % n != 0)
    throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(n) + ") into Q(zeta_" +
                                std::to_string(target) + ")");
  if (target == n) return *this;
  CycScalar out;
  if (target != 1) out.field_ = &CyclotomicField::get(target);
  if (is_zero()) return out;
  const auto& tf = out.field();
  out.coeffs_.assign(tf.degree(), Rational(0));
  const unsigned step = target / n;
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const auto& p = tf.power((i * step) % target);
    for (unsigned t = 0; t < tf.degree(); ++t)
      if (p[t] != 0) out.coeffs_[t] += coeffs_[i] * p[t];
  }
  out.normalize();
  return out;
}

const CyclotomicField* CycScalar::common_field(const CycScalar& a, const CycScalar& b) {
  if (a.field_ == b.field_) return a.field_;
  const unsigned l = std::lcm(a.conductor(), b.conductor());
  return l == 1 ? nullptr : &CyclotomicField::get(l);
}

CycScalar& CycScalar::operator+=(const CycScalar& other) {
  if (field_ != other.field_) {
    const auto* f = common_field(*this, other);
    const unsigned n = f ? f->conductor() : 1;
    *this = in_conductor(n);
    return *this += other.in_conductor(n);
  }
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& other) {
  if (field_ != other.field_) return *this += -other;
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = -other;
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  CycScalar out;
  out.add_product(a, b);
  return out;
}

CycScalar& CycScalar::operator*=(const CycScalar& other) { return *this = *this * other; }

void CycScalar::add_product(const CycScalar& a, const CycScalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_one()) return void(*this += b);
  if (b.is_one()) return void(*this += a);
  if (a.field_ == b.field_ && is_zero()) field_ = a.field_;
  if (a.field_ != b.field_ || a.field_ != field_) {
    const auto* f = common_field(a, b);
    const unsigned n = std::lcm(f ? f->conductor() : 1u, conductor());
    if (n != conductor()) *this = in_conductor(n);
    const CycScalar aa = a.in_conductor(n), bb = b.in_conductor(n);
    add_product(aa, bb);
    return;
  }
  const unsigned deg = field().degree();
  if (coeffs_.empty()) coeffs_.assign(deg, Rational(0));
  if (a.is_rational()) {
    for (unsigned i = 0; i < deg; ++i)
      if (sgn(b.coeffs_[i]) != 0) coeffs_[i] += a.coeffs_[0] * b.coeffs_[i];
    normalize();
    return;
  }
  if (b.is_rational()) {
    for (unsigned i = 0; i < deg; ++i)
      if (sgn(a.coeffs_[i]) != 0) coeffs_[i] += b.coeffs_[0] * a.coeffs_[i];
    normalize();
    return;
  }
  thread_local std::vector<Rational> prod;
  prod.resize(2 * deg - 1);
  for (auto& p : prod) p = 0;
  for (unsigned i = 0; i < deg; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (unsigned j = 0; j < deg; ++j)
      if (sgn(b.coeffs_[j]) != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  const auto& phi = field().polynomial();
  for (unsigned k = 2 * deg - 2; k >= deg; --k) {
    if (sgn(prod[k]) == 0) continue;
    thread_local Rational c;
    c = prod[k];
    for (unsigned i = 0; i < deg; ++i)
      if (phi[i] != 0) prod[k - deg + i] -= c * phi[i];
  }
  for (unsigned i = 0; i < deg; ++i) coeffs_[i] += prod[i];
  normalize();
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const unsigned n = std::lcm(a.conductor(), b.conductor());
  return a.in_conductor(n).coeffs_ == b.in_conductor(n).coeffs_;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const unsigned deg = field().degree();
  if (is_rational()) {
    CycScalar out = *this;
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Solve (multiplication-by-this) x = 1 over Q.
  std::vector<std::vector<Rational>> aug(deg, std::vector<Rational>(deg + 1, Rational(0)));
  CycScalar basis = CycScalar(Rational(1), conductor());
  const CycScalar z = cyc_root(conductor(), 1);
  for (unsigned j = 0; j < deg; ++j) {
    const auto col = (*this * basis).dense_coeffs();
    for (unsigned i = 0; i < deg; ++i) aug[i][j] = col[i];
    basis *= z;
  }
  aug[0][deg] = 1;
  for (unsigned c = 0; c < deg; ++c) {
    unsigned p = c;
    while (p < deg && sgn(aug[p][c]) == 0) ++p;
    if (p == deg) throw DivisionByZero();
    std::swap(aug[p], aug[c]);
    const Rational inv = 1 / aug[c][c];
    for (unsigned k = c; k <= deg; ++k) aug[c][k] *= inv;
    for (unsigned r = 0; r < deg; ++r) {
      if (r == c || sgn(aug[r][c]) == 0) continue;
      const Rational f = aug[r][c];
      for (unsigned k = c; k <= deg; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  std::vector<Rational> sol(deg);
  for (unsigned i = 0; i < deg; ++i) sol[i] = aug[i][deg];
  return CycScalar(conductor(), std::move(sol));
}

CycScalar CycScalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycScalar result(Rational(1), conductor());
  CycScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::string CycScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "z" << conductor();
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

CycScalar cyc_root(unsigned conductor, long k) {
  if (conductor == 0) throw std::invalid_argument("cyc_root: conductor must be positive");
  const auto& f = CyclotomicField::get(conductor);
  long r = k % static_cast<long>(conductor);
  if (r < 0) r += conductor;
  const auto& p = f.power(static_cast<unsigned>(r));
  std::vector<Rational> coeffs(p.begin(), p.end());
  return CycScalar(conductor, std::move(coeffs));
}

unsigned root_of_unity_order(const CycScalar& s) {
  if (s.is_zero()) return 0;
  const unsigned bound = std::lcm(2u, s.conductor());
  CycScalar p = s;
  for (unsigned n = 1; n <= bound; ++n) {
    if (p.is_one()) return n;
    p *= s;
  }
  return 0;
}

}  // namespace dequiv::exact
