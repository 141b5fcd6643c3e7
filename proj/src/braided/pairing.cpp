#include "dequiv/braided/pairing.hpp"

#include <chrono>

#include "dequiv/core/convolution.hpp"

namespace dequiv::braided {

using core::AxiomFailure;
using core::AxiomVerdict;
using core::Entry;
using core::basis_vector;
using core::combine;
using core::first_failure;
using core::from_dense;
using core::resolve_threads;

namespace {

template <class Check>
AxiomVerdict family(const std::string& name, std::int64_t n, unsigned threads, Check&& check) {
  const auto t0 = std::chrono::steady_clock::now();
  AxiomVerdict v;
  v.axiom = name;
  v.witness = first_failure(n, threads, check);
  v.passed = !v.witness;
  v.tuples = v.passed ? static_cast<std::uint64_t>(n) : 0;
  if (v.witness) v.witness->axiom = name;
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

std::optional<Witness> differ(const CycScalar& a, const CycScalar& b, std::vector<int> tuple,
                              std::string coord = {}) {
  if (a == b) return std::nullopt;
  return Witness{"", std::move(tuple), std::move(coord), a, b};
}

std::optional<Witness> differ(const SparseVector& a, const SparseVector& b, std::vector<int> tuple) {
  if (a == b) return std::nullopt;
  size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  int idx;
  if (i == a.size()) idx = b[i].index;
  else if (i == b.size()) idx = a[i].index;
  else idx = std::min(a[i].index, b[i].index);
  return Witness{"", std::move(tuple), "e" + std::to_string(idx), core::coefficient(a, idx),
                 core::coefficient(b, idx)};
}

/// Applies a linear map to a sparse vector.
SparseVector apply(const LinearMap& f, const SparseVector& x) { return f.apply(x); }

}  // namespace

CycScalar BraidedCentralPair::pair(const SparseVector& x, int k) const {
  CycScalar s;
  for (const auto& e : x) {
    const auto& v = r(e.index, k);
    if (!v.is_zero()) s.add_product(e.value, v);
  }
  return s;
}

CheckReport check_embedding(const SubalgebraEmbedding& e, const CheckOptions& opt) {
  const unsigned th = resolve_threads(opt.threads);
  const auto& H = *e.H;
  const auto& K = *e.K;
  const int dk = K.dim();
  const auto& iota = e.inclusion;
  CheckReport rep;
  rep.verdicts.push_back(family("inclusion-injective", 1, th, [&](std::int64_t) -> std::optional<Witness> {
    if (iota.source_dim != dk || iota.target_dim != H.dim())
      return Witness{"", {}, "inclusion has the wrong shape", {}, {}};
    if (exact::rank(iota.to_matrix()) == static_cast<size_t>(dk)) return std::nullopt;
    return Witness{"", {}, "inclusion is not injective", {}, {}};
  }));
  if (!rep.ok()) return rep;
  rep.verdicts.push_back(family("inclusion-coalgebra", dk, th, [&](std::int64_t n) -> std::optional<Witness> {
    const int k = static_cast<int>(n);
    std::vector<Entry> lhs, rhs;
    for (const auto& t : K.coalgebra.delta[k])
      for (const auto& a : iota.images[t.left])
        for (const auto& b : iota.images[t.right])
          rhs.push_back({a.index * H.dim() + b.index, t.coef * a.value * b.value});
    if (auto w = differ(core::coproduct_of(H.coalgebra, iota.images[k]), combine(rhs), {k})) return w;
    return differ(H.coalgebra.counit_of(iota.images[k]), K.coalgebra.counit[k], {k}, "counit");
  }));
  rep.verdicts.push_back(
      family("inclusion-algebra", std::int64_t(dk) * dk + 1, th, [&](std::int64_t n) -> std::optional<Witness> {
        if (n == std::int64_t(dk) * dk) return differ(apply(iota, K.algebra.unit), H.algebra.unit, {});
        const int a = static_cast<int>(n / dk), b = static_cast<int>(n % dk);
        return differ(apply(iota, K.algebra.product(a, b)), H.algebra.multiply(iota.images[a], iota.images[b]),
                      {a, b});
      }));
  rep.verdicts.push_back(family("inclusion-antipode", dk, th, [&](std::int64_t n) -> std::optional<Witness> {
    const int k = static_cast<int>(n);
    return differ(apply(iota, K.antipode.images[k]), apply(H.antipode, iota.images[k]), {k});
  }));
  rep.verdicts.push_back(
      family("subalgebra-commutative", std::int64_t(dk) * dk, th, [&](std::int64_t n) -> std::optional<Witness> {
        const int a = static_cast<int>(n / dk), b = static_cast<int>(n % dk);
        return differ(K.algebra.product(a, b), K.algebra.product(b, a), {a, b});
      }));
  return rep;
}

ExactMatrix pairing_convolution(const SubalgebraEmbedding& e, const ExactMatrix& f, const ExactMatrix& g) {
  const auto& H = e.H->coalgebra;
  const auto& K = e.K->coalgebra;
  ExactMatrix out(H.dim, K.dim);
  for (int h = 0; h < H.dim; ++h)
    for (int k = 0; k < K.dim; ++k) {
      CycScalar s;
      for (const auto& ht : H.delta[h])
        for (const auto& kt : K.delta[k]) {
          const auto& a = f(ht.left, kt.left);
          if (a.is_zero()) continue;
          const auto& b = g(ht.right, kt.right);
          if (b.is_zero()) continue;
          s.add_product(ht.coef * kt.coef, a * b);
        }
      out(h, k) = std::move(s);
    }
  return out;
}

namespace {

ExactMatrix inverse_candidate(const SubalgebraEmbedding& e, const ExactMatrix& r) {
  const auto& S = e.K->antipode;
  ExactMatrix out(r.rows(), r.cols());
  for (size_t h = 0; h < r.rows(); ++h)
    for (size_t k = 0; k < r.cols(); ++k) {
      CycScalar s;
      for (const auto& x : S.images[k])
        if (!r(h, x.index).is_zero()) s.add_product(x.value, r(h, x.index));
      out(h, k) = std::move(s);
    }
  return out;
}

ExactMatrix counit_form(const SubalgebraEmbedding& e) {
  const auto& H = e.H->coalgebra;
  const auto& K = e.K->coalgebra;
  ExactMatrix out(H.dim, K.dim);
  for (int h = 0; h < H.dim; ++h)
    for (int k = 0; k < K.dim; ++k) out(h, k) = H.counit[h] * K.counit[k];
  return out;
}

}  // namespace

BraidedCentralPair make_pair(SubalgebraEmbedding e, ExactMatrix r) {
  BraidedCentralPair p{std::move(e), std::move(r), {}};
  p.r_inv = inverse_candidate(p.embedding, p.r);
  return p;
}

ExactMatrix pairing_inverse(const BraidedCentralPair& p) {
  ExactMatrix inv = inverse_candidate(p.embedding, p.r);
  const ExactMatrix unit = counit_form(p.embedding);
  if (!(pairing_convolution(p.embedding, p.r, inv) == unit) || !(pairing_convolution(p.embedding, inv, p.r) == unit))
    throw AxiomFailure(Witness{"pairing-inverse", {}, "r(h, S(k)) is not a convolution inverse of r", {}, {}});
  return inv;
}

CheckReport check_pairing(const BraidedCentralPair& p, const CheckOptions& opt) {
  const unsigned th = resolve_threads(opt.threads);
  const auto& H = *p.embedding.H;
  const auto& K = *p.embedding.K;
  const int dh = H.dim(), dk = K.dim();
  const auto& iota = p.embedding.inclusion;
  const auto& r = p.r;
  CheckReport rep;
  if (r.rows() != static_cast<size_t>(dh) || r.cols() != static_cast<size_t>(dk)) {
    AxiomVerdict v;
    v.axiom = "pairing-shape";
    v.passed = false;
    v.witness = Witness{"pairing-shape", {}, "r must be dim H x dim K", {}, {}};
    rep.verdicts.push_back(v);
    return rep;
  }
  rep.verdicts.push_back(family("pairing-mult-left", std::int64_t(dh) * dh * dk, th,
                                [&](std::int64_t n) -> std::optional<Witness> {
                                  const int h = static_cast<int>(n / (std::int64_t(dh) * dk));
                                  const int h2 = static_cast<int>((n / dk) % dh);
                                  const int k = static_cast<int>(n % dk);
                                  const CycScalar lhs = p.pair(H.algebra.product(h, h2), k);
                                  CycScalar rhs;
                                  for (const auto& t : K.coalgebra.delta[k]) {
                                    const auto& a = r(h2, t.left);
                                    const auto& b = r(h, t.right);
                                    if (!a.is_zero() && !b.is_zero()) rhs.add_product(t.coef, a * b);
                                  }
                                  return differ(lhs, rhs, {h, h2, k});
                                }));
  rep.verdicts.push_back(family("pairing-mult-right", std::int64_t(dh) * dk * dk, th,
                                [&](std::int64_t n) -> std::optional<Witness> {
                                  const int h = static_cast<int>(n / (std::int64_t(dk) * dk));
                                  const int k = static_cast<int>((n / dk) % dk);
                                  const int k2 = static_cast<int>(n % dk);
                                  CycScalar lhs;
                                  for (const auto& e : K.algebra.product(k, k2)) lhs.add_product(e.value, r(h, e.index));
                                  CycScalar rhs;
                                  for (const auto& t : H.coalgebra.delta[h]) {
                                    const auto& a = r(t.left, k);
                                    const auto& b = r(t.right, k2);
                                    if (!a.is_zero() && !b.is_zero()) rhs.add_product(t.coef, a * b);
                                  }
                                  return differ(lhs, rhs, {h, k, k2});
                                }));
  rep.verdicts.push_back(family("pairing-unit", dh + dk, th, [&](std::int64_t n) -> std::optional<Witness> {
    if (n < dh) {
      const int h = static_cast<int>(n);
      CycScalar lhs;
      for (const auto& e : K.algebra.unit) lhs.add_product(e.value, r(h, e.index));
      return differ(lhs, H.coalgebra.counit[h], {h}, "r(h, 1)");
    }
    const int k = static_cast<int>(n - dh);
    return differ(p.pair(H.algebra.unit, k), K.coalgebra.counit[k], {k}, "r(1, k)");
  }));
  rep.verdicts.push_back(
      family("pairing-braided", std::int64_t(dh) * dk, th, [&](std::int64_t n) -> std::optional<Witness> {
        const int h = static_cast<int>(n / dk), k = static_cast<int>(n % dk);
        std::vector<Entry> lhs, rhs;
        for (const auto& ht : H.coalgebra.delta[h])
          for (const auto& kt : K.coalgebra.delta[k]) {
            const CycScalar c = ht.coef * kt.coef;
            const auto& a = r(ht.left, kt.left);
            if (!a.is_zero())
              for (const auto& e : H.algebra.multiply(iota.images[kt.right], basis_vector(ht.right)))
                lhs.push_back({e.index, c * a * e.value});
            const auto& b = r(ht.right, kt.right);
            if (!b.is_zero())
              for (const auto& e : H.algebra.multiply(basis_vector(ht.left), iota.images[kt.left]))
                rhs.push_back({e.index, c * b * e.value});
          }
        return differ(combine(std::move(lhs)), combine(std::move(rhs)), {h, k});
      }));
  rep.verdicts.push_back(
      family("pairing-restriction", std::int64_t(dk) * dk, th, [&](std::int64_t n) -> std::optional<Witness> {
        const int k = static_cast<int>(n / dk), k2 = static_cast<int>(n % dk);
        return differ(p.pair(iota.images[k], k2), K.coalgebra.counit_of(K.algebra.product(k, k2)), {k, k2});
      }));
  return rep;
}

CheckReport check_pairing_absorbs_subalgebra(const BraidedCentralPair& p, const CheckOptions& opt) {
  const unsigned th = resolve_threads(opt.threads);
  const auto& H = *p.embedding.H;
  const auto& K = *p.embedding.K;
  const int dh = H.dim(), dk = K.dim();
  const auto& iota = p.embedding.inclusion;
  const std::int64_t n = std::int64_t(dk) * dh * dk;
  auto split = [&](std::int64_t i) {
    return std::array<int, 3>{static_cast<int>(i / (std::int64_t(dh) * dk)), static_cast<int>((i / dk) % dh),
                              static_cast<int>(i % dk)};
  };
  CheckReport rep;
  rep.verdicts.push_back(family("pairing-absorbs-left", n, th, [&](std::int64_t i) {
    const auto [x, h, k] = split(i);
    return differ(p.pair(H.algebra.multiply(iota.images[x], basis_vector(h)), k),
                  K.coalgebra.counit[x] * p.r(h, k), {x, h, k});
  }));
  rep.verdicts.push_back(family("pairing-absorbs-right", n, th, [&](std::int64_t i) {
    const auto [x, h, k] = split(i);
    return differ(p.pair(H.algebra.multiply(basis_vector(h), iota.images[x]), k),
                  K.coalgebra.counit[x] * p.r(h, k), {x, h, k});
  }));
  return rep;
}

namespace {

std::optional<LinearMap> invert_cointegral(const SubalgebraEmbedding& e, const LinearMap& pi) {
  const auto& H = e.H->coalgebra;
  const auto& K = e.K->algebra;
  const ExactMatrix f = pi.to_matrix();
  auto g = core::convolution_inverse_series(H, K, f);
  if (!g && H.dim * K.dim <= 1024) g = core::convolution_inverse(H, K, f);
  if (!g) return std::nullopt;
  return LinearMap::from_matrix(*g);
}

}  // namespace

Cointegral make_cointegral(SubalgebraEmbedding e, LinearMap pi) {
  auto inv = invert_cointegral(e, pi);
  if (!inv) throw core::NotInvertible("cointegral is not convolution invertible");
  return Cointegral{std::move(e), std::move(pi), std::move(*inv)};
}

CheckReport check_cointegral(const Cointegral& c, const CheckOptions& opt) {
  const unsigned th = resolve_threads(opt.threads);
  const auto& H = *c.embedding.H;
  const auto& K = *c.embedding.K;
  const int dh = H.dim(), dk = K.dim();
  CheckReport rep;
  rep.verdicts.push_back(
      family("k-linear", std::int64_t(dk) * dh, th, [&](std::int64_t n) -> std::optional<Witness> {
        const int k = static_cast<int>(n / dh), h = static_cast<int>(n % dh);
        const auto lhs = c.pi.apply(H.algebra.multiply(c.embedding.inclusion.images[k], basis_vector(h)));
        const auto rhs = K.algebra.multiply(basis_vector(k), c.pi.images[h]);
        return differ(lhs, rhs, {k, h});
      }));
  rep.verdicts.push_back(family("invertible", 1, th, [&](std::int64_t) -> std::optional<Witness> {
    const ExactMatrix f = c.pi.to_matrix(), g = c.pi_inv.to_matrix();
    const ExactMatrix unit = core::convolution_unit(H.coalgebra, K.algebra);
    if (g.rows() != f.rows() || g.cols() != f.cols())
      return Witness{"", {}, "pi inverse has the wrong shape", {}, {}};
    if (!(core::convolution_product(H.coalgebra, K.algebra, f, g) == unit))
      return Witness{"", {}, "pi * pi^-1 != u eps", {}, {}};
    if (!(core::convolution_product(H.coalgebra, K.algebra, g, f) == unit))
      return Witness{"", {}, "pi^-1 * pi != u eps", {}, {}};
    return std::nullopt;
  }));
  return rep;
}

Cointegral normalize_counit(const Cointegral& c) {
  const auto& H = c.embedding.H->coalgebra;
  const auto& K = c.embedding.K->coalgebra;
  LinearMap pi{c.pi.source_dim, c.pi.target_dim, {}};
  for (int h = 0; h < H.dim; ++h) {
    std::vector<Entry> raw;
    for (const auto& t : H.delta[h]) {
      const CycScalar e = K.counit_of(c.pi_inv.images[t.right]);
      if (e.is_zero()) continue;
      for (const auto& x : c.pi.images[t.left]) raw.push_back({x.index, t.coef * e * x.value});
    }
    pi.images.push_back(combine(std::move(raw)));
  }
  return make_cointegral(c.embedding, std::move(pi));
}

Cointegral normalize_unit(const Cointegral& c) {
  const auto& K = c.embedding.K->algebra;
  const SparseVector at_one = c.pi.apply(c.embedding.H->algebra.unit);
  auto inv = core::algebra_inverse(K, at_one);
  if (!inv) throw core::NotInvertible("pi(1) is not invertible in K");
  LinearMap pi{c.pi.source_dim, c.pi.target_dim, {}};
  for (const auto& img : c.pi.images) pi.images.push_back(K.multiply(img, *inv));
  return make_cointegral(c.embedding, std::move(pi));
}

bool is_normalized(const Cointegral& c) {
  const auto& H = *c.embedding.H;
  const auto& K = *c.embedding.K;
  if (c.pi.apply(H.algebra.unit) != K.algebra.unit) return false;
  for (int h = 0; h < H.dim(); ++h)
    if (!(K.coalgebra.counit_of(c.pi.images[h]) == H.coalgebra.counit[h])) return false;
  return true;
}

Cointegral normalize(const Cointegral& c) {
  Cointegral out = normalize_counit(normalize_unit(c));
  if (!is_normalized(out))
    throw AxiomFailure(Witness{"cointegral-normalization", {}, "normalized cointegral fails eps pi = eps or pi(1) = 1",
                               {}, {}});
  return out;
}

}  // namespace dequiv::braided
