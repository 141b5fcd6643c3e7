#include "dequiv/core/checks.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <sstream>

#include "dequiv/core/convolution.hpp"
#include "dequiv/exact/matrix.hpp"

namespace dequiv::core {

std::string Witness::describe() const {
  std::ostringstream os;
  os << axiom << " fails at (";
  for (size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
  os << ")";
  if (!coordinate.empty()) os << " coordinate " << coordinate;
  os << ": lhs = " << lhs.to_string() << ", rhs = " << rhs.to_string();
  return os.str();
}

bool CheckReport::ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.passed; });
}

const Witness* CheckReport::witness() const {
  for (const auto& v : verdicts)
    if (!v.passed && v.witness) return &*v.witness;
  return nullptr;
}

const AxiomVerdict* CheckReport::find(const std::string& axiom) const {
  for (const auto& v : verdicts)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

void CheckReport::append(const CheckReport& other) {
  verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
}

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

namespace {

using Clock = std::chrono::steady_clock;
using PairMap = std::map<std::int64_t, CycScalar>;

/// Runs one axiom family over n tuples.
template <class Check>
AxiomVerdict run_family(const std::string& name, std::int64_t n, unsigned threads, Check&& check) {
  const auto t0 = Clock::now();
  AxiomVerdict v;
  v.axiom = name;
  v.witness = first_failure(n, threads, check);
  v.passed = !v.witness;
  v.tuples = v.passed ? static_cast<std::uint64_t>(n) : 0;
  if (v.witness) v.witness->axiom = name;
  v.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return v;
}

void add_to(PairMap& m, std::int64_t key, const CycScalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = m.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

std::string coord_label(std::int64_t key, int dim, int legs) {
  std::vector<int> idx(legs);
  for (int k = legs; k-- > 0;) {
    idx[k] = static_cast<int>(key % dim);
    key /= dim;
  }
  std::ostringstream os;
  for (int k = 0; k < legs; ++k) os << (k ? " (x) " : "") << "e" << idx[k];
  return os.str();
}

/// First differing coordinate of two maps, as a witness.
std::optional<Witness> compare_maps(const PairMap& a, const PairMap& b, std::vector<int> tuple, int dim,
                                    int legs) {
  if (a == b) return std::nullopt;
  std::int64_t key = -1;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      key = ia->first;
      break;
    }
    if (ia == a.end() || ib->first < ia->first) {
      key = ib->first;
      break;
    }
    if (!(ia->second == ib->second)) {
      key = ia->first;
      break;
    }
    ++ia;
    ++ib;
  }
  Witness w;
  w.tuple = std::move(tuple);
  w.coordinate = coord_label(key, dim, legs);
  auto fa = a.find(key);
  auto fb = b.find(key);
  if (fa != a.end()) w.lhs = fa->second;
  if (fb != b.end()) w.rhs = fb->second;
  return w;
}

PairMap to_map(const SparseVector& v) {
  PairMap m;
  for (const auto& e : v) m.emplace(e.index, e.value);
  return m;
}

std::optional<Witness> compare_vectors(const SparseVector& a, const SparseVector& b, std::vector<int> tuple,
                                       int dim) {
  if (a == b) return std::nullopt;
  return compare_maps(to_map(a), to_map(b), std::move(tuple), dim, 1);
}

std::optional<Witness> compare_scalars(const CycScalar& a, const CycScalar& b, std::vector<int> tuple) {
  if (a == b) return std::nullopt;
  Witness w;
  w.tuple = std::move(tuple);
  w.lhs = a;
  w.rhs = b;
  return w;
}

std::vector<int> split3(std::int64_t i, int d) {
  return {static_cast<int>(i / (std::int64_t(d) * d)), static_cast<int>((i / d) % d), static_cast<int>(i % d)};
}

AxiomVerdict coassoc_family(const Coalgebra& c, unsigned threads) {
  return run_family("coassoc", c.dim, threads, [&](std::int64_t i) -> std::optional<Witness> {
    const std::int64_t d = c.dim;
    PairMap left, right;
    for (const auto& t : c.delta[i]) {
      for (const auto& u : c.delta[t.left]) add_to(left, (u.left * d + u.right) * d + t.right, t.coef * u.coef);
      for (const auto& u : c.delta[t.right]) add_to(right, (t.left * d + u.left) * d + u.right, t.coef * u.coef);
    }
    return compare_maps(left, right, {static_cast<int>(i)}, c.dim, 3);
  });
}

AxiomVerdict counit_family(const Coalgebra& c, unsigned threads) {
  return run_family("counit", c.dim, threads, [&](std::int64_t i) -> std::optional<Witness> {
    std::vector<Entry> l, r;
    for (const auto& t : c.delta[i]) {
      l.push_back({t.right, c.counit[t.left] * t.coef});
      r.push_back({t.left, c.counit[t.right] * t.coef});
    }
    const auto e = basis_vector(static_cast<int>(i));
    if (auto w = compare_vectors(combine(l), e, {static_cast<int>(i)}, c.dim)) return w;
    return compare_vectors(combine(r), e, {static_cast<int>(i)}, c.dim);
  });
}

AxiomVerdict assoc_family(const Algebra& a, unsigned threads) {
  const std::int64_t d = a.dim;
  return run_family("assoc", d * d * d, threads, [&](std::int64_t n) -> std::optional<Witness> {
    const auto t = split3(n, a.dim);
    const auto lhs = a.multiply(a.product(t[0], t[1]), basis_vector(t[2]));
    const auto rhs = a.multiply(basis_vector(t[0]), a.product(t[1], t[2]));
    return compare_vectors(lhs, rhs, t, a.dim);
  });
}

AxiomVerdict unit_family(const Algebra& a, unsigned threads) {
  return run_family("unit", a.dim, threads, [&](std::int64_t i) -> std::optional<Witness> {
    const auto e = basis_vector(static_cast<int>(i));
    if (auto w = compare_vectors(a.multiply(a.unit, e), e, {static_cast<int>(i)}, a.dim)) return w;
    return compare_vectors(a.multiply(e, a.unit), e, {static_cast<int>(i)}, a.dim);
  });
}

/// Delta(ab) = Delta(a)Delta(b), eps(ab) = eps(a)eps(b), Delta(1) = 1 (x) 1, eps(1) = 1.
AxiomVerdict multiplicative_coproduct_family(const std::string& name, const Coalgebra& c, const Algebra& a,
                                             unsigned threads) {
  const std::int64_t d = c.dim;
  return run_family(name, d * d + 1, threads, [&](std::int64_t n) -> std::optional<Witness> {
    if (n == d * d) {
      const auto du = coproduct_of(c, a.unit);
      std::vector<Entry> uu;
      for (const auto& x : a.unit)
        for (const auto& y : a.unit) uu.push_back({static_cast<int>(x.index * d + y.index), x.value * y.value});
      if (auto w = compare_maps(to_map(du), to_map(combine(uu)), {}, c.dim, 2)) return w;
      return compare_scalars(c.counit_of(a.unit), CycScalar(1), {});
    }
    const int i = static_cast<int>(n / d), j = static_cast<int>(n % d);
    const auto& prod = a.product(i, j);
    PairMap lhs = to_map(coproduct_of(c, prod));
    PairMap rhs;
    for (const auto& s : c.delta[i])
      for (const auto& t : c.delta[j]) {
        const auto& left = a.product(s.left, t.left);
        if (left.empty()) continue;
        const auto& right = a.product(s.right, t.right);
        if (right.empty()) continue;
        const CycScalar st = s.coef * t.coef;
        for (const auto& x : left) {
          const CycScalar sx = st * x.value;
          for (const auto& y : right) add_to(rhs, x.index * d + y.index, sx * y.value);
        }
      }
    if (auto w = compare_maps(lhs, rhs, {i, j}, c.dim, 2)) return w;
    return compare_scalars(c.counit_of(prod), c.counit[i] * c.counit[j], {i, j});
  });
}

AxiomVerdict antipode_family(const HopfAlgebra& h, unsigned threads) {
  const auto& c = h.coalgebra;
  const auto& a = h.algebra;
  const std::int64_t d = c.dim;
  return run_family("antipode", d + 1, threads, [&](std::int64_t n) -> std::optional<Witness> {
    if (n == d) {
      if (exact::rank(h.antipode.to_matrix()) == static_cast<size_t>(d)) return std::nullopt;
      Witness w;
      w.coordinate = "antipode matrix is singular";
      return w;
    }
    const int i = static_cast<int>(n);
    SparseVector l, r;
    for (const auto& t : c.delta[i]) {
      l = add(l, scaled(a.multiply(h.antipode.images[t.left], basis_vector(t.right)), t.coef));
      r = add(r, scaled(a.multiply(basis_vector(t.left), h.antipode.images[t.right]), t.coef));
    }
    const auto target = scaled(a.unit, c.counit[i]);
    if (auto w = compare_vectors(l, target, {i}, c.dim)) return w;
    return compare_vectors(r, target, {i}, c.dim);
  });
}

/// Dense lookup tables shared by the coquasi checks.
struct CoquasiTables {
  const CoquasiBialgebra& q;
  int d;
  std::vector<std::vector<Coalgebra::Term3>> delta2;
  std::vector<char> nz_ab;  // exists c: omega(a, b, c) != 0
  std::vector<char> nz_bc;  // exists a: omega(a, b, c) != 0

  explicit CoquasiTables(const CoquasiBialgebra& qq) : q(qq), d(qq.dim()) {
    delta2.reserve(d);
    for (int i = 0; i < d; ++i) delta2.push_back(q.coalgebra.iterated_coproduct(i));
    nz_ab.assign(static_cast<size_t>(d) * d, 0);
    nz_bc.assign(static_cast<size_t>(d) * d, 0);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          if (!q.omega.at(a, b, c).is_zero()) {
            nz_ab[a * d + b] = 1;
            nz_bc[b * d + c] = 1;
          }
  }

  const CycScalar& w(int a, int b, int c) const { return q.omega.at(a, b, c); }

  /// omega(x, b, c) for sparse x.
  CycScalar w_first(const SparseVector& x, int b, int c) const {
    CycScalar s;
    for (const auto& e : x) {
      const auto& v = w(e.index, b, c);
      if (!v.is_zero()) s.add_product(e.value, v);
    }
    return s;
  }
  CycScalar w_second(int a, const SparseVector& y, int c) const {
    CycScalar s;
    for (const auto& e : y) {
      const auto& v = w(a, e.index, c);
      if (!v.is_zero()) s.add_product(e.value, v);
    }
    return s;
  }
  CycScalar w_third(int a, int b, const SparseVector& z) const {
    CycScalar s;
    for (const auto& e : z) {
      const auto& v = w(a, b, e.index);
      if (!v.is_zero()) s.add_product(e.value, v);
    }
    return s;
  }

  std::optional<Witness> pentagon_at(int h, int g, int k, int l) const {
    const auto& delta = q.coalgebra.delta;
    const auto& m = q.algebra;
    // omega(h1 g1, k1, l1) omega(h2, g2, k2 l2)
    CycScalar lhs;
    for (const auto& kt : delta[k])
      for (const auto& lt : delta[l]) {
        if (!nz_bc[kt.left * d + lt.left]) continue;
        const auto& kl = m.product(kt.right, lt.right);
        if (kl.empty()) continue;
        for (const auto& ht : delta[h])
          for (const auto& gt : delta[g]) {
            if (!nz_ab[ht.right * d + gt.right]) continue;
            const CycScalar b = w_third(ht.right, gt.right, kl);
            if (b.is_zero()) continue;
            const CycScalar a = w_first(m.product(ht.left, gt.left), kt.left, lt.left);
            if (a.is_zero()) continue;
            lhs.add_product(coef4(kt.coef, lt.coef, ht.coef, gt.coef), a * b);
          }
      }
    // omega(h1, g1, k1) omega(h2, g2 k2, l1) omega(g3, k3, l2)
    CycScalar rhs;
    for (const auto& gt : delta2[g])
      for (const auto& kt : delta2[k]) {
        if (!nz_ab[gt.c * d + kt.c]) continue;
        const auto& gk = m.product(gt.b, kt.b);
        if (gk.empty()) continue;
        for (const auto& lt : delta[l]) {
          const auto& c3 = w(gt.c, kt.c, lt.right);
          if (c3.is_zero()) continue;
          for (const auto& ht : delta[h]) {
            const auto& c1 = w(ht.left, gt.a, kt.a);
            if (c1.is_zero()) continue;
            const CycScalar c2 = w_second(ht.right, gk, lt.left);
            if (c2.is_zero()) continue;
            rhs.add_product(coef4(gt.coef, kt.coef, lt.coef, ht.coef), c1 * c2 * c3);
          }
        }
      }
    return compare_scalars(lhs, rhs, {h, g, k, l});
  }

  /// omega(h1,g1,k1) h2(g2k2) = (h1g1)k1 omega(h2,g2,k2)
  std::optional<Witness> quasi_assoc_at(int h, int g, int k) const {
    const auto& delta = q.coalgebra.delta;
    const auto& m = q.algebra;
    std::vector<Entry> lhs, rhs;
    for (const auto& ht : delta[h])
      for (const auto& gt : delta[g])
        for (const auto& kt : delta[k]) {
          const auto& wl = w(ht.left, gt.left, kt.left);
          const auto& wr = w(ht.right, gt.right, kt.right);
          if (wl.is_zero() && wr.is_zero()) continue;
          const CycScalar c = coef4(ht.coef, gt.coef, kt.coef, CycScalar(1));
          if (!wl.is_zero()) {
            const CycScalar s = c * wl;
            for (const auto& e : m.multiply(basis_vector(ht.right), m.product(gt.right, kt.right)))
              lhs.push_back({e.index, e.value * s});
          }
          if (!wr.is_zero()) {
            const CycScalar s = c * wr;
            for (const auto& e : m.multiply(m.product(ht.left, gt.left), basis_vector(kt.left)))
              rhs.push_back({e.index, e.value * s});
          }
        }
    return compare_vectors(combine(std::move(lhs)), combine(std::move(rhs)), {h, g, k}, d);
  }

  static CycScalar coef4(const CycScalar& a, const CycScalar& b, const CycScalar& c, const CycScalar& e) {
    CycScalar out(1);
    for (const CycScalar* x : {&a, &b, &c, &e})
      if (!x->is_one()) out = out * *x;
    return out;
  }
};

}  // namespace

SparseVector coproduct_of(const Coalgebra& c, const SparseVector& x) {
  std::vector<Entry> raw;
  for (const auto& e : x)
    for (const auto& t : c.delta[e.index]) raw.push_back({t.left * c.dim + t.right, e.value * t.coef});
  return combine(std::move(raw));
}

CheckReport check_coassoc(const Coalgebra& c, const CheckOptions& opt) {
  const unsigned th = resolve_threads(opt.threads);
  return {{coassoc_family(c, th), counit_family(c, th)}};
}

CheckReport check_hopf(const HopfAlgebra& h, const CheckOptions& opt) {
  const unsigned th = resolve_threads(opt.threads);
  CheckReport r = check_coassoc(h.coalgebra, opt);
  r.verdicts.push_back(assoc_family(h.algebra, th));
  r.verdicts.push_back(unit_family(h.algebra, th));
  r.verdicts.push_back(multiplicative_coproduct_family("bialg", h.coalgebra, h.algebra, th));
  r.verdicts.push_back(antipode_family(h, th));
  return r;
}

CheckReport check_coquasi(const CoquasiBialgebra& q, const CheckOptions& opt) {
  const unsigned th = resolve_threads(opt.threads);
  const int d = q.dim();
  const std::int64_t d2 = std::int64_t(d) * d, d3 = d2 * d;
  CheckReport r = check_coassoc(q.coalgebra, opt);
  r.verdicts.push_back(multiplicative_coproduct_family("coalg-map", q.coalgebra, q.algebra, th));
  r.verdicts.push_back(unit_family(q.algebra, th));
  const CoquasiTables t(q);
  const auto& eps = q.coalgebra.counit;
  const auto& one = q.algebra.unit;
  r.verdicts.push_back(run_family("normalized", d2, th, [&](std::int64_t n) -> std::optional<Witness> {
    const int a = static_cast<int>(n / d), b = static_cast<int>(n % d);
    const CycScalar e = eps[a] * eps[b];
    if (auto w = compare_scalars(t.w_second(a, one, b), e, {a, b})) {
      w->coordinate = "omega(h, 1, g)";
      return w;
    }
    if (auto w = compare_scalars(t.w_first(one, a, b), e, {a, b})) {
      w->coordinate = "omega(1, h, g)";
      return w;
    }
    if (auto w = compare_scalars(t.w_third(a, b, one), e, {a, b})) {
      w->coordinate = "omega(h, g, 1)";
      return w;
    }
    return std::nullopt;
  }));
  const TensorCoalgebra cube({&q.coalgebra, &q.coalgebra, &q.coalgebra});
  r.verdicts.push_back(
      run_family("associator-invertible", q.omega_inv.dim() == d ? d3 : 1, th,
                 [&](std::int64_t n) -> std::optional<Witness> {
                   if (q.omega_inv.dim() != d) {
                     Witness w;
                     w.coordinate = "associator inverse missing";
                     return w;
                   }
                   CycScalar fg, gf;
                   cube.for_each_term(static_cast<int>(n), [&](int a, int b, const auto& c) {
                     const auto& wa = q.omega.data()[a];
                     const auto& wb = q.omega.data()[b];
                     const auto& ia = q.omega_inv.data()[a];
                     const auto& ib = q.omega_inv.data()[b];
                     if (!wa.is_zero() && !ib.is_zero()) fg.add_product(coef_of(c), wa * ib);
                     if (!ia.is_zero() && !wb.is_zero()) gf.add_product(coef_of(c), ia * wb);
                   });
                   const CycScalar e = cube.counit_at(static_cast<int>(n));
                   if (auto w = compare_scalars(fg, e, split3(n, d))) return w;
                   return compare_scalars(gf, e, split3(n, d));
                 }));
  r.verdicts.push_back(run_family("quasi-assoc", d3, th, [&](std::int64_t n) {
    const auto x = split3(n, d);
    return t.quasi_assoc_at(x[0], x[1], x[2]);
  }));
  if (opt.pentagon_sample) {
    const auto& sample = *opt.pentagon_sample;
    r.verdicts.push_back(
        run_family("pentagon", static_cast<std::int64_t>(sample.size()), th, [&](std::int64_t n) {
          const auto& s = sample[n];
          return t.pentagon_at(s[0], s[1], s[2], s[3]);
        }));
  } else {
    r.verdicts.push_back(run_family("pentagon", d2 * d2, th, [&](std::int64_t n) {
      return t.pentagon_at(static_cast<int>(n / d3), static_cast<int>((n / d2) % d), static_cast<int>((n / d) % d),
                           static_cast<int>(n % d));
    }));
  }
  return r;
}

namespace {

/// Iterated coproduct with `legs` tensor factors, as (indices, coef) pairs.
std::vector<std::pair<std::vector<int>, CycScalar>> iterated(const Coalgebra& c, int i, int legs) {
  std::map<std::vector<int>, CycScalar> cur;
  cur[{i}] = CycScalar(1);
  for (int step = 1; step < legs; ++step) {
    std::map<std::vector<int>, CycScalar> next;
    for (const auto& [idx, coef] : cur)
      for (const auto& t : c.delta[idx.back()]) {
        auto key = idx;
        key.back() = t.left;
        key.push_back(t.right);
        auto& slot = next[key];
        slot.add_product(coef, t.coef);
      }
    cur.clear();
    for (auto& [k, v] : next)
      if (!v.is_zero()) cur.emplace(k, std::move(v));
  }
  return {cur.begin(), cur.end()};
}

}  // namespace

CheckReport check_quasi_antipode(const CoquasiBialgebra& q, const CheckOptions& opt) {
  const unsigned th = resolve_threads(opt.threads);
  CheckReport r;
  if (!q.quasi_antipode) {
    AxiomVerdict v;
    v.axiom = "quasi-antipode-present";
    v.passed = false;
    v.witness = Witness{"quasi-antipode-present", {}, "no (S, alpha, beta) supplied", {}, {}};
    r.verdicts.push_back(v);
    return r;
  }
  const auto& qa = *q.quasi_antipode;
  const auto& c = q.coalgebra;
  const auto& m = q.algebra;
  const int d = q.dim();
  const auto& S = qa.antipode.images;
  r.verdicts.push_back(run_family("quasi-antipode-alpha", d, th, [&](std::int64_t n) -> std::optional<Witness> {
    // S(h1) alpha(h2) h3 = alpha(h) 1
    SparseVector lhs;
    for (const auto& t : c.iterated_coproduct(static_cast<int>(n))) {
      if (qa.alpha[t.b].is_zero()) continue;
      lhs = add(lhs, scaled(m.multiply(S[t.a], basis_vector(t.c)), t.coef * qa.alpha[t.b]));
    }
    return compare_vectors(lhs, scaled(m.unit, qa.alpha[n]), {static_cast<int>(n)}, d);
  }));
  r.verdicts.push_back(run_family("quasi-antipode-beta", d, th, [&](std::int64_t n) -> std::optional<Witness> {
    // h1 beta(h2) S(h3) = beta(h) 1
    SparseVector lhs;
    for (const auto& t : c.iterated_coproduct(static_cast<int>(n))) {
      if (qa.beta[t.b].is_zero()) continue;
      lhs = add(lhs, scaled(m.multiply(basis_vector(t.a), S[t.c]), t.coef * qa.beta[t.b]));
    }
    return compare_vectors(lhs, scaled(m.unit, qa.beta[n]), {static_cast<int>(n)}, d);
  }));
  r.verdicts.push_back(run_family("quasi-antipode-omega", d, th, [&](std::int64_t n) -> std::optional<Witness> {
    // omega(h1 beta(h2), S(h3), alpha(h4) h5) = eps(h) = omega^-1(S(h1), alpha(h2) h3 beta(h4), S(h5))
    CycScalar first, second;
    for (const auto& [idx, coef] : iterated(c, static_cast<int>(n), 5)) {
      const CycScalar ab1 = qa.beta[idx[1]] * qa.alpha[idx[3]];
      if (!ab1.is_zero()) {
        CycScalar s;
        for (const auto& e : S[idx[2]]) s.add_product(e.value, q.omega.at(idx[0], e.index, idx[4]));
        first.add_product(coef * ab1, s);
      }
      const CycScalar ab2 = qa.alpha[idx[1]] * qa.beta[idx[3]];
      if (!ab2.is_zero()) {
        CycScalar s;
        for (const auto& x : S[idx[0]])
          for (const auto& z : S[idx[4]]) s.add_product(x.value * z.value, q.omega_inv.at(x.index, idx[2], z.index));
        second.add_product(coef * ab2, s);
      }
    }
    const CycScalar e = c.counit[n];
    if (auto w = compare_scalars(first, e, {static_cast<int>(n)})) {
      w->coordinate = "omega form";
      return w;
    }
    if (auto w = compare_scalars(second, e, {static_cast<int>(n)})) {
      w->coordinate = "inverse omega form";
      return w;
    }
    return std::nullopt;
  }));
  return r;
}

}  // namespace dequiv::core
