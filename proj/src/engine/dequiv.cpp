#include "dequiv/engine/dequiv.hpp"

#include "dequiv/exact/matrix.hpp"

namespace dequiv::engine {

using core::AxiomFailure;
using core::CycScalar;
using core::Entry;
using core::Witness;
using core::basis_vector;
using core::combine;

InputRejected::InputRejected(std::string stage, CheckReport report)
    : std::runtime_error(stage + ": " + (report.witness() ? report.witness()->describe() : std::string("failed"))),
      stage_(std::move(stage)),
      report_(std::move(report)) {}

EngineInconsistency::EngineInconsistency(CheckReport report)
    : std::runtime_error("assembled Q fails certification: " +
                         (report.witness() ? report.witness()->describe() : std::string("unknown"))),
      report_(std::move(report)) {}

std::vector<exact::Vector> kplus_h_subspace(const SubalgebraEmbedding& e) {
  const auto& H = *e.H;
  const auto& K = *e.K;
  std::vector<exact::Vector> span;
  for (int k = 0; k < K.dim(); ++k) {
    const auto aug = core::subtract(e.inclusion.images[k], core::scaled(H.algebra.unit, K.coalgebra.counit[k]));
    if (aug.empty()) continue;
    for (int h = 0; h < H.dim(); ++h) {
      const auto v = H.algebra.multiply(aug, basis_vector(h));
      if (!v.empty()) span.push_back(core::to_dense(v, H.dim()));
    }
  }
  auto basis = exact::span_basis(span, H.dim());
  if (auto w = core::coideal_check(H.coalgebra, basis)) throw AxiomFailure(*w);
  return basis;
}

namespace {

/// iota(pi^-1(l_1)) l_2 for a lift l.
SparseVector section_of(const Cointegral& c, const SparseVector& lift) {
  const auto& H = *c.embedding.H;
  std::vector<Entry> raw;
  for (const auto& e : lift)
    for (const auto& t : H.coalgebra.delta[e.index]) {
      const auto& k = c.pi_inv.images[t.left];
      if (k.empty()) continue;
      const auto left = c.embedding.inclusion.apply(k);
      for (const auto& x : H.algebra.multiply(left, basis_vector(t.right)))
        raw.push_back({x.index, x.value * e.value * t.coef});
    }
  return combine(std::move(raw));
}

/// Delta_H(x) as (left, right, coef) terms with merged duplicates.
std::vector<core::CoproductTerm> split(const core::Coalgebra& c, const SparseVector& x) {
  std::vector<core::CoproductTerm> out;
  for (const auto& e : core::coproduct_of(c, x)) out.push_back({e.index / c.dim, e.index % c.dim, e.value});
  return out;
}

CycScalar pair_with(const ExactMatrix& r, int row, const SparseVector& k) {
  CycScalar s;
  for (const auto& e : k) {
    const auto& v = r(row, e.index);
    if (!v.is_zero()) s.add_product(e.value, v);
  }
  return s;
}

}  // namespace

LinearMap build_section(const Cointegral& c, const QuotientCoalgebra& quotient) {
  const int qdim = quotient.q.dim;
  const int hdim = c.embedding.H->dim();
  LinearMap j{qdim, hdim, {}};
  for (int q = 0; q < qdim; ++q) {
    j.images.push_back(section_of(c, quotient.lift.images[q]));
    if (quotient.nu.apply(j.images[q]) != basis_vector(q))
      throw AxiomFailure(Witness{"section", {q}, "nu(j(q)) != q", {}, {}});
  }
  // A second lift, shifted by kernel vectors, must give the same section.
  const auto& kb = quotient.kernel_basis;
  if (!kb.empty()) {
    for (int q = 0; q < qdim; ++q) {
      const auto shifted = core::add(quotient.lift.images[q], core::from_dense(kb[q % kb.size()]));
      if (section_of(c, shifted) != j.images[q])
        throw AxiomFailure(Witness{"section-lift-independence", {q}, "j depends on the lift", {}, {}});
    }
  }
  return j;
}

ExactMatrix induced_pairing(const BraidedCentralPair& p, const QuotientCoalgebra& quotient) {
  const int dk = p.embedding.K->dim();
  for (size_t w = 0; w < quotient.kernel_basis.size(); ++w) {
    const auto v = core::from_dense(quotient.kernel_basis[w]);
    for (int k = 0; k < dk; ++k) {
      const CycScalar s = p.pair(v, k);
      if (!s.is_zero())
        throw AxiomFailure(Witness{"pairing-descends", {static_cast<int>(w), k}, "r(w, k) != 0 for w in K+H", s, {}});
    }
  }
  ExactMatrix rb(quotient.q.dim, dk);
  for (int q = 0; q < quotient.q.dim; ++q)
    for (int k = 0; k < dk; ++k) rb(q, k) = p.pair(quotient.lift.images[q], k);
  return rb;
}

Algebra dequiv_multiplication(const BraidedCentralPair& p, const Cointegral& c, const QuotientCoalgebra& quotient,
                              const LinearMap& j, const ExactMatrix& r_bar) {
  const auto& H = *p.embedding.H;
  const auto& Q = quotient.q;
  const int d = Q.dim;
  std::vector<std::vector<core::CoproductTerm>> dj(d);
  for (int b = 0; b < d; ++b) dj[b] = split(H.coalgebra, j.images[b]);
  Algebra m;
  m.dim = d;
  m.mult.resize(static_cast<size_t>(d) * d);
  m.unit = quotient.nu.apply(H.algebra.unit);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      std::vector<Entry> raw;
      for (const auto& at : Q.delta[a]) {
        const auto& ja = j.images[at.left];
        for (const auto& bt : dj[b]) {
          const CycScalar s = pair_with(r_bar, at.right, c.pi.images[bt.right]);
          if (s.is_zero()) continue;
          const CycScalar w = s * at.coef * bt.coef;
          for (const auto& x : quotient.nu.apply(H.algebra.multiply(ja, basis_vector(bt.left))))
            raw.push_back({x.index, x.value * w});
        }
      }
      m.mult[static_cast<size_t>(a) * d + b] = combine(std::move(raw));
    }
  return m;
}

Tensor3 dequiv_associator(const BraidedCentralPair& p, const Cointegral& c, const LinearMap& j,
                          const ExactMatrix& r_bar, int qdim) {
  const auto& H = *p.embedding.H;
  const int d = qdim;
  std::vector<std::vector<core::CoproductTerm>> dj(d);
  for (int b = 0; b < d; ++b) dj[b] = split(H.coalgebra, j.images[b]);
  Tensor3 omega(d);
  for (int b = 0; b < d; ++b)
    for (int cc = 0; cc < d; ++cc) {
      // v = sum pi(y1 z1) r(y2, pi(z2)) in K; omega(a, b, c) = r(a, v).
      std::vector<Entry> raw;
      for (const auto& yt : dj[b])
        for (const auto& zt : dj[cc]) {
          const CycScalar s = pair_with(p.r, yt.right, c.pi.images[zt.right]);
          if (s.is_zero()) continue;
          const CycScalar w = s * yt.coef * zt.coef;
          for (const auto& x : c.pi.apply(H.algebra.product(yt.left, zt.left))) raw.push_back({x.index, x.value * w});
        }
      const auto v = combine(std::move(raw));
      if (v.empty()) continue;
      for (int a = 0; a < d; ++a) omega.at(a, b, cc) = pair_with(r_bar, a, v);
    }
  return omega;
}

namespace {

void require(const std::string& stage, const CheckReport& r, CheckReport& log) {
  log.append(r);
  if (!r.ok()) throw InputRejected(stage, r);
}

}  // namespace

DequivResult de_equivariantize(const BraidedCentralPair& p, const Cointegral& c, const DequivOptions& opt) {
  const auto& H = *p.embedding.H;
  const auto& K = *p.embedding.K;
  if (c.embedding.H != p.embedding.H || c.embedding.K != p.embedding.K ||
      c.embedding.inclusion != p.embedding.inclusion)
    throw std::invalid_argument("pairing and cointegral refer to different embeddings");
  DequivResult out;
  if (opt.check_inputs) {
    require("hopf(H)", core::check_hopf(H, opt.check), out.input_checks);
    require("hopf(K)", core::check_hopf(K, opt.check), out.input_checks);
    require("embedding", braided::check_embedding(p.embedding, opt.check), out.input_checks);
    require("pairing", braided::check_pairing(p, opt.check), out.input_checks);
    require("pairing-absorbs", braided::check_pairing_absorbs_subalgebra(p, opt.check), out.input_checks);
    require("cointegral", braided::check_cointegral(c, opt.check), out.input_checks);
  }
  if (!braided::is_normalized(c))
    throw AxiomFailure(Witness{"cointegral-normalized", {}, "requires eps pi = eps and pi(1) = 1", {}, {}});

  out.kplus_h = kplus_h_subspace(p.embedding);
  const auto quotient = core::quotient_coalgebra(H.coalgebra, out.kplus_h, opt.lifts);
  out.nu = quotient.nu;
  out.j = build_section(c, quotient);
  out.r_bar = induced_pairing(p, quotient);
  const int d = quotient.q.dim;

  const auto one = quotient.nu.apply(H.algebra.unit);
  if (out.j.apply(one) != H.algebra.unit) throw AxiomFailure(Witness{"section", {}, "j(1) != 1", {}, {}});
  for (int q = 0; q < d; ++q)
    if (!(H.coalgebra.counit_of(out.j.images[q]) == quotient.q.counit[q]))
      throw AxiomFailure(Witness{"section", {q}, "eps(j(q)) != eps(q)", {}, {}});
  for (int h = 0; h < H.dim(); ++h)
    for (int k = 0; k < K.dim(); ++k) {
      CycScalar s;
      for (const auto& e : quotient.nu.images[h]) s.add_product(e.value, out.r_bar(e.index, k));
      if (!(s == p.r(h, k)))
        throw AxiomFailure(Witness{"pairing-descends", {h, k}, "r(nu(h), k) != r(h, k)", {}, {}});
    }

  auto m = dequiv_multiplication(p, c, quotient, out.j, out.r_bar);
  auto omega = dequiv_associator(p, c, out.j, out.r_bar, d);
  out.Q = core::make_coquasi(quotient.q, std::move(m), std::move(omega));
  out.hopf = out.Q.has_trivial_associator();
  out.free = static_cast<long>(d) * K.dim() == H.dim();
  out.certification = core::check_coquasi(out.Q, opt.check);
  if (!out.certification.ok()) throw EngineInconsistency(out.certification);
  return out;
}

}  // namespace dequiv::engine
