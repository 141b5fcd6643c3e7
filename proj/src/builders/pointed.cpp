#include "dequiv/builders/pointed.hpp"

#include <numeric>
#include <string>

#include "dequiv/core/checks.hpp"

namespace dequiv::builders {

using core::AxiomFailure;
using core::Entry;
using core::SparseVector;
using core::basis_vector;
using core::combine;

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

/// Exponent k with chi(g) = zeta_N^k for a character given by exponents.
long char_exponent(const FiniteGroup& gamma, const std::vector<long>& phi, int g, long N) {
  const auto a = gamma.exponents(g);
  long k = 0;
  for (size_t i = 0; i < a.size(); ++i) k += phi[i] * a[i];
  return mod(k, N);
}

void require_character(const QuantumLinearSpaceData& d, const std::vector<long>& phi, const std::string& what) {
  if (phi.size() != d.gamma.size()) throw DatumRejected(what + ": one exponent per generator of Gamma expected");
  for (size_t k = 0; k < phi.size(); ++k)
    if (mod(phi[k] * d.gamma[k], d.conductor) != 0)
      throw DatumRejected(what + ": not a character (value on generator " + std::to_string(k + 1) +
                          " has order not dividing its factor)");
}

/// Product in H (x) H on pair-indexed sparse vectors.
SparseVector tensor_mul(const core::Algebra& a, const SparseVector& u, const SparseVector& v) {
  const int d = a.dim;
  std::vector<Entry> raw;
  for (const auto& x : u)
    for (const auto& y : v) {
      const auto& l = a.product(x.index / d, y.index / d);
      if (l.empty()) continue;
      const auto& r = a.product(x.index % d, y.index % d);
      if (r.empty()) continue;
      const CycScalar s = x.value * y.value;
      for (const auto& p : l)
        for (const auto& q : r) raw.push_back({p.index * d + q.index, s * p.value * q.value});
    }
  return combine(std::move(raw));
}

}  // namespace

int QuantumLinearSpace::index(int g, const std::vector<int>& b) const {
  int mono = 0;
  for (int i = rank(); i-- > 0;) mono = mono * nilpotency[i] + b[i];
  return g * monomials + mono;
}

std::vector<int> QuantumLinearSpace::exponents(int idx) const {
  int mono = idx % monomials;
  std::vector<int> b(rank());
  for (int i = 0; i < rank(); ++i) {
    b[i] = mono % nilpotency[i];
    mono /= nilpotency[i];
  }
  return b;
}

CycScalar QuantumLinearSpace::character(const std::vector<long>& phi, int g) const {
  return exact::cyc_root(data.conductor, char_exponent(gamma, phi, g, data.conductor));
}

CycScalar QuantumLinearSpace::chi(int i, int g) const { return character(data.characters[i], g); }

QuantumLinearSpace quantum_linear_space(const QuantumLinearSpaceData& data) {
  QuantumLinearSpace h;
  h.data = data;
  h.gamma = FiniteGroup::abelian(data.gamma);
  const long N = data.conductor;
  if (N < 1) throw DatumRejected("conductor must be positive");
  const int t = static_cast<int>(data.grouplikes.size());
  if (static_cast<int>(data.characters.size()) != t) throw DatumRejected("one character per generator x_i expected");
  std::vector<int> g(t);
  for (int i = 0; i < t; ++i) {
    if (data.grouplikes[i].size() != data.gamma.size()) throw DatumRejected("grouplike exponent vector has the wrong length");
    g[i] = h.gamma.from_exponents(data.grouplikes[i]);
    require_character(data, data.characters[i], "chi_" + std::to_string(i + 1));
  }
  // ce[i][gamma] = exponent of chi_i(gamma)
  std::vector<std::vector<long>> ce(t, std::vector<long>(h.gamma.order));
  for (int i = 0; i < t; ++i)
    for (int a = 0; a < h.gamma.order; ++a) ce[i][a] = char_exponent(h.gamma, data.characters[i], a, N);
  for (int i = 0; i < t; ++i) {
    const long e = ce[i][g[i]];
    const int Ni = static_cast<int>(N / std::gcd(N, e == 0 ? N : e));
    if (Ni < 2) throw DatumRejected("chi_" + std::to_string(i + 1) + "(g_" + std::to_string(i + 1) + ") = 1: x_" +
                                    std::to_string(i + 1) + " would not be nilpotent");
    h.nilpotency.push_back(Ni);
    h.monomials *= Ni;
    for (int j = 0; j < t; ++j)
      if (j != i && mod(ce[i][g[j]] + ce[j][g[i]], N) != 0)
        throw DatumRejected("chi_" + std::to_string(i + 1) + "(g_" + std::to_string(j + 1) + ") chi_" +
                            std::to_string(j + 1) + "(g_" + std::to_string(i + 1) + ") != 1");
  }
  std::vector<CycScalar> roots;
  for (long k = 0; k < N; ++k) roots.push_back(exact::cyc_root(N, k));

  auto H = std::make_shared<core::HopfAlgebra>();
  const int M = h.monomials;
  const int d = h.gamma.order * M;
  auto& c = H->coalgebra;
  auto& m = H->algebra;
  c.dim = d;
  c.conductor = static_cast<unsigned>(N);
  m.dim = d;
  m.mult.resize(static_cast<size_t>(d) * d);
  m.unit = basis_vector(h.index(h.gamma.identity, std::vector<int>(t, 0)));
  for (int x = 0; x < d; ++x) {
    const int gx = x / M;
    const auto bx = h.exponents(x);
    std::string label = h.gamma.labels[gx];
    std::string mono;
    for (int i = t; i-- > 0;)
      if (bx[i]) {
        if (!mono.empty()) mono += " ";
        mono += (t == 1 ? std::string("x") : "x" + std::to_string(i + 1)) + (bx[i] > 1 ? "^" + std::to_string(bx[i]) : "");
      }
    if (!mono.empty()) label = label == "1" ? mono : label + " " + mono;
    c.labels.push_back(label);
    for (int y = 0; y < d; ++y) {
      const int gy = y / M;
      const auto by = h.exponents(y);
      bool zero = false;
      std::vector<int> sum(t);
      for (int i = 0; i < t && !zero; ++i) {
        sum[i] = bx[i] + by[i];
        zero = sum[i] >= h.nilpotency[i];
      }
      if (zero) continue;
      long e = 0;
      for (int i = 0; i < t; ++i) e -= bx[i] * ce[i][gy];
      for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) e += static_cast<long>(bx[i]) * by[j] * ce[j][g[i]];
      m.mult[static_cast<size_t>(x) * d + y] = basis_vector(h.index(h.gamma.mul(gx, gy), sum), roots[mod(e, N)]);
    }
  }
  // Coproduct: Delta(gamma) Delta(x_t)^{b_t} ... Delta(x_1)^{b_1} in H (x) H.
  const std::vector<int> zero(t, 0);
  const int one = h.index(h.gamma.identity, zero);
  std::vector<SparseVector> dx(t);
  for (int i = 0; i < t; ++i) {
    std::vector<int> e(t, 0);
    e[i] = 1;
    const int xi = h.index(h.gamma.identity, e);
    dx[i] = combine({{xi * d + h.index(g[i], zero), CycScalar(1)}, {one * d + xi, CycScalar(1)}});
  }
  c.delta.resize(d);
  c.counit.resize(d);
  for (int x = 0; x < d; ++x) {
    const int gx = x / M;
    const auto bx = h.exponents(x);
    const int gi = h.index(gx, zero);
    SparseVector acc = basis_vector(gi * d + gi);
    for (int i = t; i-- > 0;)
      for (int k = 0; k < bx[i]; ++k) acc = tensor_mul(m, acc, dx[i]);
    for (const auto& e : acc) c.delta[x].push_back({e.index / d, e.index % d, e.value});
    c.counit[x] = x % M == 0 ? CycScalar(1) : CycScalar();
  }
  // Antipode: S(gamma x_t^{b_t} ... x_1^{b_1}) = S(x_1)^{b_1} ... S(x_t)^{b_t} gamma^-1.
  std::vector<SparseVector> sx(t);
  for (int i = 0; i < t; ++i) {
    std::vector<int> e(t, 0);
    e[i] = 1;
    sx[i] = core::scaled(m.product(h.index(h.gamma.identity, e), h.index(h.gamma.inverse[g[i]], zero)), CycScalar(-1));
  }
  H->antipode = core::LinearMap{d, d, {}};
  for (int x = 0; x < d; ++x) {
    const auto bx = h.exponents(x);
    SparseVector acc = m.unit;
    for (int i = 0; i < t; ++i)
      for (int k = 0; k < bx[i]; ++k) acc = m.multiply(acc, sx[i]);
    acc = m.multiply(acc, basis_vector(h.index(h.gamma.inverse[x / M], zero)));
    H->antipode.images.push_back(std::move(acc));
  }
  const auto report = core::check_hopf(*H);
  if (!report.ok()) throw AxiomFailure(*report.witness());
  h.H = std::move(H);
  return h;
}

ValidatedDatum validate_datum(const QuantumLinearSpace& h, const PhiDatum& datum) {
  if (datum.generators.size() != datum.phi.size()) throw DatumRejected("one Phi value per G generator expected");
  const long N = h.data.conductor;
  ValidatedDatum v;
  for (size_t l = 0; l < datum.generators.size(); ++l) {
    if (datum.generators[l].size() != h.data.gamma.size()) throw DatumRejected("G generator has the wrong length");
    v.generator_indices.push_back(h.gamma.from_exponents(datum.generators[l]));
    require_character(h.data, datum.phi[l], "Phi(G generator " + std::to_string(l + 1) + ")");
  }
  v.G = Subgroup::generated(h.gamma, v.generator_indices);
  const int ng = v.G.group.order;
  const size_t nf = h.data.gamma.size();
  // Walk the Cayley graph; every edge must satisfy Phi(x g_l) = Phi(x) Phi(g_l).
  std::vector<char> seen(ng, 0);
  v.phi_of.assign(ng, std::vector<long>(nf, 0));
  seen[v.G.index_of[h.gamma.identity]] = 1;
  std::vector<int> frontier{h.gamma.identity};
  auto same_character = [&](const std::vector<long>& a, const std::vector<long>& b) {
    for (int g = 0; g < h.gamma.order; ++g)
      if (char_exponent(h.gamma, a, g, N) != char_exponent(h.gamma, b, g, N)) return false;
    return true;
  };
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (size_t l = 0; l < v.generator_indices.size(); ++l) {
        const int y = h.gamma.mul(x, v.generator_indices[l]);
        std::vector<long> phi_y = v.phi_of[v.G.index_of[x]];
        for (size_t k = 0; k < nf; ++k) phi_y[k] = mod(phi_y[k] + datum.phi[l][k], N);
        const int iy = v.G.index_of[y];
        if (!seen[iy]) {
          seen[iy] = 1;
          v.phi_of[iy] = phi_y;
          next.push_back(y);
        } else if (!same_character(v.phi_of[iy], phi_y)) {
          throw DatumRejected("Phi is not a group morphism on G (inconsistent at " + h.gamma.labels[y] + ")");
        }
      }
    frontier = std::move(next);
  }
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      if (char_exponent(h.gamma, v.phi_of[a], v.G.elements[b], N) != 0)
        throw DatumRejected("<g', Phi(g)> != 1 for g = " + v.G.group.labels[a] + ", g' = " + v.G.group.labels[b]);
  for (int i = 0; i < h.rank(); ++i) {
    const int gi = h.gamma.from_exponents(h.data.grouplikes[i]);
    for (int a = 0; a < ng; ++a)
      if (char_exponent(h.gamma, v.phi_of[a], gi, N) != char_exponent(h.gamma, h.data.characters[i], v.G.elements[a], N))
        throw DatumRejected("g x_" + std::to_string(i + 1) + " g^-1 != <g_" + std::to_string(i + 1) +
                            ", Phi(g)> x_" + std::to_string(i + 1) + " for g = " + v.G.group.labels[a]);
  }
  return v;
}

braided::BraidedCentralPair pointed_pair(const QuantumLinearSpace& h, const PhiDatum& datum) {
  const auto v = validate_datum(h, datum);
  const int ng = v.G.group.order;
  braided::SubalgebraEmbedding e;
  e.H = h.H;
  e.K = std::make_shared<core::HopfAlgebra>(group_algebra(v.G.group, h.data.conductor));
  e.inclusion = core::LinearMap{ng, h.H->dim(), {}};
  const std::vector<int> zero(h.rank(), 0);
  for (int g : v.G.elements) e.inclusion.images.push_back(basis_vector(h.index(g, zero)));
  exact::ExactMatrix r(h.H->dim(), ng);
  for (int x = 0; x < h.H->dim(); ++x) {
    if (!h.is_grouplike_index(x)) continue;
    for (int g = 0; g < ng; ++g) r(x, g) = h.character(v.phi_of[g], h.group_part(x));
  }
  auto p = braided::make_pair(std::move(e), std::move(r));
  const auto report = braided::check_pairing(p);
  if (!report.ok()) throw AxiomFailure(*report.witness());
  return p;
}

namespace {

CosetDecomposition cosets_of(const QuantumLinearSpace& h, const braided::SubalgebraEmbedding& e) {
  std::vector<int> elements;
  for (const auto& img : e.inclusion.images) {
    if (img.size() != 1 || !h.is_grouplike_index(img[0].index))
      throw DatumRejected("subalgebra is not spanned by grouplike basis vectors");
    elements.push_back(h.group_part(img[0].index));
  }
  auto dec = coset_decomposition(h.gamma, elements);
  if (dec.G.elements != elements) throw DatumRejected("subalgebra basis is not in subgroup order");
  return dec;
}

}  // namespace

std::vector<SparseVector> pointed_lifts(const QuantumLinearSpace& h, const CosetDecomposition& dec) {
  std::vector<SparseVector> lifts;
  for (int x = 0; x < h.H->dim(); ++x) {
    const int g = h.group_part(x);
    if (dec.reps[dec.rep_of[g]] == g) lifts.push_back(basis_vector(x));
  }
  return lifts;
}

braided::Cointegral pointed_cointegral(const QuantumLinearSpace& h, const braided::SubalgebraEmbedding& e) {
  const auto dec = cosets_of(h, e);
  core::LinearMap pi{h.H->dim(), e.K->dim(), {}};
  for (int x = 0; x < h.H->dim(); ++x)
    pi.images.push_back(h.is_grouplike_index(x) ? basis_vector(dec.G.index_of[dec.g_part[h.group_part(x)]])
                                                : SparseVector{});
  auto c = braided::make_cointegral(e, std::move(pi));
  const auto report = braided::check_cointegral(c);
  if (!report.ok()) throw AxiomFailure(*report.witness());
  if (!braided::is_normalized(c))
    throw AxiomFailure(core::Witness{"cointegral-normalized", {}, "pointed cointegral is not normalized", {}, {}});
  return c;
}

PointedResult build_A(const QuantumLinearSpace& h, const PhiDatum& datum, const engine::DequivOptions& opt) {
  auto pair = pointed_pair(h, datum);
  auto cointegral = pointed_cointegral(h, pair.embedding);
  auto dec = cosets_of(h, pair.embedding);
  engine::DequivOptions o = opt;
  o.lifts = pointed_lifts(h, dec);
  std::vector<int> idx;
  for (const auto& l : *o.lifts) idx.push_back(l[0].index);
  auto result = engine::de_equivariantize(pair, cointegral, o);
  return PointedResult{std::move(pair), std::move(cointegral), std::move(dec), std::move(idx), std::move(result)};
}

std::set<int> upsilon_prime(int n, const std::vector<long>& b, const std::vector<long>& d) {
  if (n < 1) throw DatumRejected("n must be positive");
  if (b.size() != d.size()) throw DatumRejected("b and d must have the same length");
  std::set<int> out;
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (size_t i = 0; i < b.size() && ok; ++i) ok = mod(b[i] * s - d[i], n) == 0;
    if (ok) out.insert(s);
  }
  return out;
}

QuantumLinearSpaceData cyclic_pointed_data(int n, const std::vector<long>& b, const std::vector<long>& d) {
  if (n < 2) throw DatumRejected("n must be at least 2");
  if (b.size() != d.size()) throw DatumRejected("b and d must have the same length");
  QuantumLinearSpaceData data;
  data.gamma = {n * n};
  data.conductor = static_cast<unsigned>(n * n);
  for (size_t i = 0; i < b.size(); ++i) {
    data.grouplikes.push_back({b[i]});
    data.characters.push_back({d[i]});
  }
  return data;
}

PhiDatum cyclic_phi(int n, long s) { return PhiDatum{{{n}}, {{static_cast<long>(n) * s}}}; }

QuantumLinearSpaceData a1_product_data(int N, int rank) {
  if (N < 2 || rank < 1) throw DatumRejected("need N >= 2 and rank >= 1");
  QuantumLinearSpaceData data;
  data.gamma.assign(rank, N);
  data.conductor = static_cast<unsigned>(N);
  for (int i = 0; i < rank; ++i) {
    std::vector<long> g(rank, 0), chi(rank, 0);
    g[i] = 1;
    chi[i] = 2;  // chi_i(gamma_j) = q_ji
    data.grouplikes.push_back(g);
    data.characters.push_back(chi);
  }
  return data;
}

PhiDatum a1_product_phi(int N, const std::vector<int>& n) {
  const size_t t = n.size();
  for (size_t i = 0; i < t; ++i)
    if (n[i] < 1 || N % n[i] != 0) throw DatumRejected("n_" + std::to_string(i + 1) + " must divide N");
  for (size_t i = 0; i < t; ++i)
    for (size_t j = 0; j < t; ++j)
      if (n[j] % (N / n[i]) != 0)
        throw DatumRejected("m_" + std::to_string(i + 1) + " = " + std::to_string(N / n[i]) + " does not divide n_" +
                            std::to_string(j + 1) + " = " + std::to_string(n[j]));
  PhiDatum datum;
  for (size_t i = 0; i < t; ++i) {
    std::vector<long> g(t, 0), phi(t, 0);
    g[i] = n[i];
    phi[i] = 2L * n[i];
    datum.generators.push_back(g);
    datum.phi.push_back(phi);
  }
  return datum;
}

}  // namespace dequiv::builders
