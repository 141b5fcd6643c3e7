#include "dequiv/builders/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dequiv/core/checks.hpp"

namespace dequiv::builders {

using core::AxiomFailure;
using core::Witness;

int FiniteGroup::pow(int a, long k) const {
  const int n = element_order(a);
  k %= n;
  if (k < 0) k += n;
  int x = identity;
  for (long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != identity) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::exponents(int a) const {
  if (factors.empty()) throw std::logic_error("exponents: group is not in invariant-factor form");
  std::vector<int> e(factors.size());
  for (size_t k = factors.size(); k-- > 0;) {
    e[k] = a % factors[k];
    a /= factors[k];
  }
  return e;
}

int FiniteGroup::from_exponents(const std::vector<long>& e) const {
  if (e.size() != factors.size()) throw std::invalid_argument("exponent vector has the wrong length");
  int idx = 0;
  for (size_t k = 0; k < factors.size(); ++k) {
    long v = e[k] % factors[k];
    if (v < 0) v += factors[k];
    idx = idx * factors[k] + static_cast<int>(v);
  }
  return idx;
}

FiniteGroup FiniteGroup::cyclic(int n, const std::string& gen) { return abelian({n}, gen); }

FiniteGroup FiniteGroup::abelian(const std::vector<int>& factors, const std::string& gen) {
  if (factors.empty()) throw std::invalid_argument("abelian group needs at least one factor");
  FiniteGroup g;
  g.factors = factors;
  g.order = 1;
  for (int f : factors) {
    if (f < 1) throw std::invalid_argument("invariant factors must be positive");
    g.order *= f;
  }
  g.table.resize(static_cast<size_t>(g.order) * g.order);
  g.inverse.resize(g.order);
  for (int a = 0; a < g.order; ++a) {
    const auto ea = g.exponents(a);
    std::vector<long> neg(ea.size());
    for (size_t k = 0; k < ea.size(); ++k) neg[k] = -ea[k];
    g.inverse[a] = g.from_exponents(neg);
    for (int b = 0; b < g.order; ++b) {
      const auto eb = g.exponents(b);
      std::vector<long> s(ea.size());
      for (size_t k = 0; k < ea.size(); ++k) s[k] = ea[k] + eb[k];
      g.table[static_cast<size_t>(a) * g.order + b] = g.from_exponents(s);
    }
    std::string label;
    for (size_t k = 0; k < ea.size(); ++k) {
      if (ea[k] == 0) continue;
      if (!label.empty()) label += "*";
      label += factors.size() == 1 ? gen : gen + std::to_string(k + 1);
      if (ea[k] != 1) label += "^" + std::to_string(ea[k]);
    }
    g.labels.push_back(label.empty() ? "1" : label);
  }
  return g;
}

FiniteGroup FiniteGroup::dihedral4() {
  std::vector<int> table(64);
  std::vector<std::string> labels;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) {
      std::string l = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      if (j) l += "s";
      labels.push_back(l.empty() ? "1" : l);
    }
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int i = a % 4, j = a / 4, k = b % 4, l = b / 4;
      const int rot = ((i + (j ? -k : k)) % 4 + 4) % 4;
      table[a * 8 + b] = ((j + l) % 2) * 4 + rot;
    }
  return from_table(8, std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::from_table(int order, std::vector<int> table, std::vector<std::string> labels) {
  if (order < 1 || table.size() != static_cast<size_t>(order) * order)
    throw std::invalid_argument("group table has the wrong size");
  FiniteGroup g;
  g.order = order;
  g.table = std::move(table);
  for (int x : g.table)
    if (x < 0 || x >= order) throw std::invalid_argument("group table entry out of range");
  g.identity = -1;
  for (int e = 0; e < order && g.identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) g.identity = e;
  }
  if (g.identity < 0) throw std::invalid_argument("group table has no identity");
  g.inverse.assign(order, -1);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) g.inverse[a] = b;
  if (labels.empty())
    for (int a = 0; a < order; ++a) labels.push_back("e" + std::to_string(a));
  g.labels = std::move(labels);
  g.validate();
  return g;
}

void FiniteGroup::validate() const {
  if (labels.size() != static_cast<size_t>(order)) throw std::invalid_argument("group labels have the wrong size");
  for (int a = 0; a < order; ++a) {
    if (inverse[a] < 0) throw std::invalid_argument("group element " + labels[a] + " has no inverse");
    if (mul(a, identity) != a || mul(identity, a) != a) throw std::invalid_argument("identity law fails");
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("group table is not associative at (" + labels[a] + "," + labels[b] + "," +
                                      labels[c] + ")");
  }
}

Subgroup Subgroup::generated(const FiniteGroup& ambient, const std::vector<int>& generators) {
  std::vector<char> in(ambient.order, 0);
  std::vector<int> frontier{ambient.identity};
  in[ambient.identity] = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : generators) {
        const int y = ambient.mul(x, g);
        if (!in[y]) {
          in[y] = 1;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  Subgroup s;
  s.index_of.assign(ambient.order, -1);
  for (int a = 0; a < ambient.order; ++a)
    if (in[a]) {
      s.index_of[a] = static_cast<int>(s.elements.size());
      s.elements.push_back(a);
    }
  const int n = static_cast<int>(s.elements.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(ambient.labels[s.elements[i]]);
    for (int j = 0; j < n; ++j) table[i * n + j] = s.index_of[ambient.mul(s.elements[i], s.elements[j])];
  }
  s.group = FiniteGroup::from_table(n, std::move(table), std::move(labels));
  return s;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

HopfAlgebra group_algebra(const FiniteGroup& g, unsigned conductor) {
  HopfAlgebra h;
  auto& c = h.coalgebra;
  c.dim = g.order;
  c.conductor = conductor;
  c.labels = g.labels;
  c.delta.resize(g.order);
  c.counit.assign(g.order, CycScalar(1));
  h.algebra.dim = g.order;
  h.algebra.mult.resize(static_cast<size_t>(g.order) * g.order);
  h.algebra.unit = core::basis_vector(g.identity);
  h.antipode = core::LinearMap{g.order, g.order, {}};
  for (int a = 0; a < g.order; ++a) {
    c.delta[a] = {{a, a, CycScalar(1)}};
    h.antipode.images.push_back(core::basis_vector(g.inverse[a]));
    for (int b = 0; b < g.order; ++b) h.algebra.mult[static_cast<size_t>(a) * g.order + b] = core::basis_vector(g.mul(a, b));
  }
  return h;
}

FiniteGroup CosetDecomposition::quotient_group() const {
  std::vector<std::string> labels;
  for (int r : reps) labels.push_back(gamma->labels[r]);
  return FiniteGroup::from_table(count(), dot, std::move(labels));
}

CosetDecomposition coset_decomposition(const FiniteGroup& gamma, const std::vector<int>& subgroup_generators) {
  CosetDecomposition d;
  d.gamma = &gamma;
  d.G = Subgroup::generated(gamma, subgroup_generators);
  for (int g : d.G.elements)
    for (int a = 0; a < gamma.order; ++a)
      if (gamma.mul(g, a) != gamma.mul(a, g))
        throw std::invalid_argument("subgroup is not central: " + gamma.labels[g] + " does not commute with " +
                                    gamma.labels[a]);
  d.rep_of.assign(gamma.order, -1);
  d.g_part.assign(gamma.order, -1);
  for (int a = 0; a < gamma.order; ++a) {
    if (d.rep_of[a] >= 0) continue;
    const int pos = d.count();
    d.reps.push_back(a);
    for (int g : d.G.elements) {
      const int x = gamma.mul(g, a);
      d.rep_of[x] = pos;
      d.g_part[x] = g;
    }
  }
  const int t = d.count();
  d.dot.resize(static_cast<size_t>(t) * t);
  d.theta.resize(static_cast<size_t>(t) * t);
  for (int p = 0; p < t; ++p)
    for (int q = 0; q < t; ++q) {
      const int pq = gamma.mul(d.reps[p], d.reps[q]);
      d.dot[p * t + q] = d.rep_of[pq];
      d.theta[p * t + q] = d.g_part[pq];
    }
  for (int p = 0; p < t; ++p)
    for (int q = 0; q < t; ++q)
      for (int s = 0; s < t; ++s) {
        const int lhs = gamma.mul(d.theta_at(p, q), d.theta_at(d.dot_at(p, q), s));
        const int rhs = gamma.mul(d.theta_at(q, s), d.theta_at(p, d.dot_at(q, s)));
        if (lhs != rhs) throw AxiomFailure(Witness{"coset-cocycle", {p, q, s}, "theta is not a 2-cocycle", {}, {}});
      }
  return d;
}

BicharacterTable bicharacter_from_generators(const FiniteGroup& gamma, const Subgroup& G,
                                             const std::vector<int>& g_generators, unsigned conductor,
                                             const std::vector<std::vector<long>>& e) {
  if (gamma.factors.empty()) throw std::invalid_argument("bicharacter_from_generators needs an abelian group");
  if (e.size() != gamma.factors.size()) throw std::invalid_argument("one exponent row per Gamma generator expected");
  for (const auto& row : e)
    if (row.size() != g_generators.size()) throw std::invalid_argument("one exponent per G generator expected");
  // Express every element of G as a word in its generators.
  const int ng = G.group.order;
  std::vector<std::vector<long>> word(ng);
  std::vector<char> seen(ng, 0);
  word[0] = std::vector<long>(g_generators.size(), 0);
  seen[G.index_of[gamma.identity]] = 1;
  word[G.index_of[gamma.identity]] = word[0];
  std::vector<int> frontier{gamma.identity};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (size_t l = 0; l < g_generators.size(); ++l) {
        const int y = gamma.mul(x, g_generators[l]);
        const int iy = G.index_of[y];
        if (iy < 0) throw std::invalid_argument("G generator outside G");
        if (seen[iy]) continue;
        seen[iy] = 1;
        word[iy] = word[G.index_of[x]];
        ++word[iy][l];
        next.push_back(y);
      }
    frontier = std::move(next);
  }
  BicharacterTable r(static_cast<size_t>(gamma.order) * ng);
  for (int a = 0; a < gamma.order; ++a) {
    const auto ea = gamma.exponents(a);
    for (int g = 0; g < ng; ++g) {
      long k = 0;
      for (size_t i = 0; i < ea.size(); ++i)
        for (size_t l = 0; l < g_generators.size(); ++l) k += ea[i] * word[g][l] * e[i][l];
      r[static_cast<size_t>(a) * ng + g] = exact::cyc_root(conductor, k);
    }
  }
  return r;
}

namespace {

braided::SubalgebraEmbedding group_embedding(const FiniteGroup& gamma, const Subgroup& G, unsigned conductor) {
  braided::SubalgebraEmbedding e;
  e.H = std::make_shared<HopfAlgebra>(group_algebra(gamma, conductor));
  e.K = std::make_shared<HopfAlgebra>(group_algebra(G.group, conductor));
  e.inclusion = core::LinearMap{G.group.order, gamma.order, {}};
  for (int g : G.elements) e.inclusion.images.push_back(core::basis_vector(g));
  return e;
}

}  // namespace

braided::BraidedCentralPair bicharacter_pair(const FiniteGroup& gamma, const Subgroup& G, const BicharacterTable& r,
                                             unsigned conductor) {
  const int ng = G.group.order;
  if (r.size() != static_cast<size_t>(gamma.order) * ng) throw std::invalid_argument("bicharacter table has the wrong size");
  auto at = [&](int a, int g) -> const CycScalar& { return r[static_cast<size_t>(a) * ng + g]; };
  for (int a = 0; a < gamma.order; ++a)
    for (int b = 0; b < gamma.order; ++b)
      for (int g = 0; g < ng; ++g)
        if (!(at(gamma.mul(a, b), g) == at(a, g) * at(b, g)))
          throw AxiomFailure(Witness{"bicharacter-left", {a, b, g}, "r(ab, g) != r(a, g) r(b, g)",
                                     at(gamma.mul(a, b), g), at(a, g) * at(b, g)});
  for (int a = 0; a < gamma.order; ++a)
    for (int g = 0; g < ng; ++g)
      for (int h = 0; h < ng; ++h)
        if (!(at(a, G.group.mul(g, h)) == at(a, g) * at(a, h)))
          throw AxiomFailure(Witness{"bicharacter-right", {a, g, h}, "r(a, gh) != r(a, g) r(a, h)",
                                     at(a, G.group.mul(g, h)), at(a, g) * at(a, h)});
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      if (!at(G.elements[g], h).is_one())
        throw AxiomFailure(Witness{"bicharacter-restriction", {G.elements[g], h}, "r restricted to G x G is not 1",
                                   at(G.elements[g], h), CycScalar(1)});
  auto e = group_embedding(gamma, G, conductor);
  exact::ExactMatrix m(gamma.order, ng);
  for (int a = 0; a < gamma.order; ++a)
    for (int g = 0; g < ng; ++g) m(a, g) = at(a, g);
  auto p = braided::make_pair(std::move(e), std::move(m));
  const auto report = braided::check_pairing(p, {.threads = 1});
  if (!report.ok()) throw AxiomFailure(*report.witness());
  return p;
}

braided::Cointegral grouplike_cointegral(const braided::SubalgebraEmbedding& e, const CosetDecomposition& dec) {
  core::LinearMap pi{e.H->dim(), e.K->dim(), {}};
  for (int a = 0; a < dec.gamma->order; ++a) pi.images.push_back(core::basis_vector(dec.G.index_of[dec.g_part[a]]));
  return braided::make_cointegral(e, std::move(pi));
}

core::CoquasiBialgebra baby_example_closed_form(const CosetDecomposition& dec, const BicharacterTable& r,
                                                unsigned conductor) {
  const int t = dec.count();
  const int ng = dec.G.group.order;
  const FiniteGroup quotient = dec.quotient_group();
  HopfAlgebra h = group_algebra(quotient, conductor);
  core::Tensor3 omega(t);
  for (int u = 0; u < t; ++u)
    for (int v = 0; v < t; ++v)
      for (int w = 0; w < t; ++w)
        omega.at(u, v, w) = r[static_cast<size_t>(dec.reps[u]) * ng + dec.G.index_of[dec.theta_at(v, w)]];
  core::QuasiAntipode qa;
  qa.antipode = h.antipode;
  qa.alpha = h.coalgebra.counit;
  for (int u = 0; u < t; ++u) qa.beta.push_back(omega.at(u, quotient.inverse[u], u).inverse());
  auto q = core::make_coquasi(h.coalgebra, h.algebra, std::move(omega), std::move(qa));
  auto report = core::check_coquasi(q, {.threads = 1});
  if (!report.ok()) throw AxiomFailure(*report.witness());
  report = core::check_quasi_antipode(q, {.threads = 1});
  if (!report.ok()) throw AxiomFailure(*report.witness());
  return q;
}

}  // namespace dequiv::builders
