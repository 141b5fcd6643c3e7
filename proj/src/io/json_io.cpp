#include "dequiv/io/json_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dequiv/exact/cyclotomic.hpp"

namespace dequiv::io {

using core::Entry;
using core::SparseVector;
using exact::ExactMatrix;
using exact::Rational;

InputError::InputError(std::string pointer, const std::string& message)
    : std::runtime_error(message + (pointer.empty() ? "" : " (at " + pointer + ")")),
      pointer_(std::move(pointer)),
      message_(message) {}

std::string InputError::located() const {
  std::string out = file.empty() ? "<input>" : file;
  if (line > 0) out += ":" + std::to_string(line) + ":" + std::to_string(column);
  return out + ": " + what();
}

// ---------------------------------------------------------------------------
// Locating a JSON pointer in source text.

namespace {

struct Scanner {
  const std::string& s;
  size_t p = 0;

  void ws() {
    while (p < s.size() && (s[p] == ' ' || s[p] == '\n' || s[p] == '\r' || s[p] == '\t')) ++p;
  }
  std::string string() {
    std::string out;
    ++p;  // opening quote
    while (p < s.size() && s[p] != '"') {
      if (s[p] == '\\' && p + 1 < s.size()) {
        ++p;
        out += s[p] == 'n' ? '\n' : s[p] == 't' ? '\t' : s[p];
      } else {
        out += s[p];
      }
      ++p;
    }
    ++p;
    return out;
  }
  void skip_value() {
    ws();
    if (p >= s.size()) return;
    const char c = s[p];
    if (c == '"') {
      string();
    } else if (c == '{' || c == '[') {
      const char close = c == '{' ? '}' : ']';
      ++p;
      ws();
      if (p < s.size() && s[p] == close) {
        ++p;
        return;
      }
      while (p < s.size()) {
        if (c == '{') {
          ws();
          string();
          ws();
          ++p;  // ':'
        }
        skip_value();
        ws();
        if (p < s.size() && s[p] == ',') {
          ++p;
          continue;
        }
        ++p;  // close
        return;
      }
    } else {
      while (p < s.size() && s[p] != ',' && s[p] != '}' && s[p] != ']' && s[p] != ' ' && s[p] != '\n') ++p;
    }
  }
};

std::vector<std::string> pointer_tokens(const std::string& pointer) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < pointer.size()) {
    const size_t j = pointer.find('/', i + 1);
    std::string tok = pointer.substr(i + 1, j == std::string::npos ? std::string::npos : j - i - 1);
    std::string un;
    for (size_t k = 0; k < tok.size(); ++k) {
      if (tok[k] == '~' && k + 1 < tok.size()) {
        un += tok[k + 1] == '1' ? '/' : '~';
        ++k;
      } else {
        un += tok[k];
      }
    }
    out.push_back(un);
    if (j == std::string::npos) break;
    i = j;
  }
  return out;
}

}  // namespace

std::pair<int, int> locate(const std::string& text, const std::string& pointer) {
  Scanner sc{text};
  sc.ws();
  for (const auto& tok : pointer_tokens(pointer)) {
    if (sc.p >= text.size()) return {0, 0};
    if (text[sc.p] == '{') {
      ++sc.p;
      bool found = false;
      while (sc.p < text.size()) {
        sc.ws();
        if (text[sc.p] == '}') break;
        const std::string key = sc.string();
        sc.ws();
        ++sc.p;  // ':'
        sc.ws();
        if (key == tok) {
          found = true;
          break;
        }
        sc.skip_value();
        sc.ws();
        if (sc.p < text.size() && text[sc.p] == ',') ++sc.p;
      }
      if (!found) return {0, 0};
    } else if (text[sc.p] == '[') {
      ++sc.p;
      long n = 0;
      try {
        n = std::stol(tok);
      } catch (...) {
        return {0, 0};
      }
      for (long i = 0; i < n; ++i) {
        sc.skip_value();
        sc.ws();
        if (sc.p >= text.size() || text[sc.p] != ',') return {0, 0};
        ++sc.p;
      }
      sc.ws();
    } else {
      return {0, 0};
    }
  }
  int line = 1, col = 1;
  for (size_t i = 0; i < sc.p && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// ---------------------------------------------------------------------------
// Documents.

std::string Document::kind() const {
  if (!value.is_object() || !value.contains("kind") || !value["kind"].is_string())
    throw InputError("/kind", "document has no \"kind\" string");
  return value["kind"].get<std::string>();
}

Document parse_document(std::string text, std::filesystem::path path) {
  Document d;
  d.path = std::move(path);
  try {
    d.value = json::parse(text);
  } catch (const json::parse_error& e) {
    InputError err("", std::string("JSON syntax error: ") + e.what());
    err.file = d.path.string();
    // nlohmann reports a byte offset; convert it.
    int line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    err.line = line;
    err.column = col;
    throw err;
  }
  d.text = std::move(text);
  return d;
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    InputError err("", "cannot open file");
    err.file = path.string();
    throw err;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

// ---------------------------------------------------------------------------
// Field helpers.

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& msg) { throw InputError(ptr, msg); }

const json& member(const json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) fail(ptr, "expected an object");
  if (!j.contains(key)) fail(ptr, std::string("missing field \"") + key + "\"");
  return j[key];
}

long integer(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) fail(ptr, "expected an integer");
  return j.get<long>();
}

int index_in(const json& j, const std::string& ptr, int bound) {
  const long v = integer(j, ptr);
  if (v < 0 || v >= bound) fail(ptr, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<int>(v);
}

const json& array(const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array");
  return j;
}

std::string at(const std::string& ptr, size_t i) { return ptr + "/" + std::to_string(i); }
std::string at(const std::string& ptr, const char* key) { return ptr + "/" + key; }

Rational rational(const json& j, const std::string& ptr) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    fail(ptr, "rational must be a pair of decimal strings [\"p\", \"q\"]");
  mpz_class p, q;
  if (p.set_str(j[0].get<std::string>(), 10) != 0) fail(at(ptr, size_t{0}), "malformed numerator");
  if (q.set_str(j[1].get<std::string>(), 10) != 0) fail(at(ptr, size_t{1}), "malformed denominator");
  if (q <= 0) fail(at(ptr, size_t{1}), "denominator must be positive");
  Rational r(p, q);
  r.canonicalize();
  if (r.get_num() != p || r.get_den() != q) fail(ptr, "rational is not in lowest terms");
  return r;
}

/// (tuple of `arity` indices in range, scalar) entries.
template <class Fn>
void entries(const json& j, const std::string& ptr, std::vector<int> bounds, Fn&& fn) {
  array(j, ptr);
  std::set<std::vector<int>> seen;
  for (size_t n = 0; n < j.size(); ++n) {
    const auto p = at(ptr, n);
    const auto& e = j[n];
    if (!e.is_array() || e.size() != bounds.size() + 1)
      fail(p, "expected [" + std::to_string(bounds.size()) + " indices, scalar]");
    std::vector<int> idx;
    for (size_t k = 0; k < bounds.size(); ++k) idx.push_back(index_in(e[k], at(p, k), bounds[k]));
    if (!seen.insert(idx).second) fail(p, "duplicate entry");
    fn(idx, scalar_from_json(e[bounds.size()], at(p, bounds.size())));
  }
}

std::vector<std::string> labels_from(const json& j, const std::string& ptr, int dim) {
  std::vector<std::string> out;
  if (!j.contains("labels")) {
    for (int i = 0; i < dim; ++i) out.push_back("e" + std::to_string(i));
    return out;
  }
  const auto& l = array(j["labels"], at(ptr, "labels"));
  if (static_cast<int>(l.size()) != dim) fail(at(ptr, "labels"), "expected one label per basis vector");
  for (size_t i = 0; i < l.size(); ++i) {
    if (!l[i].is_string()) fail(at(at(ptr, "labels"), i), "label must be a string");
    out.push_back(l[i].get<std::string>());
  }
  return out;
}

json vector_entries(const SparseVector& v, unsigned conductor) {
  json out = json::array();
  for (const auto& e : v) out.push_back({e.index, scalar_to_json(e.value, conductor)});
  return out;
}

SparseVector vector_from(const json& j, const std::string& ptr, int dim) {
  std::vector<Entry> raw;
  entries(j, ptr, {dim}, [&](const std::vector<int>& i, CycScalar s) { raw.push_back({i[0], std::move(s)}); });
  return core::combine(std::move(raw));
}

json coalgebra_fields(const core::Coalgebra& c) {
  const unsigned n = c.conductor;
  json j;
  j["dim"] = c.dim;
  j["labels"] = c.labels;
  j["field"] = {{"conductor", n}};
  json delta = json::array();
  for (int i = 0; i < c.dim; ++i) {
    auto terms = c.delta[i];
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      return std::pair(a.left, a.right) < std::pair(b.left, b.right);
    });
    for (const auto& t : terms)
      if (!t.coef.is_zero()) delta.push_back({i, t.left, t.right, scalar_to_json(t.coef, n)});
  }
  j["delta"] = delta;
  json counit = json::array();
  for (int i = 0; i < c.dim; ++i)
    if (!c.counit[i].is_zero()) counit.push_back({i, scalar_to_json(c.counit[i], n)});
  j["counit"] = counit;
  return j;
}

json algebra_fields(const core::Algebra& a, unsigned n) {
  json mult = json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int k = 0; k < a.dim; ++k)
      for (const auto& e : a.product(i, k)) mult.push_back({i, k, e.index, scalar_to_json(e.value, n)});
  return {{"mult", mult}, {"unit", vector_entries(a.unit, n)}};
}

json linear_map_entries(const core::LinearMap& f, unsigned n) {
  json out = json::array();
  for (int i = 0; i < f.source_dim; ++i)
    for (const auto& e : f.images[i]) out.push_back({i, e.index, scalar_to_json(e.value, n)});
  return out;
}

core::LinearMap linear_map_from(const json& j, const std::string& ptr, int src, int dst) {
  std::vector<std::vector<Entry>> raw(src);
  entries(j, ptr, {src, dst}, [&](const std::vector<int>& i, CycScalar s) { raw[i[0]].push_back({i[1], std::move(s)}); });
  core::LinearMap f{src, dst, {}};
  for (auto& r : raw) f.images.push_back(core::combine(std::move(r)));
  return f;
}

struct Parts {
  core::Coalgebra c;
  core::Algebra a;
};

Parts parts_from(const json& j, const std::string& ptr) {
  Parts p;
  const long dim = integer(member(j, ptr, "dim"), at(ptr, "dim"));
  if (dim < 1 || dim > 100000) fail(at(ptr, "dim"), "dimension out of range");
  const int d = static_cast<int>(dim);
  const auto& field = member(j, ptr, "field");
  const long n = integer(member(field, at(ptr, "field"), "conductor"), at(at(ptr, "field"), "conductor"));
  if (n < 1) fail(at(at(ptr, "field"), "conductor"), "conductor must be positive");
  p.c.dim = d;
  p.c.conductor = static_cast<unsigned>(n);
  p.c.labels = labels_from(j, ptr, d);
  p.c.delta.resize(d);
  entries(member(j, ptr, "delta"), at(ptr, "delta"), {d, d, d}, [&](const std::vector<int>& i, CycScalar s) {
    if (!s.is_zero()) p.c.delta[i[0]].push_back({i[1], i[2], std::move(s)});
  });
  p.c.counit.assign(d, CycScalar());
  entries(member(j, ptr, "counit"), at(ptr, "counit"), {d},
          [&](const std::vector<int>& i, CycScalar s) { p.c.counit[i[0]] = std::move(s); });
  p.a.dim = d;
  std::vector<std::vector<Entry>> raw(static_cast<size_t>(d) * d);
  entries(member(j, ptr, "mult"), at(ptr, "mult"), {d, d, d}, [&](const std::vector<int>& i, CycScalar s) {
    raw[static_cast<size_t>(i[0]) * d + i[1]].push_back({i[2], std::move(s)});
  });
  for (auto& r : raw) p.a.mult.push_back(core::combine(std::move(r)));
  p.a.unit = vector_from(member(j, ptr, "unit"), at(ptr, "unit"), d);
  return p;
}

void expect_kind(const json& j, const std::string& ptr, std::initializer_list<const char*> kinds) {
  const auto& k = member(j, ptr, "kind");
  if (!k.is_string()) fail(at(ptr, "kind"), "kind must be a string");
  for (const char* want : kinds)
    if (k.get<std::string>() == want) return;
  fail(at(ptr, "kind"), "unexpected kind \"" + k.get<std::string>() + "\"");
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalars and matrices.

json scalar_to_json(const CycScalar& s, unsigned conductor) {
  json coeffs = json::array();
  unsigned n = 1;
  if (!s.is_zero()) {
    CycScalar v = s;
    if (!s.is_rational()) {
      n = conductor % s.conductor() == 0 ? conductor : s.conductor();
      v = s.in_conductor(n);
    }
    const auto c = v.dense_coeffs();
    const size_t len = s.is_rational() ? 1 : c.size();
    for (size_t i = 0; i < len; ++i) coeffs.push_back({c[i].get_num().get_str(), c[i].get_den().get_str()});
  }
  return {{"conductor", n}, {"coeffs", coeffs}};
}

CycScalar scalar_from_json(const json& j, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "scalar must be an object {\"conductor\", \"coeffs\"}");
  const long n = integer(member(j, ptr, "conductor"), at(ptr, "conductor"));
  if (n < 1 || n > 100000) fail(at(ptr, "conductor"), "conductor out of range");
  const auto& c = array(member(j, ptr, "coeffs"), at(ptr, "coeffs"));
  if (c.empty()) return CycScalar();
  const unsigned deg = exact::CyclotomicField::get(static_cast<unsigned>(n)).degree();
  if (c.size() != deg)
    fail(at(ptr, "coeffs"), "expected " + std::to_string(deg) + " coefficients for conductor " + std::to_string(n));
  std::vector<Rational> coeffs;
  for (size_t i = 0; i < c.size(); ++i) coeffs.push_back(rational(c[i], at(at(ptr, "coeffs"), i)));
  if (n == 1) return CycScalar(coeffs[0]);
  return CycScalar(static_cast<unsigned>(n), std::move(coeffs));
}

json matrix_to_json(const ExactMatrix& m, unsigned conductor) {
  json e = json::array();
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t k = 0; k < m.cols(); ++k)
      if (!m(i, k).is_zero()) e.push_back({i, k, scalar_to_json(m(i, k), conductor)});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

ExactMatrix matrix_from_json(const json& j, const std::string& ptr) {
  const long r = integer(member(j, ptr, "rows"), at(ptr, "rows"));
  const long c = integer(member(j, ptr, "cols"), at(ptr, "cols"));
  if (r < 0 || c < 0 || r * c > 100'000'000) fail(ptr, "matrix dimensions out of range");
  ExactMatrix m(r, c);
  entries(member(j, ptr, "entries"), at(ptr, "entries"), {static_cast<int>(r), static_cast<int>(c)},
          [&](const std::vector<int>& i, CycScalar s) { m(i[0], i[1]) = std::move(s); });
  return m;
}

json map_to_json(const core::LinearMap& f, unsigned conductor) {
  return {{"rows", f.source_dim}, {"cols", f.target_dim}, {"entries", linear_map_entries(f, conductor)}};
}

core::LinearMap map_from_json(const json& j, const std::string& ptr) {
  const long r = integer(member(j, ptr, "rows"), at(ptr, "rows"));
  const long c = integer(member(j, ptr, "cols"), at(ptr, "cols"));
  if (r < 0 || c < 0 || r > 100000 || c > 100000) fail(ptr, "map dimensions out of range");
  return linear_map_from(member(j, ptr, "entries"), at(ptr, "entries"), static_cast<int>(r), static_cast<int>(c));
}

// ---------------------------------------------------------------------------
// Algebras.

json hopf_to_json(const core::HopfAlgebra& h) {
  json j = coalgebra_fields(h.coalgebra);
  j.update(algebra_fields(h.algebra, h.conductor()));
  j["kind"] = "hopf";
  j["antipode"] = linear_map_entries(h.antipode, h.conductor());
  return j;
}

core::HopfAlgebra hopf_from_json(const json& j, const std::string& ptr) {
  expect_kind(j, ptr, {"hopf"});
  auto p = parts_from(j, ptr);
  core::HopfAlgebra h;
  const int d = p.c.dim;
  h.coalgebra = std::move(p.c);
  h.algebra = std::move(p.a);
  h.antipode = linear_map_from(member(j, ptr, "antipode"), at(ptr, "antipode"), d, d);
  return h;
}

json coquasi_to_json(const core::CoquasiBialgebra& q) {
  const unsigned n = q.conductor();
  json j = coalgebra_fields(q.coalgebra);
  j.update(algebra_fields(q.algebra, n));
  j["kind"] = "coquasi";
  json omega = json::array();
  const int d = q.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        if (!q.omega.at(a, b, c).is_zero()) omega.push_back({a, b, c, scalar_to_json(q.omega.at(a, b, c), n)});
  j["omega"] = omega;
  if (q.quasi_antipode) {
    json qa;
    qa["antipode"] = linear_map_entries(q.quasi_antipode->antipode, n);
    json alpha = json::array(), beta = json::array();
    for (int i = 0; i < d; ++i) {
      if (!q.quasi_antipode->alpha[i].is_zero()) alpha.push_back({i, scalar_to_json(q.quasi_antipode->alpha[i], n)});
      if (!q.quasi_antipode->beta[i].is_zero()) beta.push_back({i, scalar_to_json(q.quasi_antipode->beta[i], n)});
    }
    qa["alpha"] = alpha;
    qa["beta"] = beta;
    j["quasi_antipode"] = qa;
  }
  return j;
}

core::CoquasiBialgebra coquasi_from_json(const json& j, const std::string& ptr) {
  expect_kind(j, ptr, {"coquasi", "dequiv_result"});
  auto p = parts_from(j, ptr);
  const int d = p.c.dim;
  core::Tensor3 omega(d);
  entries(member(j, ptr, "omega"), at(ptr, "omega"), {d, d, d},
          [&](const std::vector<int>& i, CycScalar s) { omega.at(i[0], i[1], i[2]) = std::move(s); });
  std::optional<core::QuasiAntipode> qa;
  if (j.contains("quasi_antipode")) {
    const auto& x = j["quasi_antipode"];
    const auto xp = at(ptr, "quasi_antipode");
    core::QuasiAntipode s;
    s.antipode = linear_map_from(member(x, xp, "antipode"), at(xp, "antipode"), d, d);
    s.alpha.assign(d, CycScalar());
    s.beta.assign(d, CycScalar());
    entries(member(x, xp, "alpha"), at(xp, "alpha"), {d},
            [&](const std::vector<int>& i, CycScalar v) { s.alpha[i[0]] = std::move(v); });
    entries(member(x, xp, "beta"), at(xp, "beta"), {d},
            [&](const std::vector<int>& i, CycScalar v) { s.beta[i[0]] = std::move(v); });
    qa = std::move(s);
  }
  try {
    return core::make_coquasi(std::move(p.c), std::move(p.a), std::move(omega), std::move(qa));
  } catch (const core::NotInvertible& e) {
    fail(at(ptr, "omega"), std::string("associator is not convolution invertible: ") + e.what());
  }
}

core::HopfAlgebra resolve_hopf(const json& j, const std::string& ptr, const std::filesystem::path& base) {
  if (j.is_string()) {
    const auto path = base / j.get<std::string>();
    Document d;
    try {
      d = load_document(path);
    } catch (InputError& e) {
      if (e.line == 0) e = InputError(ptr, "cannot load referenced algebra " + path.string());
      throw;
    }
    try {
      return hopf_from_json(d.value);
    } catch (InputError& e) {
      std::tie(e.line, e.column) = locate(d.text, e.pointer());
      e.file = path.string();
      throw;
    }
  }
  return hopf_from_json(j, ptr);
}

// ---------------------------------------------------------------------------
// Pairings and cointegrals.

json pairing_to_json(const braided::BraidedCentralPair& p, const std::optional<std::string>& h_ref) {
  const unsigned n = p.embedding.H->conductor();
  json j;
  j["kind"] = "pairing";
  j["H"] = h_ref ? json(*h_ref) : hopf_to_json(*p.embedding.H);
  j["K"] = hopf_to_json(*p.embedding.K);
  j["inclusion"] = map_to_json(p.embedding.inclusion, n);
  j["r"] = matrix_to_json(p.r, n);
  return j;
}

PairingFile pairing_from_document(const Document& d, std::shared_ptr<const core::HopfAlgebra> h) {
  const auto& j = d.value;
  const auto base = d.path.has_parent_path() ? d.path.parent_path() : std::filesystem::path(".");
  try {
    expect_kind(j, "", {"pairing"});
    PairingFile out;
    const auto& href = member(j, "", "H");
    if (href.is_string()) out.h_ref = href.get<std::string>();
    if (!h) h = std::make_shared<core::HopfAlgebra>(resolve_hopf(href, "/H", base));
    auto k = std::make_shared<core::HopfAlgebra>(resolve_hopf(member(j, "", "K"), "/K", base));
    auto inc = map_from_json(member(j, "", "inclusion"), "/inclusion");
    if (inc.source_dim != k->dim() || inc.target_dim != h->dim())
      fail("/inclusion", "inclusion must be dim K x dim H");
    auto r = matrix_from_json(member(j, "", "r"), "/r");
    if (static_cast<int>(r.rows()) != h->dim() || static_cast<int>(r.cols()) != k->dim())
      fail("/r", "r must be dim H x dim K");
    braided::SubalgebraEmbedding e{std::move(h), std::move(k), std::move(inc)};
    out.pair = braided::make_pair(std::move(e), std::move(r));
    return out;
  } catch (InputError& e) {
    if (e.file.empty()) {
      std::tie(e.line, e.column) = locate(d.text, e.pointer());
      e.file = d.path.string();
    }
    throw;
  }
}

json cointegral_to_json(const braided::Cointegral& c, const std::optional<std::string>& pairing_ref,
                        const std::optional<std::vector<SparseVector>>& lifts) {
  const unsigned n = c.embedding.H->conductor();
  json j;
  j["kind"] = "cointegral";
  if (pairing_ref) j["pairing"] = *pairing_ref;
  j["pi"] = map_to_json(c.pi, n);
  if (lifts) {
    json l = json::array();
    for (const auto& v : *lifts) l.push_back(vector_entries(v, n));
    j["lifts"] = l;
  }
  return j;
}

CointegralFile cointegral_from_document(const Document& d) {
  const auto& j = d.value;
  try {
    expect_kind(j, "", {"cointegral"});
    CointegralFile out;
    if (j.contains("pairing")) {
      if (!j["pairing"].is_string()) fail("/pairing", "pairing reference must be a path");
      out.pairing_ref = j["pairing"].get<std::string>();
    }
    const auto pi = map_from_json(member(j, "", "pi"), "/pi");
    out.pi = pi.to_matrix();
    if (j.contains("lifts")) {
      const auto& l = array(j["lifts"], "/lifts");
      std::vector<SparseVector> lifts;
      for (size_t i = 0; i < l.size(); ++i) lifts.push_back(vector_from(l[i], at("/lifts", i), pi.source_dim));
      out.lifts = std::move(lifts);
    }
    return out;
  } catch (InputError& e) {
    if (e.file.empty()) {
      std::tie(e.line, e.column) = locate(d.text, e.pointer());
      e.file = d.path.string();
    }
    throw;
  }
}

// ---------------------------------------------------------------------------
// Reports and results.

json report_to_json(const core::CheckReport& r, bool timings) {
  json out = json::object();
  for (const auto& v : r.verdicts) {
    json e = {{"passed", v.passed}, {"tuples", v.tuples}};
    if (timings) e["seconds"] = v.seconds;
    if (v.witness) e["witness"] = v.witness->describe();
    out[v.axiom] = e;
  }
  return out;
}

json dequiv_result_to_json(const engine::DequivResult& r, bool timings) {
  const unsigned n = r.Q.conductor();
  json j = coquasi_to_json(r.Q);
  j["kind"] = "dequiv_result";
  j["nu"] = map_to_json(r.nu, n);
  j["j"] = map_to_json(r.j, n);
  j["r_bar"] = matrix_to_json(r.r_bar, n);
  j["hopf"] = r.hopf;
  j["free"] = r.free;
  j["certification"] = report_to_json(r.certification, timings);
  return j;
}

}  // namespace dequiv::io
