#include "dequiv/cli/cli.hpp"

#include <chrono>
#include <numeric>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "dequiv/builders/groups.hpp"
#include "dequiv/builders/pointed.hpp"
#include "dequiv/engine/dequiv.hpp"
#include "dequiv/io/json_io.hpp"

namespace dequiv::cli {

namespace fs = std::filesystem;
using io::Document;
using io::InputError;
using nlohmann::json;

std::pair<unsigned, long> parse_root(const std::string& text) {
  if (text == "1") return {1, 0};
  if (text == "-1") return {2, 1};
  static const std::regex re(R"(z(\d+)(\^(-?\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("cannot parse root of unity \"" + text + "\"");
  const long n = std::stol(m[1]);
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  const long k = m[3].matched ? std::stol(m[3]) : 1;
  return {static_cast<unsigned>(n), ((k % n) + n) % n};
}

std::vector<fs::path> write_fixture(const Fixture& f, const fs::path& dir) {
  const std::vector<fs::path> paths{dir / "H.json", dir / "pairing.json", dir / "cointegral.json"};
  io::write_file(paths[0], io::dump_canonical(io::hopf_to_json(*f.pair.embedding.H)));
  io::write_file(paths[1], io::dump_canonical(io::pairing_to_json(f.pair, std::string("H.json"))));
  io::write_file(paths[2], io::dump_canonical(io::cointegral_to_json(f.cointegral, std::string("pairing.json"), f.lifts)));
  return paths;
}

namespace {

struct Common {
  unsigned threads = 0;
  bool omit_timings = false;
  bool omega_full = false;
  std::string report_path;
};

template <class Fn>
auto located(const Document& d, Fn&& fn) {
  try {
    return fn();
  } catch (InputError& e) {
    if (e.file.empty()) {
      std::tie(e.line, e.column) = io::locate(d.text, e.pointer());
      e.file = d.path.string();
    }
    throw;
  }
}

void add_input(RunReport& r, const fs::path& p) { r.inputs.emplace_back(p.string(), file_sha256(p)); }

fs::path base_of(const Document& d) { return d.path.has_parent_path() ? d.path.parent_path() : fs::path("."); }

braided::BraidedCentralPair load_pair_for_check(const Document& d, RunReport& r, const core::CheckOptions& opt) {
  auto pf = io::pairing_from_document(d);
  const auto& e = pf.pair.embedding;
  r.dims["H"] = e.H->dim();
  r.dims["K"] = e.K->dim();
  r.stages.emplace_back("hopf(H)", core::check_hopf(*e.H, opt));
  r.stages.emplace_back("hopf(K)", core::check_hopf(*e.K, opt));
  r.stages.emplace_back("embedding", braided::check_embedding(e, opt));
  r.stages.emplace_back("pairing", braided::check_pairing(pf.pair, opt));
  r.stages.emplace_back("pairing-absorbs", braided::check_pairing_absorbs_subalgebra(pf.pair, opt));
  return std::move(pf.pair);
}

braided::Cointegral cointegral_on(const braided::SubalgebraEmbedding& e, const io::CointegralFile& cf,
                                  const Document& d) {
  if (static_cast<int>(cf.pi.rows()) != e.H->dim() || static_cast<int>(cf.pi.cols()) != e.K->dim()) {
    InputError err("/pi", "pi must be dim H x dim K");
    std::tie(err.line, err.column) = io::locate(d.text, "/pi");
    err.file = d.path.string();
    throw err;
  }
  return braided::make_cointegral(e, core::LinearMap::from_matrix(cf.pi));
}

void cmd_check(const std::string& path, const Common& c, RunReport& r) {
  r.command = "check " + path;
  const auto doc = io::load_document(path);
  add_input(r, path);
  const core::CheckOptions opt{c.threads, std::nullopt};
  const std::string kind = located(doc, [&] { return doc.kind(); });
  if (kind == "hopf") {
    const auto h = located(doc, [&] { return io::hopf_from_json(doc.value); });
    r.dims["H"] = h.dim();
    r.stages.emplace_back("hopf", core::check_hopf(h, opt));
  } else if (kind == "coquasi" || kind == "dequiv_result") {
    const auto q = located(doc, [&] { return io::coquasi_from_json(doc.value); });
    r.dims["Q"] = q.dim();
    r.stages.emplace_back("coquasi", core::check_coquasi(q, opt));
    if (q.quasi_antipode) r.stages.emplace_back("quasi-antipode", core::check_quasi_antipode(q, opt));
    r.omega = render_omega(q, c.omega_full);
  } else if (kind == "pairing") {
    load_pair_for_check(doc, r, opt);
  } else if (kind == "cointegral") {
    const auto cf = io::cointegral_from_document(doc);
    if (!cf.pairing_ref) {
      InputError err("/kind", "checking a cointegral needs a \"pairing\" reference");
      err.file = doc.path.string();
      throw err;
    }
    const auto pdoc = io::load_document(base_of(doc) / *cf.pairing_ref);
    add_input(r, pdoc.path);
    const auto pair = load_pair_for_check(pdoc, r, opt);
    const auto coint = cointegral_on(pair.embedding, cf, doc);
    r.stages.emplace_back("cointegral", braided::check_cointegral(coint, opt));
    r.notes.push_back(std::string("normalized: ") + (braided::is_normalized(coint) ? "true" : "false"));
  } else {
    InputError err("/kind", "unknown document kind \"" + kind + "\"");
    std::tie(err.line, err.column) = io::locate(doc.text, "/kind");
    err.file = doc.path.string();
    throw err;
  }
  for (const auto& [name, rep] : r.stages)
    if (!rep.ok()) r.exit_code = kAxiomFailure;
}

struct DequivArgs {
  std::string algebra, pairing, cointegral, out;
};

void cmd_dequiv(const DequivArgs& a, const Common& c, RunReport& r) {
  r.command = "dequiv";
  const auto hdoc = io::load_document(a.algebra);
  add_input(r, a.algebra);
  auto H = std::make_shared<const core::HopfAlgebra>(located(hdoc, [&] { return io::hopf_from_json(hdoc.value); }));
  const auto pdoc = io::load_document(a.pairing);
  add_input(r, a.pairing);
  auto pf = io::pairing_from_document(pdoc, H);
  // When the pairing names its own H it must be the algebra given on the command line.
  const auto& href = pdoc.value["H"];
  if (!href.is_null()) {
    const auto named = located(pdoc, [&] { return io::resolve_hopf(href, "/H", base_of(pdoc)); });
    if (io::hopf_to_json(named) != io::hopf_to_json(*H)) {
      InputError err("/H", "pairing refers to a different algebra than --algebra");
      std::tie(err.line, err.column) = io::locate(pdoc.text, "/H");
      err.file = pdoc.path.string();
      throw err;
    }
  }
  const auto cdoc = io::load_document(a.cointegral);
  add_input(r, a.cointegral);
  const auto cf = io::cointegral_from_document(cdoc);
  const auto coint = cointegral_on(pf.pair.embedding, cf, cdoc);

  engine::DequivOptions opt;
  opt.check.threads = c.threads;
  opt.lifts = cf.lifts;
  r.dims["H"] = H->dim();
  r.dims["K"] = pf.pair.embedding.K->dim();
  try {
    const auto res = engine::de_equivariantize(pf.pair, coint, opt);
    r.stages.emplace_back("inputs", res.input_checks);
    r.stages.emplace_back("certification", res.certification);
    r.dims["Q"] = res.Q.dim();
    r.omega = render_omega(res.Q, c.omega_full);
    r.notes.push_back(std::string("hopf: ") + (res.hopf ? "true (omega trivial)" : "false"));
    r.notes.push_back(std::string("free: ") + (res.free ? "true" : "false"));
    io::write_file(a.out, io::dump_canonical(io::dequiv_result_to_json(res, !c.omit_timings)));
    r.outputs.emplace_back(a.out, file_sha256(a.out));
  } catch (const engine::InputRejected& e) {
    r.stages.emplace_back(e.stage(), e.report());
    throw;
  } catch (const engine::EngineInconsistency& e) {
    r.stages.emplace_back("certification", e.report());
    throw;
  }
}

void finish_builtin(const Fixture& f, const std::string& dir, RunReport& r) {
  for (const auto& p : write_fixture(f, dir)) r.outputs.emplace_back(p.string(), file_sha256(p));
  r.dims["H"] = f.pair.embedding.H->dim();
  r.dims["K"] = f.pair.embedding.K->dim();
  r.notes.push_back(f.description);
}

Fixture pointed_fixture(const builders::QuantumLinearSpace& h, const builders::PhiDatum& datum, std::string what) {
  auto pair = builders::pointed_pair(h, datum);
  auto coint = builders::pointed_cointegral(h, pair.embedding);
  const auto dec = builders::coset_decomposition(h.gamma, builders::validate_datum(h, datum).generator_indices);
  auto lifts = builders::pointed_lifts(h, dec);
  return Fixture{std::move(pair), std::move(coint), std::move(lifts), std::move(what)};
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      out.push_back(std::stol(item));
    } catch (...) {
      throw std::invalid_argument("cannot parse integer list \"" + s + "\"");
    }
  return out;
}

std::string format_set(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? ", " : "") + std::to_string(v);
  return out + "}";
}

struct TaftArgs {
  int N = 9;
  std::string b = "1", d = "1";
  std::optional<long> s;
  bool list_s = false;
};

/// Returns false when only the set was listed.
bool cmd_taft(const TaftArgs& a, const std::string& dir, RunReport& r, std::ostream& out) {
  r.command = "builtin taft";
  int n = 1;
  while (n * n < a.N) ++n;
  if (n * n != a.N || n < 2) throw std::invalid_argument("--N must be a square n^2 with n >= 2");
  const auto b = parse_list(a.b), d = parse_list(a.d);
  const auto ups = builders::upsilon_prime(n, b, d);
  if (a.list_s) {
    out << format_set(ups) << "\n";
    return false;
  }
  long s = 0;
  if (a.s) {
    s = *a.s;
  } else if (!ups.empty()) {
    s = *ups.begin();
  } else {
    throw builders::DatumRejected("Upsilon' is empty for this datum; no braided central subalgebra <gamma^n>");
  }
  const auto h = builders::quantum_linear_space(builders::cyclic_pointed_data(n, b, d));
  finish_builtin(pointed_fixture(h, builders::cyclic_phi(n, s),
                                 "cyclic pointed H over Z" + std::to_string(a.N) + ", G = <g^" + std::to_string(n) +
                                     ">, s = " + std::to_string(s)),
                 dir, r);
  return true;
}

struct GroupArgs {
  std::string gamma = "Z4";
  std::string g = "g^2";
  std::string r;
};

builders::FiniteGroup parse_group(const std::string& text) {
  if (text == "D4") return builders::FiniteGroup::dihedral4();
  std::vector<int> factors;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, 'x')) {
    if (item.size() < 2 || item[0] != 'Z') throw std::invalid_argument("group must be D4 or Zn1xZn2x...");
    factors.push_back(std::stoi(item.substr(1)));
    if (factors.back() < 1) throw std::invalid_argument("cyclic factor must be positive");
  }
  return builders::FiniteGroup::abelian(factors);
}

void cmd_group(const GroupArgs& a, const std::string& dir, RunReport& r) {
  r.command = "builtin group";
  const auto gamma = parse_group(a.gamma);
  std::vector<int> gens;
  std::stringstream ss(a.g);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto it = std::find(gamma.labels.begin(), gamma.labels.end(), item);
    if (it == gamma.labels.end()) throw std::invalid_argument("unknown group element \"" + item + "\"");
    gens.push_back(static_cast<int>(it - gamma.labels.begin()));
  }
  const auto dec = builders::coset_decomposition(gamma, gens);
  builders::BicharacterTable table;
  unsigned conductor = 1;
  if (a.r.empty()) {
    table.assign(static_cast<size_t>(gamma.order) * dec.G.group.order, core::CycScalar(1));
  } else {
    if (gamma.factors.empty()) throw std::invalid_argument("--r needs an abelian Gamma");
    std::vector<std::vector<std::pair<unsigned, long>>> roots;
    std::stringstream rows(a.r);
    std::string row;
    while (std::getline(rows, row, ';')) {
      roots.emplace_back();
      std::stringstream cols(row);
      std::string v;
      while (std::getline(cols, v, ',')) {
        roots.back().push_back(parse_root(v));
        conductor = std::lcm(conductor, roots.back().back().first);
      }
    }
    std::vector<std::vector<long>> e;
    for (const auto& rw : roots) {
      e.emplace_back();
      for (const auto& [n, k] : rw) e.back().push_back(k * static_cast<long>(conductor / n));
    }
    table = builders::bicharacter_from_generators(gamma, dec.G, gens, conductor, e);
  }
  auto pair = builders::bicharacter_pair(gamma, dec.G, table, conductor);
  auto coint = builders::grouplike_cointegral(pair.embedding, dec);
  std::vector<core::SparseVector> lifts;
  for (int rep : dec.reps) lifts.push_back(core::basis_vector(rep));
  finish_builtin(Fixture{std::move(pair), std::move(coint), std::move(lifts),
                         "group algebra of " + a.gamma + " over G = <" + a.g + ">"},
                 dir, r);
}

struct QlsArgs {
  int N = 4;
  int rank = 2;
  std::string n = "2,2";
};

void cmd_qls(const QlsArgs& a, const std::string& dir, RunReport& r) {
  r.command = "builtin qls";
  std::vector<int> n;
  for (long v : parse_list(a.n)) n.push_back(static_cast<int>(v));
  if (static_cast<int>(n.size()) != a.rank) throw std::invalid_argument("--n needs one entry per rank");
  const auto h = builders::quantum_linear_space(builders::a1_product_data(a.N, a.rank));
  finish_builtin(pointed_fixture(h, builders::a1_product_phi(a.N, n),
                                 "A1^" + std::to_string(a.rank) + " quantum linear space at q = z" + std::to_string(a.N)),
                 dir, r);
}

std::vector<std::vector<long>> long_matrix(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw InputError(ptr, "expected an array of integer arrays");
  std::vector<std::vector<long>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw InputError(ptr + "/" + std::to_string(i), "expected an array of integers");
    out.emplace_back();
    for (size_t k = 0; k < j[i].size(); ++k) {
      if (!j[i][k].is_number_integer())
        throw InputError(ptr + "/" + std::to_string(i) + "/" + std::to_string(k), "expected an integer");
      out.back().push_back(j[i][k].get<long>());
    }
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError("", std::string("missing field \"") + key + "\"");
  return j[key];
}

void cmd_spec(const std::string& path, const std::string& dir, RunReport& r) {
  r.command = "builtin spec " + path;
  const auto doc = io::load_document(path);
  add_input(r, path);
  const std::string kind = located(doc, [&] { return doc.kind(); });
  const auto& j = doc.value;
  auto factors = [&] {
    std::vector<int> f;
    for (long v : located(doc, [&] { return long_matrix(json::array({field(j, "gamma")}), "/gamma"); })[0])
      f.push_back(static_cast<int>(v));
    return f;
  };
  const unsigned conductor = located(doc, [&] {
    const auto& c = field(j, "conductor");
    if (!c.is_number_integer() || c.get<long>() < 1) throw InputError("/conductor", "conductor must be a positive integer");
    return c.get<unsigned>();
  });
  if (kind == "group") {
    const auto gamma = builders::FiniteGroup::abelian(factors());
    std::vector<int> gens;
    for (const auto& e : located(doc, [&] { return long_matrix(field(j, "G"), "/G"); })) gens.push_back(gamma.from_exponents(e));
    const auto dec = builders::coset_decomposition(gamma, gens);
    const auto e = located(doc, [&] { return long_matrix(field(j, "r"), "/r"); });
    const auto table = builders::bicharacter_from_generators(gamma, dec.G, gens, conductor, e);
    auto pair = builders::bicharacter_pair(gamma, dec.G, table, conductor);
    auto coint = builders::grouplike_cointegral(pair.embedding, dec);
    std::vector<core::SparseVector> lifts;
    for (int rep : dec.reps) lifts.push_back(core::basis_vector(rep));
    finish_builtin(Fixture{std::move(pair), std::move(coint), std::move(lifts), "group fixture from " + path}, dir, r);
  } else if (kind == "quantum_linear_space") {
    builders::QuantumLinearSpaceData data;
    data.gamma = factors();
    data.conductor = conductor;
    data.grouplikes = located(doc, [&] { return long_matrix(field(j, "grouplikes"), "/grouplikes"); });
    data.characters = located(doc, [&] { return long_matrix(field(j, "chars"), "/chars"); });
    builders::PhiDatum datum;
    datum.generators = located(doc, [&] { return long_matrix(field(j, "G"), "/G"); });
    datum.phi = located(doc, [&] { return long_matrix(field(j, "phi"), "/phi"); });
    const auto h = builders::quantum_linear_space(data);
    finish_builtin(pointed_fixture(h, datum, "quantum linear space fixture from " + path), dir, r);
  } else {
    InputError err("/kind", "builder spec kind must be \"group\" or \"quantum_linear_space\"");
    std::tie(err.line, err.column) = io::locate(doc.text, "/kind");
    err.file = doc.path.string();
    throw err;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact de-equivariantization of finite-dimensional Hopf algebras", "dequiv"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", common.threads, "Worker threads for the checkers (0 = all cores)");
    sub->add_flag("--omit-timings", common.omit_timings, "Leave wall-clock times out of reports and files");
    sub->add_flag("--omega-full", common.omega_full, "Render every nonzero omega entry");
    sub->add_option("--report", common.report_path, "Also write the run report as JSON");
  };

  std::string check_path;
  auto* check = app.add_subcommand("check", "Check the axioms of an algebra, pairing or cointegral file");
  check->add_option("file", check_path, "Input file")->required();
  add_common(check);

  DequivArgs da;
  auto* dq = app.add_subcommand("dequiv", "Build the de-equivariantization Q = H/K+H");
  dq->add_option("--algebra", da.algebra, "Hopf algebra file")->required();
  dq->add_option("--pairing", da.pairing, "Pairing file")->required();
  dq->add_option("--cointegral", da.cointegral, "Cointegral file")->required();
  dq->add_option("--out", da.out, "Output file")->required();
  add_common(dq);

  std::string out_dir = ".";
  auto* bi = app.add_subcommand("builtin", "Write a built-in fixture (H, pairing, cointegral)");
  bi->require_subcommand(1);
  bi->add_option("--out-dir", out_dir, "Output directory");
  add_common(bi);
  TaftArgs ta;
  auto* taft = bi->add_subcommand("taft", "Cyclic pointed H over Z_{n^2} with G = <g^n>");
  taft->add_option("--N", ta.N, "Order n^2 of Gamma");
  taft->add_option("--b", ta.b, "Comma list b_i with g_i = g^{b_i}");
  taft->add_option("--d", ta.d, "Comma list d_i with chi_i(g) = q^{d_i}");
  taft->add_option("--s", ta.s, "Element of Upsilon' (default: the least)");
  taft->add_flag("--list-s", ta.list_s, "Print Upsilon' and exit");
  taft->add_option("--out-dir", out_dir, "Output directory");
  GroupArgs ga;
  auto* group = bi->add_subcommand("group", "Group algebra over a central subgroup with a bicharacter");
  group->add_option("--gamma", ga.gamma, "D4 or Zn1xZn2x...");
  group->add_option("--g", ga.g, "Comma list of G generators by label");
  group->add_option("--r", ga.r, "r(Gamma generator, G generator) as 1, -1, zN^k; rows ';', columns ','");
  group->add_option("--out-dir", out_dir, "Output directory");
  QlsArgs qa;
  auto* qls = bi->add_subcommand("qls", "A1 x ... x A1 quantum linear space over Z_N^rank");
  qls->add_option("--N", qa.N, "Order of q");
  qls->add_option("--rank", qa.rank, "Number of generators");
  qls->add_option("--n", qa.n, "Comma list n_i with G = <g_i^{n_i}>");
  qls->add_option("--out-dir", out_dir, "Output directory");
  std::string spec_path;
  auto* spec = bi->add_subcommand("spec", "Fixture from a builder spec file");
  spec->add_option("file", spec_path, "Builder spec file")->required();
  spec->add_option("--out-dir", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  RunReport report;
  const auto t0 = std::chrono::steady_clock::now();
  bool print = true;
  try {
    if (check->parsed()) {
      cmd_check(check_path, common, report);
    } else if (dq->parsed()) {
      cmd_dequiv(da, common, report);
    } else if (taft->parsed()) {
      print = cmd_taft(ta, out_dir, report, out);
    } else if (group->parsed()) {
      cmd_group(ga, out_dir, report);
    } else if (qls->parsed()) {
      cmd_qls(qa, out_dir, report);
    } else if (spec->parsed()) {
      cmd_spec(spec_path, out_dir, report);
    }
  } catch (const InputError& e) {
    report.exit_code = kInputError;
    report.error = e.located();
  } catch (const core::AxiomFailure& e) {
    report.exit_code = kAxiomFailure;
    report.error = e.what();
  } catch (const engine::InputRejected& e) {
    report.exit_code = kAxiomFailure;
    report.error = e.what();
  } catch (const engine::EngineInconsistency& e) {
    report.exit_code = kAxiomFailure;
    report.error = std::string("engine inconsistency: ") + e.what();
  } catch (const core::NotInvertible& e) {
    report.exit_code = kAxiomFailure;
    report.error = e.what();
  } catch (const std::invalid_argument& e) {
    report.exit_code = kInputError;
    report.error = e.what();
  } catch (const std::exception& e) {
    report.exit_code = kInputError;
    report.error = std::string("error: ") + e.what();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!print) return report.exit_code;
  const bool timings = !common.omit_timings;
  (report.exit_code == kPass ? out : err) << report.to_text(timings);
  if (!common.report_path.empty()) io::write_file(common.report_path, io::dump_canonical(report.to_json(timings)));
  return report.exit_code;
}

}  // namespace dequiv::cli
