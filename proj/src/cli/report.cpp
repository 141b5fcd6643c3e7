#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "dequiv/cli/cli.hpp"

namespace dequiv::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return sha256_hex(ss.str());
}

std::vector<std::string> render_omega(const core::CoquasiBialgebra& q, bool full) {
  const int d = q.dim();
  auto label = [&](int i) { return q.coalgebra.labels.empty() ? "e" + std::to_string(i) : q.coalgebra.labels[i]; };
  std::vector<std::string> out;
  if (full) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          if (!q.omega.at(a, b, c).is_zero())
            out.push_back("omega(" + label(a) + ", " + label(b) + ", " + label(c) + ") = " + q.omega.at(a, b, c).to_string());
    return out;
  }
  std::vector<int> g;
  for (int i = 0; i < d; ++i)
    if (q.coalgebra.is_grouplike(i)) g.push_back(i);
  for (int a : g)
    for (int b : g)
      for (int c : g)
        if (!q.omega.at(a, b, c).is_one())
          out.push_back("omega(" + label(a) + ", " + label(b) + ", " + label(c) + ") = " + q.omega.at(a, b, c).to_string());
  if (out.empty()) out.push_back("omega = 1 on all " + std::to_string(g.size()) + "^3 grouplike triples");
  return out;
}

nlohmann::json RunReport::to_json(bool timings) const {
  nlohmann::json j;
  j["command"] = command;
  j["exit_code"] = exit_code;
  j["inputs"] = nlohmann::json::array();
  for (const auto& [p, h] : inputs) j["inputs"].push_back({{"path", p}, {"sha256", h}});
  j["outputs"] = nlohmann::json::array();
  for (const auto& [p, h] : outputs) j["outputs"].push_back({{"path", p}, {"sha256", h}});
  j["stages"] = nlohmann::json::array();
  for (const auto& [name, rep] : stages) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : rep.verdicts) {
      nlohmann::json e = {{"axiom", v.axiom}, {"passed", v.passed}, {"tuples", v.tuples}};
      if (timings) e["seconds"] = v.seconds;
      if (v.witness) e["witness"] = v.witness->describe();
      verdicts.push_back(e);
    }
    j["stages"].push_back({{"stage", name}, {"verdicts", verdicts}});
  }
  j["dims"] = dims;
  j["omega"] = omega;
  j["notes"] = notes;
  if (!error.empty()) j["error"] = error;
  if (timings) j["seconds"] = seconds;
  return j;
}

std::string RunReport::to_text(bool timings) const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  for (const auto& [p, h] : inputs) out << "input  " << p << "  sha256 " << h << "\n";
  for (const auto& [name, rep] : stages) {
    out << "[" << name << "]\n";
    for (const auto& v : rep.verdicts) {
      out << "  " << std::left << std::setw(24) << v.axiom << (v.passed ? "pass" : "FAIL") << "  tuples " << v.tuples;
      if (timings) out << "  " << std::fixed << std::setprecision(3) << v.seconds << "s";
      out << "\n";
      if (v.witness) out << "    witness: " << v.witness->describe() << "\n";
    }
  }
  for (const auto& [k, v] : dims) out << "dim " << k << " = " << v << "\n";
  for (const auto& l : omega) out << l << "\n";
  for (const auto& n : notes) out << n << "\n";
  for (const auto& [p, h] : outputs) out << "output " << p << "  sha256 " << h << "\n";
  if (!error.empty()) out << "error: " << error << "\n";
  out << "status: " << (exit_code == kPass ? "pass" : exit_code == kAxiomFailure ? "axiom failure" : "input error");
  if (timings) out << "  (" << std::fixed << std::setprecision(3) << seconds << "s)";
  out << "\n";
  return out.str();
}

}  // namespace dequiv::cli
