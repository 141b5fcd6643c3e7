/**
 * @file cli.hpp
 * @brief Batch front end: check files, run the de-equivariantization
 * pipeline, and materialize built-in fixtures.
 *
 * Exit codes: 0 all checks pass, 1 an axiom fails, 2 the input is invalid.
 */
#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dequiv/braided/pairing.hpp"
#include "dequiv/core/checks.hpp"

namespace dequiv::cli {

enum ExitCode : int { kPass = 0, kAxiomFailure = 1, kInputError = 2 };

std::string sha256_hex(const std::string& bytes);
std::string file_sha256(const std::filesystem::path& path);

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;   // path, sha256
  std::vector<std::pair<std::string, core::CheckReport>> stages;
  std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256
  std::map<std::string, long> dims;
  std::vector<std::string> omega;  // rendered associator lines
  std::vector<std::string> notes;
  int exit_code = kPass;
  std::string error;
  double seconds = 0;

  nlohmann::json to_json(bool timings) const;
  std::string to_text(bool timings) const;
};

/// Nontrivial omega values on grouplike basis triples, or every nonzero entry
/// when `full` is set.
std::vector<std::string> render_omega(const core::CoquasiBialgebra& q, bool full);

/// A fixture ready to be written as H / pairing / cointegral files.
struct Fixture {
  braided::BraidedCentralPair pair;
  braided::Cointegral cointegral;
  std::optional<std::vector<core::SparseVector>> lifts;
  std::string description;
};

/// Writes H.json, pairing.json and cointegral.json into `dir`; returns paths.
std::vector<std::filesystem::path> write_fixture(const Fixture& f, const std::filesystem::path& dir);

/// Parses a root of unity written as 1, -1, zN or zN^k; returns (N, k).
std::pair<unsigned, long> parse_root(const std::string& text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dequiv::cli
