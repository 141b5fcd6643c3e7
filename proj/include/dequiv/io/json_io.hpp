/**
 * @file json_io.hpp
 * @brief Canonical JSON files for scalars, algebras, pairings, cointegrals and
 * de-equivariantization results.
 *
 * Scalars are {"conductor": N, "coeffs": [["p","q"], ...]} in the power basis
 * of Q(zeta_N); rational scalars use conductor 1 and zero has no coefficients.
 * Sparse tensors are lists of index tuples followed by a scalar.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dequiv/braided/pairing.hpp"
#include "dequiv/core/checks.hpp"
#include "dequiv/core/structures.hpp"
#include "dequiv/engine/dequiv.hpp"

namespace dequiv::io {

using json = nlohmann::json;
using core::CycScalar;

/// Malformed or inconsistent input. `pointer` is a JSON pointer into the
/// offending document; line/column are filled in when the source text is known.
class InputError : public std::runtime_error {
 public:
  InputError(std::string pointer, const std::string& message);
  const std::string& pointer() const { return pointer_; }
  const std::string& message() const { return message_; }
  int line = 0;
  int column = 0;
  std::string file;
  /// "file:line:column: message (at pointer)".
  std::string located() const;

 private:
  std::string pointer_;
  std::string message_;
};

/// 1-based line/column of the value at a JSON pointer, or {0, 0}.
std::pair<int, int> locate(const std::string& text, const std::string& pointer);

/// A parsed document with its source, so errors can be located.
struct Document {
  json value;
  std::string text;
  std::filesystem::path path;

  std::string kind() const;
};

Document parse_document(std::string text, std::filesystem::path path = {});
Document load_document(const std::filesystem::path& path);
/// Sorted keys, two-space indent, trailing LF.
std::string dump_canonical(const json& j);
void write_file(const std::filesystem::path& path, const std::string& text);

json scalar_to_json(const CycScalar& s, unsigned conductor);
CycScalar scalar_from_json(const json& j, const std::string& pointer);

json matrix_to_json(const exact::ExactMatrix& m, unsigned conductor);
exact::ExactMatrix matrix_from_json(const json& j, const std::string& pointer);
json map_to_json(const core::LinearMap& f, unsigned conductor);
core::LinearMap map_from_json(const json& j, const std::string& pointer);

json hopf_to_json(const core::HopfAlgebra& h);
core::HopfAlgebra hopf_from_json(const json& j, const std::string& pointer = "");
json coquasi_to_json(const core::CoquasiBialgebra& q);
core::CoquasiBialgebra coquasi_from_json(const json& j, const std::string& pointer = "");

/// Algebra-valued fields may be inline objects or paths relative to `base`.
core::HopfAlgebra resolve_hopf(const json& j, const std::string& pointer, const std::filesystem::path& base);

struct PairingFile {
  std::optional<std::string> h_ref;  // set when H is given by path
  braided::BraidedCentralPair pair;
};
json pairing_to_json(const braided::BraidedCentralPair& p, const std::optional<std::string>& h_ref);
/// H is taken from `h` when given, otherwise from the file's "H" field.
PairingFile pairing_from_document(const Document& d, std::shared_ptr<const core::HopfAlgebra> h = nullptr);

struct CointegralFile {
  std::optional<std::string> pairing_ref;
  exact::ExactMatrix pi;
  std::optional<std::vector<core::SparseVector>> lifts;
};
json cointegral_to_json(const braided::Cointegral& c, const std::optional<std::string>& pairing_ref,
                        const std::optional<std::vector<core::SparseVector>>& lifts);
CointegralFile cointegral_from_document(const Document& d);

json report_to_json(const core::CheckReport& r, bool timings);

/// Q as a coquasi algebra document plus nu, j, r_bar, flags and certification.
json dequiv_result_to_json(const engine::DequivResult& r, bool timings);

}  // namespace dequiv::io
