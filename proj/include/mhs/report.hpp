#pragma once

// JSON reports for a single germ and the golden-corpus runner behind the CLI.
// Rationals are serialized as "p/q" strings and matrices as row-major arrays;
// object keys come out sorted, so equal reports dump to equal bytes.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mhs/error.hpp"

namespace mhs {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

struct GermSpec {
  std::string name;
  std::string polynomial;
  /// Empty means "infer from the text".
  std::vector<std::string> variables;
  std::optional<std::string> order;
  /// JSON pointer -> expected value, checked against the report.
  Json expect = Json::object();
  /// Error code the analysis must fail with.
  std::optional<std::string> expect_error;

  /// Throws Error(InvalidArgument) on a malformed spec.
  static GermSpec from_json(const Json& j);
  Json to_json() const;
};

struct AnalyzeOptions {
  bool oracle = false;
  double oracle_eps = 1e-3;
  std::uint64_t oracle_seed = 1;
};

/// Full pipeline. Non-qh germs keep the residue and weight sections; the
/// sections that need a Hodge grading are marked unavailable. Hard failures
/// (parse errors, non-isolated germs) throw Error.
Json analyze(const GermSpec& spec, const AnalyzeOptions& options = {});

/// The report without timings, used for golden comparison.
Json comparable(Json report);

/// False entries of report["invariants"].
std::vector<std::string> failed_invariants(const Json& report);

/// {"error": {"code", "message"}}.
Json error_json(const Error& e);

/// Input errors exit with 2, everything else with 1.
bool is_input_error(ErrorCode code);

struct GermOutcome {
  std::string name;
  bool pass = true;
  std::vector<std::string> problems;
};

/// Runs every *.json spec in `dir`, sorted by file name, against its
/// expectations and its golden file golden/<name>.json. With
/// `update_golden` the goldens are rewritten instead of compared.
std::vector<GermOutcome> check_corpus(const std::filesystem::path& dir, bool update_golden);

/// Plain-text view of a report: one "path: value" line per leaf, matrices
/// one row per line.
std::string render_text(const Json& j);

}  // namespace mhs
