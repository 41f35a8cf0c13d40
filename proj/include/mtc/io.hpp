#pragma once

// JSON interchange for modular data, surface literals and family specs.
//
// Modular data file:
//   {"schema_version": "1", "labels": [...], "zero": "<label>",
//    "dual": {"<label>": "<label>", ...}, "S": [[[re, im], ...], ...],
//    "theta": {"<label>": [re, im], ...}, "metadata": {...}}
//
// Surface literal: components joined by '+', each "g=<genus>[l1,l2,...]" with
// canonical label strings, e.g. "g=1[(1),(1)] + g=0[]". Labels may contain
// parentheses and commas; only commas outside parentheses separate labels.

#include "mtc/modular_data.hpp"
#include "mtc/surface.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mtc {

inline constexpr const char* kSchemaVersion = "1";

/// A modular data file that could not be turned into valid data.
class LoadError : public std::runtime_error {
 public:
  enum class Kind { parse, structure, validation };
  LoadError(Kind kind, std::vector<std::string> codes, const std::string& what)
      : std::runtime_error(what), kind_(kind), codes_(std::move(codes)) {}
  Kind kind() const noexcept { return kind_; }
  /// Field names (parse, structure) or violated invariant codes (validation).
  const std::vector<std::string>& codes() const noexcept { return codes_; }

 private:
  Kind kind_;
  std::vector<std::string> codes_;
};

nlohmann::json complex_to_json(std::complex<double> z);

nlohmann::json modular_data_to_json(const ModularData<double>& md, const nlohmann::json& metadata = nlohmann::json::object());

/// Builds and validates; throws LoadError.
ModularData<double> modular_data_from_json(const nlohmann::json& j);
/// Parses text (errors carry line and column) and validates.
ModularData<double> parse_modular_data(std::string_view text);
ModularData<double> load_modular_data(const std::string& path);

Surface parse_surface(std::string_view literal, const ModularData<double>& md);
std::string format_surface(const Surface& a, const ModularData<double>& md);

/// Tolerance from the MF_TOL environment variable, if set and valid.
std::optional<double> tolerance_override();

/// Built-in or file-backed family of modular data, e.g. {"su", "3", "2"},
/// {"lie", "G2", "1"}, {"file", "data.json"}, {"trivial"}.
struct FamilySpec {
  std::string kind;  // su, lie, file, trivial
  int N = 0;
  int k = 0;
  std::string lie_type;
  std::string path;

  std::string name() const;
  nlohmann::json metadata() const;
};

/// Throws std::invalid_argument with a usage-style message.
FamilySpec parse_family(const std::vector<std::string>& args);
/// Applies MF_TOL when set.
ModularData<double> build_family(const FamilySpec& spec);

}  // namespace mtc
