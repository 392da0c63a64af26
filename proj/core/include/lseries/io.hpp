#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lseries/okada.hpp"
#include "lseries/periodic_function.hpp"

namespace lseries {

inline constexpr const char* kSchemaTag = "lseries-vanish/1";

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// On-disk description of a periodic function: a JSON object with keys
// "modulus" (positive integer) and "values" (array of exactly q rational
// strings, indexed by the residues 1..q; the last slot holds f(0)).
struct FunctionSpec {
  std::int64_t modulus = 1;
  std::vector<std::string> values;

  PeriodicFunction to_function() const;
  static FunctionSpec from_function(const PeriodicFunction& f);
};

FunctionSpec parse_function_spec(const std::string& json_text);  // throws ParseError
FunctionSpec load_function_spec(const std::string& path);        // throws ParseError
std::string function_spec_to_json(const FunctionSpec& spec);

enum class Outcome { vanishing, nonvanishing, pole };
const char* to_string(Outcome outcome);

// Full result of a decide run. Rationals stay strings; the numeric value is
// a midpoint/radius pair of decimal strings. Deterministic: identical input
// produces identical output.
struct DecisionReport {
  FunctionSpec input;
  std::string mean;
  Outcome outcome = Outcome::pole;
  std::optional<VanishingCertificate> okada;  // absent for pole
  bool theorem1_ran = false;
  std::optional<bool> theorem1_vanishing;
  std::optional<bool> theorem1_agrees;
  std::optional<std::string> numeric_midpoint;
  std::optional<std::string> numeric_radius;
  long precision_bits = 0;
  int exit_code = 0;
};

std::string decision_report_to_json(const DecisionReport& report);
std::string decision_report_to_text(const DecisionReport& report);

// Re-extracts the exact residual strings from a JSON report; used to verify
// that machine output round-trips bit for bit.
struct ParsedResiduals {
  std::vector<std::pair<std::int64_t, std::string>> condition_a;
  std::vector<std::pair<std::uint64_t, std::string>> condition_b;
};
ParsedResiduals parse_decision_residuals(const std::string& report_json);

}  // namespace lseries
