#include "lseries/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lseries {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::vanishing: return "vanishing";
    case Outcome::nonvanishing: return "nonvanishing";
    case Outcome::pole: return "pole";
  }
  return "?";
}

PeriodicFunction FunctionSpec::to_function() const {
  std::vector<Rational> parsed;
  parsed.reserve(values.size());
  for (const auto& s : values) {
    try {
      parsed.push_back(parse_rational(s));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return PeriodicFunction(modulus, std::move(parsed));
}

FunctionSpec FunctionSpec::from_function(const PeriodicFunction& f) {
  FunctionSpec spec;
  spec.modulus = f.modulus();
  for (const auto& v : f.values()) spec.values.push_back(to_string(v));
  return spec;
}

FunctionSpec parse_function_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("function spec: expected a JSON object");
  if (!doc.contains("modulus") || !doc["modulus"].is_number_integer()) {
    throw ParseError("function spec: missing integer key \"modulus\"");
  }
  if (!doc.contains("values") || !doc["values"].is_array()) {
    throw ParseError("function spec: missing array key \"values\"");
  }
  FunctionSpec spec;
  spec.modulus = doc["modulus"].get<std::int64_t>();
  if (spec.modulus < 1) throw ParseError("function spec: modulus must be >= 1");
  for (const auto& v : doc["values"]) {
    if (!v.is_string()) {
      throw ParseError("function spec: values must be rational strings");
    }
    spec.values.push_back(v.get<std::string>());
  }
  if (static_cast<std::int64_t>(spec.values.size()) != spec.modulus) {
    throw ParseError("function spec: expected exactly modulus values");
  }
  return spec;
}

FunctionSpec load_function_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_function_spec(buffer.str());
}

std::string function_spec_to_json(const FunctionSpec& spec) {
  ordered_json doc;
  doc["modulus"] = spec.modulus;
  doc["values"] = spec.values;
  return doc.dump();
}

namespace {

ordered_json input_json(const FunctionSpec& spec) {
  ordered_json in;
  in["modulus"] = spec.modulus;
  in["values"] = spec.values;
  return in;
}

ordered_json certificate_json(const VanishingCertificate& cert) {
  ordered_json c;
  c["decision"] = cert.decision;
  ordered_json a = ordered_json::array();
  for (const auto& [unit, residual] : cert.condition_a) {
    a.push_back({{"a", unit}, {"residual", to_string(residual)}});
  }
  ordered_json b = ordered_json::array();
  for (const auto& [p, residual] : cert.condition_b) {
    b.push_back({{"p", p}, {"residual", to_string(residual)}});
  }
  c["condition_a"] = std::move(a);
  c["condition_b"] = std::move(b);
  return c;
}

}  // namespace

std::string decision_report_to_json(const DecisionReport& report) {
  ordered_json doc;
  doc["schema"] = kSchemaTag;
  doc["command"] = "decide";
  doc["input"] = input_json(report.input);
  doc["mean"] = report.mean;
  doc["decision"] = to_string(report.outcome);
  if (report.okada) {
    doc["okada"] = certificate_json(*report.okada);
  } else {
    doc["okada"] = nullptr;
  }
  if (report.theorem1_ran) {
    doc["theorem1"] = {{"ran", true},
                       {"vanishing", *report.theorem1_vanishing},
                       {"agrees", *report.theorem1_agrees}};
  } else {
    doc["theorem1"] = {{"ran", false}};
  }
  if (report.numeric_midpoint) {
    doc["numeric"] = {{"midpoint", *report.numeric_midpoint},
                      {"radius", *report.numeric_radius},
                      {"precision_bits", report.precision_bits}};
  } else {
    doc["numeric"] = nullptr;
  }
  doc["exit_code"] = report.exit_code;
  return doc.dump(2);
}

std::string decision_report_to_text(const DecisionReport& report) {
  std::ostringstream os;
  os << "modulus   " << report.input.modulus << "\n";
  os << "values    ";
  for (std::size_t i = 0; i < report.input.values.size(); ++i) {
    if (i) os << " ";
    os << report.input.values[i];
  }
  os << "\n";
  os << "mean      " << report.mean << "\n";
  os << "decision  " << to_string(report.outcome) << "\n";
  if (report.okada) {
    os << "condition A residuals (unit a -> sum_m f(am)/m):\n";
    for (const auto& [a, r] : report.okada->condition_a) {
      os << "  a=" << a << "  " << to_string(r) << "\n";
    }
    os << "condition B residuals (prime p -> sum f(r) eps(r,p)):\n";
    for (const auto& [p, r] : report.okada->condition_b) {
      os << "  p=" << p << "  " << to_string(r) << "\n";
    }
  }
  if (report.theorem1_ran) {
    os << "theorem1 route: " << (*report.theorem1_vanishing ? "vanishing" : "nonvanishing")
       << " (" << (*report.theorem1_agrees ? "agrees" : "DISAGREES") << ")\n";
  }
  if (report.numeric_midpoint) {
    os << "L(1,f) ~  " << *report.numeric_midpoint << " +- " << *report.numeric_radius << "  ("
       << report.precision_bits << " bits)\n";
  }
  return os.str();
}

ParsedResiduals parse_decision_residuals(const std::string& report_json) {
  json doc;
  try {
    doc = json::parse(report_json);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON report: ") + e.what());
  }
  ParsedResiduals out;
  if (!doc.contains("okada") || doc["okada"].is_null()) return out;
  for (const auto& row : doc["okada"]["condition_a"]) {
    out.condition_a.emplace_back(row["a"].get<std::int64_t>(),
                                 row["residual"].get<std::string>());
  }
  for (const auto& row : doc["okada"]["condition_b"]) {
    out.condition_b.emplace_back(row["p"].get<std::uint64_t>(),
                                 row["residual"].get<std::string>());
  }
  return out;
}

}  // namespace lseries
