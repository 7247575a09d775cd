#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "signed_spectra/extremal.hpp"
#include "signed_spectra/graph_io.hpp"

namespace signed_spectra {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed:
      return "CONFIRMED";
    case Verdict::Counterexample:
      return "COUNTEREXAMPLE";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

namespace {

nlohmann::ordered_json param_json(const ParamValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* d = std::get_if<double>(&v)) return round12(*d);
  return std::get<std::string>(v);
}

std::string param_text(const ParamValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return fmt::format("{}", *i);
  if (const auto* d = std::get_if<double>(&v)) return format_real(*d);
  return std::get<std::string>(v);
}

}  // namespace

std::string report_to_json(const ExtremalReport& report) {
  nlohmann::ordered_json j;
  j["theorem"] = report.theorem;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) j["params"][name] = param_json(value);
  j["search_space"] = report.search_space;
  j["extremal_value"] = round12(report.extremal_value);
  j["witnesses"] = report.witnesses;
  j["ties"] = nlohmann::ordered_json::array();
  for (const auto& t : report.ties) {
    nlohmann::ordered_json entry;
    entry["witness"] = t.witness;
    entry["value"] = round12(t.value);
    entry["multiplicity"] = t.multiplicity;
    j["ties"].push_back(entry);
  }
  j["verdict"] = std::string(to_string(report.verdict));
  j["elapsed_seconds"] = std::round(report.elapsed_seconds * 1e3) / 1e3;
  return j.dump(2) + "\n";
}

std::string report_to_text(const ExtremalReport& report) {
  std::string out = fmt::format("theorem: {}\n", report.theorem);
  out += "params:";
  for (const auto& [name, value] : report.params) out += fmt::format(" {}={}", name, param_text(value));
  out += fmt::format("\nsearch_space: {}\nextremal_value: {}\n", report.search_space,
                     format_real(report.extremal_value));
  for (std::size_t i = 0; i < report.ties.size(); ++i) {
    out += fmt::format("tie {}: value {} multiplicity {}\n", i + 1, format_real(report.ties[i].value),
                       report.ties[i].multiplicity);
  }
  for (const auto& note : report.notes) out += fmt::format("note: {}\n", note);
  out += fmt::format("witnesses: {}\n", report.witnesses.size());
  for (const auto& w : report.witnesses) out += w;
  out += fmt::format("verdict: {}\nelapsed_seconds: {:.3f}\n", to_string(report.verdict), report.elapsed_seconds);
  return out;
}

}  // namespace signed_spectra
