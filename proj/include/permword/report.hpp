#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permword/suites.hpp"

namespace permword {

inline constexpr const char* kReportSchema = "permword/1";

namespace detail {

inline std::string cell(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "";
}

inline std::string cell(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : "";
}

}  // namespace detail

// Shared tabular schema for tau/rho reports and suite rows.
inline std::string to_csv(const std::vector<ReportRow>& rows) {
  std::string out = "word,n,tau,tau_even,tau_odd,rho,formula,match,converged,horizon\n";
  for (const auto& r : rows) {
    out += r.word + ',' + std::to_string(r.n) + ',' + detail::cell(r.tau) + ',' +
           detail::cell(r.tau_even) + ',' + detail::cell(r.tau_odd) + ',' + detail::cell(r.rho) +
           ',' + detail::cell(r.formula) + ',' + detail::cell(r.match) + ',' +
           detail::cell(r.converged) + ',' + std::to_string(r.horizon) + '\n';
  }
  return out;
}

inline nlohmann::ordered_json rows_to_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["word"] = r.word;
    j["n"] = r.n;
    if (r.tau) j["tau"] = *r.tau;
    if (r.tau_even) j["tau_even"] = *r.tau_even;
    if (r.tau_odd) j["tau_odd"] = *r.tau_odd;
    if (r.rho) j["rho"] = *r.rho;
    if (r.formula) j["formula"] = *r.formula;
    if (r.match) j["match"] = *r.match;
    if (r.converged) j["converged"] = *r.converged;
    j["horizon"] = r.horizon;
    if (!r.note.empty()) j["note"] = r.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline nlohmann::ordered_json to_json(const SuiteReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = rep.suite;
  j["word"] = rep.word;
  j["horizon"] = rep.horizon;
  switch (rep.outcome()) {
    case SuiteOutcome::pass: j["outcome"] = "pass"; break;
    case SuiteOutcome::fail: j["outcome"] = "fail"; break;
    case SuiteOutcome::inconclusive: j["outcome"] = "inconclusive"; break;
  }
  j["rows"] = rows_to_json(rep.rows);
  j["counterexamples"] = rep.counterexamples;
  return j;
}

}  // namespace permword
