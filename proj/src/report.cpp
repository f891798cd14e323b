#include "bellbound/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace bell {

using nlohmann::json;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

json assignment_to_json(const Assignment& a) {
  return json{{"alpha", a.alpha}, {"beta", a.beta}};
}

Assignment assignment_from_json(const json& j) {
  Assignment a;
  a.alpha = j.at("alpha").get<std::vector<int>>();
  a.beta = j.at("beta").get<std::vector<int>>();
  return a;
}

json optional_to_json(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

json to_json(const BoundReport& report) {
  json j;
  j["scenario"] = {{"n", report.scenario.n_parties},
                   {"d", report.scenario.n_outcomes},
                   {"nu", report.scenario.nu.str()}};
  j["closed_form"] = optional_to_json(report.closed_form);
  j["brute_force"] = optional_to_json(report.brute_force);
  j["trial_bound"] = report.trial_bound;
  j["quantum_reference"] = optional_to_json(report.quantum_reference);
  j["witnesses"] = json::array();
  for (const Assignment& w : report.witnesses)
    j["witnesses"].push_back(assignment_to_json(w));
  j["elapsed_ms"] = report.elapsed_ms;
  if (report.assignments_scanned) j["assignments_scanned"] = *report.assignments_scanned;
  if (report.argmax_count) j["argmax_count"] = *report.argmax_count;
  return j;
}

BoundReport bound_report_from_json(const json& j) {
  const auto& sc = j.at("scenario");
  BoundReport report{BellScenario(sc.at("n").get<int>(), sc.at("d").get<int>(),
                                  Rational::parse(sc.at("nu").get<std::string>()))};
  if (!j.at("closed_form").is_null()) report.closed_form = j["closed_form"].get<double>();
  if (!j.at("brute_force").is_null()) report.brute_force = j["brute_force"].get<double>();
  report.trial_bound = j.at("trial_bound").get<double>();
  if (!j.at("quantum_reference").is_null())
    report.quantum_reference = j["quantum_reference"].get<double>();
  for (const auto& w : j.at("witnesses"))
    report.witnesses.push_back(assignment_from_json(w));
  report.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  if (j.contains("assignments_scanned"))
    report.assignments_scanned = j["assignments_scanned"].get<std::uint64_t>();
  if (j.contains("argmax_count"))
    report.argmax_count = j["argmax_count"].get<std::uint64_t>();
  return report;
}

namespace {

std::string assignment_text(const Assignment& a) {
  std::ostringstream out;
  out << "alpha=(";
  for (std::size_t i = 0; i < a.alpha.size(); ++i)
    out << (i ? "," : "") << a.alpha[i];
  out << ") beta=(";
  for (std::size_t i = 0; i < a.beta.size(); ++i)
    out << (i ? "," : "") << a.beta[i];
  out << ")";
  return out.str();
}

}  // namespace

std::string bound_report_text(const BoundReport& report) {
  std::ostringstream out;
  out << "scenario: N=" << report.scenario.n_parties
      << " d=" << report.scenario.n_outcomes << " nu=" << report.scenario.nu.str()
      << "\n";
  if (report.closed_form)
    out << "closed_form        = " << format_double(*report.closed_form) << "\n";
  if (report.brute_force)
    out << "brute_force        = " << format_double(*report.brute_force) << "\n";
  out << "trial_bound        = " << format_double(report.trial_bound) << "\n";
  if (report.quantum_reference) {
    out << "quantum_reference  = " << format_double(*report.quantum_reference) << "\n";
    out << "trial_ratio        = "
        << format_double(report.trial_bound / *report.quantum_reference) << "\n";
  }
  if (report.assignments_scanned)
    out << "assignments        = " << *report.assignments_scanned << "\n";
  if (report.argmax_count) out << "argmax_count       = " << *report.argmax_count << "\n";
  for (const Assignment& w : report.witnesses)
    out << "witness            : " << assignment_text(w) << "\n";
  out << "elapsed_ms         = " << report.elapsed_ms << "\n";
  return out.str();
}

std::string bound_report_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "n,d,nu,closed_form,brute_force,trial_bound,quantum_reference\n";
  out << report.scenario.n_parties << "," << report.scenario.n_outcomes << ","
      << report.scenario.nu.str() << ","
      << (report.closed_form ? format_double(*report.closed_form) : "") << ","
      << (report.brute_force ? format_double(*report.brute_force) : "") << ","
      << format_double(report.trial_bound) << ","
      << (report.quantum_reference ? format_double(*report.quantum_reference) : "")
      << "\n";
  return out.str();
}

void write_ratio_csv(std::ostream& out, int d_max) {
  out << "d,trial_bound,ratio\n";
  for (int d = 2; d <= d_max; ++d) {
    const double t = trial_bound(d);
    out << d << "," << format_double(t) << "," << format_double(t / (d - 1))
        << "\n";
  }
}

}  // namespace bell
