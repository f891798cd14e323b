#include "bellbound/report.hpp"

#include <sstream>

#include "doctest.h"

#include "test_util.hpp"

using namespace bell;

TEST_CASE("format_double uses 12 significant digits") {
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(1.4142135623730951) == "1.41421356237");
}

TEST_CASE("bound report JSON round trip is exact") {
  BoundReport report{BellScenario(3, 4, Rational(-1, 4))};
  report.closed_form = 1.2345678901234567;
  report.brute_force = 1.2345678901234569;
  report.trial_bound = trial_bound(4);
  report.quantum_reference = 3.0;
  report.witnesses = {Assignment{{0, 1, 2}, {3, 0, 1}}, Assignment{{1, 1, 1}, {2, 2, 2}}};
  report.elapsed_ms = 42;
  report.assignments_scanned = 65536;
  report.argmax_count = 7;

  const nlohmann::json j = to_json(report);
  const BoundReport back = bound_report_from_json(j);
  CHECK(back == report);

  // emit(parse(emit(x))) is a fixed point
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("null fields survive the round trip") {
  BoundReport report{BellScenario(2, 2, Rational(1, 4))};
  report.trial_bound = trial_bound(2);

  const nlohmann::json j = to_json(report);
  CHECK(j.at("closed_form").is_null());
  CHECK(j.at("brute_force").is_null());
  CHECK(j.at("quantum_reference").is_null());
  CHECK(j.at("witnesses").empty());
  CHECK_FALSE(j.contains("assignments_scanned"));

  const BoundReport back = bound_report_from_json(j);
  CHECK(back == report);
}

TEST_CASE("schema keys are stable") {
  BoundReport report{BellScenario(2, 3, Rational(1, 4))};
  report.trial_bound = trial_bound(3);
  const nlohmann::json j = to_json(report);
  for (const char* key : {"scenario", "closed_form", "brute_force", "trial_bound",
                          "quantum_reference", "witnesses", "elapsed_ms"})
    CHECK(j.contains(key));
  CHECK(j["scenario"]["n"] == 2);
  CHECK(j["scenario"]["d"] == 3);
  CHECK(j["scenario"]["nu"] == "1/4");
}

TEST_CASE("ratio CSV format") {
  std::ostringstream out;
  write_ratio_csv(out, 5);
  const std::string text = out.str();
  CHECK(text.find("d,trial_bound,ratio\n") == 0);
  CHECK(text.find('\r') == std::string::npos);

  // d = 2 row: trial bound and ratio are both sqrt(2)
  std::istringstream in(text);
  std::string header, row2;
  std::getline(in, header);
  std::getline(in, row2);
  CHECK(row2 == "2,1.41421356237,1.41421356237");

  int rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);  // d = 3, 4, 5
}
