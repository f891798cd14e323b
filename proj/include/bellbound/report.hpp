#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "bellbound/bounds.hpp"

namespace bell {

/// 12 significant digits, the precision of all text and CSV output.
std::string format_double(double x);

// Stable JSON schema:
// {"scenario":{"n":int,"d":int,"nu":"p/q"},"closed_form":float|null,
//  "brute_force":float|null,"trial_bound":float,"quantum_reference":float|null,
//  "witnesses":[{"alpha":[..],"beta":[..]}],"elapsed_ms":int}
nlohmann::json to_json(const BoundReport& report);
BoundReport bound_report_from_json(const nlohmann::json& j);

std::string bound_report_text(const BoundReport& report);
std::string bound_report_csv(const BoundReport& report);

/// Rows "d,trial_bound,ratio" for d = 2..d_max, LF line endings.
void write_ratio_csv(std::ostream& out, int d_max);

}  // namespace bell
