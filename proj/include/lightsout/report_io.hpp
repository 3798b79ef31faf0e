#ifndef LIGHTSOUT_REPORT_IO_HPP
#define LIGHTSOUT_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "lightsout/cycles.hpp"
#include "lightsout/verify.hpp"

namespace lightsout {

// Keys: model, n, dim, method, transient, cycle_length, pow2_exponent,
// odd_part, q, field_degree; absent optional fields are omitted.
nlohmann::json cycle_report_to_json(const CycleReport& r);
CycleReport cycle_report_from_json(const nlohmann::json& j);

std::string cycle_report_csv_header();
std::string cycle_report_csv_row(const CycleReport& r);

// "2^s (2^j-1)/q" with j = sord2(b); "2^0 (2^1-1)/1" for the nilpotent rows.
std::string cycle_form_string(const CycleReport& r);

nlohmann::json verify_report_to_json(const VerifyReport& r);

}  // namespace lightsout

#endif
