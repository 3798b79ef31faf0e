#include <doctest.h>

#include <random>

#include "lightsout/report_io.hpp"

using namespace lightsout;

namespace {

bool reports_equal(const CycleReport& a, const CycleReport& b) {
    return a.model == b.model && a.n == b.n && a.dim == b.dim && a.method == b.method &&
           a.transient == b.transient && a.cycle_length == b.cycle_length &&
           a.pow2_exponent == b.pow2_exponent && a.odd_part == b.odd_part && a.q == b.q &&
           a.field_degree == b.field_degree;
}

}  // namespace

TEST_CASE("json round trip") {
    for (std::size_t n : {1, 2, 7, 10, 36}) {
        CycleReport r = analytic_cl_phi(n);
        CHECK(reports_equal(cycle_report_from_json(cycle_report_to_json(r)), r));
        CycleReport s = analytic_cl_sigma(n);
        CHECK(reports_equal(cycle_report_from_json(cycle_report_to_json(s)), s));
    }
    // Round trip through the serialized text as well.
    CycleReport r = analytic_cl_sigma(12);
    auto parsed = nlohmann::json::parse(cycle_report_to_json(r).dump());
    CHECK(reports_equal(cycle_report_from_json(parsed), r));
}

TEST_CASE("json omits absent optionals") {
    nlohmann::json nil = cycle_report_to_json(analytic_cl_phi(7));  // n+1 = 8: no field
    CHECK(!nil.contains("q"));
    CHECK(!nil.contains("field_degree"));
    nlohmann::json full = cycle_report_to_json(analytic_cl_phi(6));
    CHECK(full.at("q") == 1);
    CHECK(full.at("field_degree") == 3);
}

TEST_CASE("form strings") {
    CHECK(cycle_form_string(analytic_cl_phi(36)) == "2^1 (2^18-1)/3");
    CHECK(cycle_form_string(analytic_cl_phi(11)) == "2^3 (2^1-1)/1");
    CHECK(cycle_form_string(analytic_cl_phi(15)) == "2^0 (2^1-1)/1");
}

TEST_CASE("csv row shape") {
    std::string row = cycle_report_csv_row(analytic_cl_phi(9));
    CHECK(row == "phi,9,1,analytic,1,12,2,3,1,2");
}
