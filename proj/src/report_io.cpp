#include "lightsout/report_io.hpp"

#include <sstream>

namespace lightsout {

nlohmann::json cycle_report_to_json(const CycleReport& r) {
    nlohmann::json j{{"model", model_name(r.model)},
                     {"n", r.n},
                     {"dim", r.dim},
                     {"method", method_name(r.method)},
                     {"transient", r.transient},
                     {"cycle_length", r.cycle_length},
                     {"pow2_exponent", r.pow2_exponent},
                     {"odd_part", r.odd_part}};
    if (r.q) j["q"] = *r.q;
    if (r.field_degree) j["field_degree"] = *r.field_degree;
    return j;
}

CycleReport cycle_report_from_json(const nlohmann::json& j) {
    CycleReport r;
    r.model = model_from_name(j.at("model").get<std::string>());
    r.n = j.at("n").get<std::size_t>();
    r.dim = j.at("dim").get<std::size_t>();
    std::string method = j.at("method").get<std::string>();
    if (method == "brute") r.method = Method::brute;
    else if (method == "analytic") r.method = Method::analytic;
    else if (method == "both") r.method = Method::both;
    else throw std::invalid_argument("unknown method: " + method);
    r.transient = j.at("transient").get<std::size_t>();
    r.cycle_length = j.at("cycle_length").get<std::uint64_t>();
    r.pow2_exponent = j.at("pow2_exponent").get<unsigned>();
    r.odd_part = j.at("odd_part").get<std::uint64_t>();
    if (j.contains("q")) r.q = j.at("q").get<std::uint64_t>();
    if (j.contains("field_degree")) r.field_degree = j.at("field_degree").get<unsigned>();
    return r;
}

std::string cycle_report_csv_header() {
    return "model,n,dim,method,transient,cycle_length,pow2_exponent,odd_part,q,field_degree";
}

std::string cycle_report_csv_row(const CycleReport& r) {
    std::ostringstream os;
    os << model_name(r.model) << ',' << r.n << ',' << r.dim << ',' << method_name(r.method)
       << ',' << r.transient << ',' << r.cycle_length << ',' << r.pow2_exponent << ','
       << r.odd_part << ',';
    if (r.q) os << *r.q;
    os << ',';
    if (r.field_degree) os << *r.field_degree;
    return os.str();
}

std::string cycle_form_string(const CycleReport& r) {
    std::ostringstream os;
    if (r.field_degree) {
        os << "2^" << r.pow2_exponent << " (2^" << *r.field_degree << "-1)/" << r.q.value_or(1);
    } else {
        os << "2^0 (2^1-1)/1";
    }
    return os.str();
}

nlohmann::json verify_report_to_json(const VerifyReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const VerifyFailure& f : r.failures)
        failures.push_back({{"check", f.check_id},
                            {"inputs", f.inputs},
                            {"expected", f.expected},
                            {"got", f.got}});
    return {{"suite", r.suite},
            {"cases", r.cases},
            {"passed", r.passed},
            {"failures", failures},
            {"wall_ms", r.wall_ms}};
}

}  // namespace lightsout
