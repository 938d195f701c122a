#include "qf/json_io.hpp"

#include <stdexcept>

using nlohmann::json;

namespace qf {

json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
    return x.get_str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("int_from_json: expected integer or decimal string");
}

namespace {

json element_to_json(const AlgebraicElement& w) {
    json coeffs = json::array();
    for (const Int& c : w.num.coeffs()) coeffs.push_back(int_to_json(c));
    return {{"shift", int_to_json(w.shift)},
            {"numerator_coeffs", coeffs},
            {"denom_exp", w.denom_exp}};
}

AlgebraicElement element_from_json(const json& j, const Int& p) {
    std::vector<Int> coeffs;
    for (const auto& c : j.at("numerator_coeffs")) coeffs.push_back(int_from_json(c));
    return {p, int_from_json(j.at("shift")), ZPoly(std::move(coeffs)),
            j.at("denom_exp").get<long>()};
}

}  // namespace

json report_to_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"checks", checks}, {"overall", rep.overall}};
}

json factorization_to_json(const PrimeFactorization& r, const Int& input_a, const Int& input_b,
                           const NormalizeResult& norm, const VerificationReport* report) {
    json q_log = json::array();
    for (const auto& s : norm.substitutions)
        q_log.push_back({{"p", int_to_json(s.p)}, {"q", s.q}});
    json factors = json::array();
    for (const auto& f : r.factors)
        factors.push_back({{"e", f.e},
                           {"f", f.f},
                           {"generator", element_to_json(f.generator)},
                           {"inert", f.inert}});
    json aux = json::object();
    for (const auto& [k, v] : r.trace.aux) aux[k] = int_to_json(v);
    json out = {{"schema_version", "1"},
                {"input", {{"a", int_to_json(input_a)}, {"b", int_to_json(input_b)}, {"p", int_to_json(r.p)}}},
                {"normalized", {{"a", int_to_json(norm.a)}, {"b", int_to_json(norm.b)}, {"q_log", q_log}}},
                {"factors", factors},
                {"table_trace", {{"row", r.trace.row}, {"auxiliaries", aux}}}};
    if (report) out["verification"] = report_to_json(*report);
    return out;
}

PrimeFactorization factorization_from_json(const json& j) {
    if (j.at("schema_version").get<std::string>() != "1")
        throw std::invalid_argument("factorization_from_json: unknown schema_version");
    Int p = int_from_json(j.at("input").at("p"));
    Int a = int_from_json(j.at("normalized").at("a"));
    Int b = int_from_json(j.at("normalized").at("b"));
    PrimeFactorization r{p, make_quartic_field(a, b), {}, {}};
    for (const auto& fj : j.at("factors")) {
        PrimeIdealFactor f{fj.at("e").get<long>(), fj.at("f").get<long>(),
                           element_from_json(fj.at("generator"), p),
                           fj.at("inert").get<bool>(), false};
        r.factors.push_back(std::move(f));
    }
    const auto& tt = j.at("table_trace");
    r.trace.row = tt.at("row").get<std::string>();
    for (const auto& [k, v] : tt.at("auxiliaries").items()) r.trace.put(k, int_from_json(v));
    return r;
}

}  // namespace qf
