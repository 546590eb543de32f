#pragma once

// JSON rendering of reports. Exact rationals are always strings "num/den";
// floats appear only as {"approx": "..."} objects on inexact paths.

#include <sametype/sametype.hpp>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace sametype::report {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1.0";

struct ReportDocument {
    std::string schema_version = report::schema_version;
    std::string command;
    std::map<std::string, std::string> inputs;
    json results;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline json rational(const Rational& r) { return format_rational(r); }

inline json optional_rational(const std::optional<Rational>& r) { return r ? rational(*r) : json(nullptr); }

inline Rational parse_rational_json(const json& j) { return parse_rational(j.get<std::string>()); }

inline std::optional<Rational> parse_optional_rational(const json& j) {
    if (j.is_null()) return std::nullopt;
    return parse_rational_json(j);
}

inline json value(const Value& v) {
    if (v.exact) return rational(*v.exact);
    return json{{"approx", format_real(v.approx)}};
}

inline json polynomial(const RationalPolynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(rational(c));
    return out;
}

inline json pgf(const RationalPGF& q) {
    return json{{"display", to_string(q)}, {"numerator", polynomial(q.numerator())},
                {"denominator", polynomial(q.denominator())}};
}

inline RationalPGF parse_pgf(const json& j) {
    auto poly = [](const json& arr) {
        std::vector<Rational> cs;
        for (const auto& c : arr) cs.push_back(parse_rational_json(c));
        return RationalPolynomial(std::move(cs));
    };
    return RationalPGF::make(poly(j.at("numerator")), poly(j.at("denominator")));
}

inline std::string verdict(const TypeCheckReport& r) {
    return r.definitions_agree ? "CONSISTENT" : "NOT-EQUIVALENT";
}

inline json to_json(const TypeCheckReport& r) {
    const auto witness = r.def21_witness_alpha();
    json direction = nullptr;
    if (r.def21_witness_alpha_xy)
        direction = "xy";
    else if (r.def21_witness_alpha_yx)
        direction = "yx";
    return json{
        {"q", rational(r.q)},
        {"alpha", rational(r.alpha.value())},
        {"q_y", rational(r.q_y)},
        {"exact", r.exact},
        {"qx_pgf", pgf(r.qx_pgf)},
        {"qy_pgf", pgf(r.qy_pgf)},
        {"thinned_x", pgf(r.thinned_x)},
        {"thinned_y", pgf(r.thinned_y)},
        {"def22_holds", r.def22_holds},
        {"def21_xy", r.def21_xy},
        {"def21_yx", r.def21_yx},
        {"definitions_agree", r.definitions_agree},
        {"def21_witness_alpha", optional_rational(witness)},
        {"def21_witness_direction", direction},
        {"def21_witness_alpha_xy", optional_rational(r.def21_witness_alpha_xy)},
        {"def21_witness_alpha_yx", optional_rational(r.def21_witness_alpha_yx)},
        {"verdict", verdict(r)},
    };
}

inline TypeCheckReport type_check_report_from_json(const json& j) {
    TypeCheckReport r;
    r.q = parse_rational_json(j.at("q"));
    r.alpha = ScaleParam(parse_rational_json(j.at("alpha")));
    r.q_y = parse_rational_json(j.at("q_y"));
    r.exact = j.at("exact").get<bool>();
    r.qx_pgf = parse_pgf(j.at("qx_pgf"));
    r.qy_pgf = parse_pgf(j.at("qy_pgf"));
    r.thinned_x = parse_pgf(j.at("thinned_x"));
    r.thinned_y = parse_pgf(j.at("thinned_y"));
    r.def22_holds = j.at("def22_holds").get<bool>();
    r.def21_xy = j.at("def21_xy").get<bool>();
    r.def21_yx = j.at("def21_yx").get<bool>();
    r.definitions_agree = j.at("definitions_agree").get<bool>();
    r.def21_witness_alpha_xy = parse_optional_rational(j.at("def21_witness_alpha_xy"));
    r.def21_witness_alpha_yx = parse_optional_rational(j.at("def21_witness_alpha_yx"));
    return r;
}

inline json scale_estimate(const std::optional<ScaleEstimate>& e) {
    if (!e) return nullptr;
    return json{{"exact", optional_rational(e->exact)}, {"approx", format_real(e->value)}};
}

inline json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

inline json to_json(const PairCheck& c, const std::string& mode) {
    json out{{"mode", mode}};
    if (mode == "fixed") {
        out["alpha"] = optional_rational(c.alpha);
        out["def22_fg"] = optional_bool(c.def22_fg);
        out["def22_gf"] = optional_bool(c.def22_gf);
        out["def21_fg"] = optional_bool(c.def21_fg);
        out["def21_gf"] = optional_bool(c.def21_gf);
    } else {
        out["def21_witness_fg"] = optional_rational(c.def21_witness_fg);
        out["def21_witness_gf"] = optional_rational(c.def21_witness_gf);
        out["def22_witness_fg"] = scale_estimate(c.def22_witness_fg);
        out["def22_witness_gf"] = scale_estimate(c.def22_witness_gf);
    }
    return out;
}

inline json to_json(const ReportDocument& doc) {
    json inputs = json::object();
    for (const auto& [k, v] : doc.inputs) inputs[k] = v;
    return json{{"schema_version", doc.schema_version},
                {"command", doc.command},
                {"inputs", inputs},
                {"results", doc.results}};
}

inline ReportDocument document_from_json(const json& j) {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items()) doc.inputs[k] = v.get<std::string>();
    doc.results = j.at("results");
    return doc;
}

}  // namespace sametype::report
