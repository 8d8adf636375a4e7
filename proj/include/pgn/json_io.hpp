#pragma once

#include "pgn/template_model.hpp"

#include <json.hpp>

#include <string>

namespace pgn {

using Json = nlohmann::ordered_json;

inline Json to_json(const QuadExt& v) {
    return Json{{"a", v.a().str()}, {"b", v.b().str()}, {"r", v.r().str()}};
}

inline Json to_json(const ExtReal& v) {
    if (v.is_pos_inf()) return Json("inf");
    if (v.is_neg_inf()) return Json("-inf");
    return to_json(v.finite());
}

inline QuadExt quadext_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("r"))
        throw std::invalid_argument("expected {a, b, r} object");
    return QuadExt(Rational::parse(j.at("a").get<std::string>()),
                   Rational::parse(j.at("b").get<std::string>()),
                   Rational::parse(j.at("r").get<std::string>()));
}

inline ExtReal extreal_from_json(const Json& j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "inf") return ExtReal::pos_inf();
        if (s == "-inf") return ExtReal::neg_inf();
        throw std::invalid_argument("unknown extended-real token: " + s);
    }
    return ExtReal(quadext_from_json(j));
}

/// The one square-free discriminant > 1 shared by the template's
/// coordinates, or 0 when everything is rational.
inline Rational shared_discriminant(const Template& t) {
    Rational r(0);
    auto absorb = [&](const QuadExt& v) {
        if (v.is_rational()) return;
        if (r.is_zero()) r = v.r();
        else if (r != v.r())
            throw std::invalid_argument("template mixes discriminants " + r.str() + " and " +
                                        v.r().str());
    };
    for (const auto* list : {&t.preperiod, &t.period})
        for (const auto& bp : *list) {
            absorb(bp.q);
            for (const auto& v : bp.values) absorb(v);
        }
    absorb(t.lambda);
    return r;
}

inline Json to_json(const Template& t) {
    auto points = [](const std::vector<Breakpoint>& bps) {
        Json arr = Json::array();
        for (const auto& bp : bps) {
            Json vals = Json::array();
            for (const auto& v : bp.values) vals.push_back(to_json(v));
            arr.push_back(Json{{"q", to_json(bp.q)}, {"values", vals}});
        }
        return arr;
    };
    return Json{{"n", t.n},
                {"r", shared_discriminant(t).str()},
                {"preperiod", points(t.preperiod)},
                {"period", points(t.period)},
                {"lambda", to_json(t.lambda)}};
}

/// Loads a template. By default it re-validates and rejects invalid data;
/// verification flows pass enforce_valid = false so they can report the
/// violated clauses themselves.
inline Template template_from_json(const Json& j, bool enforce_valid = true) {
    Template t;
    t.n = j.at("n").get<int>();
    auto points = [](const Json& arr) {
        std::vector<Breakpoint> bps;
        for (const auto& e : arr) {
            Breakpoint bp;
            bp.q = quadext_from_json(e.at("q"));
            for (const auto& v : e.at("values")) bp.values.push_back(quadext_from_json(v));
            bps.push_back(std::move(bp));
        }
        return bps;
    };
    t.preperiod = points(j.at("preperiod"));
    t.period = points(j.at("period"));
    t.lambda = quadext_from_json(j.at("lambda"));
    if (enforce_valid) {
        auto report = validate(t);
        if (!report.ok()) throw std::invalid_argument("invalid template: " + report.summary());
    }
    Rational declared = Rational::parse(j.at("r").get<std::string>());
    Rational actual = shared_discriminant(t);
    if (declared != actual)
        throw std::invalid_argument("declared discriminant " + declared.str() +
                                    " does not match coordinates (" + actual.str() + ")");
    return t;
}

inline std::string dump_template(const Template& t) { return to_json(t).dump(2) + "\n"; }

} // namespace pgn
