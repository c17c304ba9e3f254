#pragma once

// JSON forms of bound records, plumbing invariants and obstruction reports.
// Rationals are always strings "p/q".

#include <string>

#include <json.hpp>

#include "cobordism.hpp"
#include "plumbing.hpp"
#include "surgery.hpp"

namespace cobkit {

using json = nlohmann::ordered_json;

inline json to_json(const MBounds& b) {
    auto opt = [](const std::optional<Rational>& r) { return r ? json(r->to_fraction()) : json(nullptr); };
    return json{{"m_lower", b.m_lower.to_fraction()},
                {"mbar_upper", b.mbar_upper.to_fraction()},
                {"m_exact", opt(b.m_exact)},
                {"mbar_exact", opt(b.mbar_exact)},
                {"rokhlin", b.rokhlin ? json(b.rokhlin->value()) : json(nullptr)},
                {"provenance", b.provenance}};
}

inline MBounds mbounds_from_json(const json& j) {
    try {
        auto opt = [&](const char* key) -> std::optional<Rational> {
            if (j.at(key).is_null()) return std::nullopt;
            return Rational::parse(j.at(key).get<std::string>());
        };
        MBounds b;
        b.m_lower = Rational::parse(j.at("m_lower").get<std::string>());
        b.mbar_upper = Rational::parse(j.at("mbar_upper").get<std::string>());
        b.m_exact = opt("m_exact");
        b.mbar_exact = opt("mbar_exact");
        if (!j.at("rokhlin").is_null()) b.rokhlin = RokhlinClass(j.at("rokhlin").get<Int>());
        b.provenance = j.at("provenance").get<std::vector<std::string>>();
        return b;
    } catch (const json::exception& e) {
        throw domain_error(std::string("malformed MBounds JSON: ") + e.what());
    }
}

inline json to_json(const Inertia& i) {
    return json{{"positive", i.positive}, {"negative", i.negative}, {"zero", i.zero}};
}

inline json to_json(const TpqrInvariants& t) {
    return json{{"det", to_int(t.det)}, {"sigma", t.sigma}, {"rank", t.rank}, {"inertia", to_json(t.inertia)}};
}

inline json to_json(const ObstructionReport& r) {
    json tests = json::array();
    for (const auto& t : r.tests)
        tests.push_back(json{{"name", t.name},
                             {"verdict", t.verdict == TestVerdict::pass ? "pass" : "obstructed"},
                             {"detail", t.detail}});
    return json{{"tests", tests}, {"conclusion", conclusion_name(r)}};
}

}  // namespace cobkit
