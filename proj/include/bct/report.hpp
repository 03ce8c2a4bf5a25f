#pragma once

// Report rendering for the command line tool.
//
// JSON layout (keys in this order):
//   { "field": tag, "curve": "[a1,a2,a3,a4,a6]",
//     "torsion": { "invariants": [m, n], "order": N, "generators": ["(x, y)", ...] },
//     "growths": [ { "d": radicand, "d_class": canonical radicand, "group": "C2xC8",
//                    "order": N, "generators": [...], "provenance": ["psi16:quadratic", ...] } ] }
//
// "growths" is omitted for plain torsion reports and is sorted by d_class.

#include "bct/growth.hpp"
#include "bct/parse.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace bct {

using ordered_json = nlohmann::ordered_json;

inline std::string field_tag(const QuadField& K) {
    if (K.D() == -1) return "Qi";
    return "Qsqrt" + std::to_string(K.D());
}

template <class E>
std::string render_point(const Point<E>& P) {
    if (P.infinity) return "O";
    return "(" + render(P.x) + ", " + render(P.y) + ")";
}

template <class E>
ordered_json torsion_json(const TorsionGroup<E>& T) {
    ordered_json j;
    j["invariants"] = {T.invariants.m, T.invariants.n};
    j["order"] = T.order();
    ordered_json gens = ordered_json::array();
    for (const auto& P : T.generators) gens.push_back(render_point(P));
    j["generators"] = gens;
    return j;
}

inline ordered_json torsion_report_json(const WeierstrassCurve<QuadElem>& C, const TorsionGroup<QuadElem>& T) {
    ordered_json j;
    j["field"] = field_tag(C.field());
    j["curve"] = render_curve(C);
    j["torsion"] = torsion_json(T);
    return j;
}

inline ordered_json growth_report_json(const WeierstrassCurve<QuadElem>& C, const GrowthReport& rep) {
    ordered_json j = torsion_report_json(C, rep.base);
    ordered_json gs = ordered_json::array();
    for (const auto& r : rep.records) {
        ordered_json g;
        g["d"] = render(r.found_d);
        g["d_class"] = render(r.d);
        g["group"] = r.group.invariants.name();
        g["order"] = r.group.order();
        ordered_json gens = ordered_json::array();
        for (const auto& P : r.group.generators) gens.push_back(render_point(P));
        g["generators"] = gens;
        g["provenance"] = r.provenance;
        gs.push_back(g);
    }
    j["growths"] = gs;
    return j;
}

inline std::string torsion_report_text(const WeierstrassCurve<QuadElem>& C, const TorsionGroup<QuadElem>& T) {
    std::ostringstream os;
    os << "field: " << field_tag(C.field()) << "\n";
    os << "curve: " << render_curve(C) << "\n";
    os << "E(K)_tor = " << T.invariants.name() << " (order " << T.order() << ")\n";
    for (const auto& P : T.generators) os << "  generator " << render_point(P) << "\n";
    return os.str();
}

inline std::string growth_report_text(const WeierstrassCurve<QuadElem>& C, const GrowthReport& rep) {
    std::ostringstream os;
    os << torsion_report_text(C, rep.base);
    if (rep.records.empty()) {
        os << "no growth in quadratic extensions\n";
        return os.str();
    }
    os << "E(K)_tor | d | E(K(sqrt d))_tor | model | found via\n";
    for (const auto& r : rep.records) {
        os << rep.base.invariants.name() << " | " << render(r.d) << " | " << r.group.invariants.name() << " | "
           << render_curve(C) << " |";
        for (const auto& p : r.provenance) os << " " << p;
        os << "\n";
    }
    return os.str();
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

inline std::string growth_report_csv(const WeierstrassCurve<QuadElem>& C, const GrowthReport& rep, bool header = true) {
    std::ostringstream os;
    if (header) os << "field,curve,base_group,d,d_class,group,provenance\n";
    for (const auto& r : rep.records) {
        std::string prov;
        for (const auto& p : r.provenance) prov += (prov.empty() ? "" : ";") + p;
        os << field_tag(C.field()) << "," << csv_quote(render_curve(C)) << "," << rep.base.invariants.name() << ","
           << csv_quote(render(r.found_d)) << "," << csv_quote(render(r.d)) << "," << r.group.invariants.name() << ","
           << csv_quote(prov) << "\n";
    }
    return os.str();
}

}  // namespace bct
