#pragma once

#include <json.hpp>

#include "qtoric/bordism.hpp"

namespace qtoric {

using json = nlohmann::json;

inline json matrix_to_json(const CharMatrix& lambda) {
    json rows = json::array();
    for (int i = 0; i < lambda.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < lambda.cols(); ++j) row.push_back(lambda.at(i, j).str());
        rows.push_back(row);
    }
    return {{"dims", lambda.polytope().factor_dims()},
            {"ring", ring_name(lambda.ring())},
            {"rows", lambda.rows()},
            {"cols", lambda.cols()},
            {"entries", rows}};
}

inline json table_to_json(const InvariantTable& t) {
    json entries = json::array();
    for (const auto& [pi, val] : t.entries)
        entries.push_back({{"partition", pi.parts()}, {"value", val.str()}});
    return {{"ring", ring_name(t.ring)}, {"entries", entries}};
}

inline json verdict_to_json(const BordismVerdict& v) {
    json j;
    j["nonzero_unitary"] = v.nonzero_unitary;
    if (v.unitary_witness) j["unitary_witness"] = v.unitary_witness->parts();
    j["nonbounding_unoriented"] = v.nonbounding_unoriented;
    if (v.unoriented_witness) j["unoriented_witness"] = v.unoriented_witness->parts();
    return j;
}

template <class C>
json presentation_to_json(const QuotientPresentation<C>& q) {
    json subs = json::array();
    const auto& P = q.polytope();
    for (const auto& f : P.facets())
        subs.push_back({{"facet", {f.factor + 1, f.face + 1}},
                        {"class", poly_to_string(q.facet_class(f), q.var_names())}});
    json rels = json::array();
    for (const auto& rel : q.relations()) rels.push_back(poly_to_string(rel, q.var_names()));
    return {{"polytope", P.str()},
            {"variables", q.var_names()},
            {"substitutions", subs},
            {"relations", rels}};
}

inline json family_check_to_json(const FamilyCheck& f) {
    json j{{"name", f.name},
           {"l", f.l},
           {"dims", f.dims},
           {"dimension", f.dimension},
           {"valid", f.valid},
           {"special", f.special},
           {"mod2_matches_stong", f.mod2_matches_stong},
           {"indecomposable", f.indecomposable},
           {"orientable", f.orientable},
           {"passed", f.passed()}};
    if (f.stong_sw_nonzero) {
        j["stong_sw_nonzero"] = *f.stong_sw_nonzero;
        if (f.sw_witness) j["sw_witness"] = f.sw_witness->parts();
    } else {
        j["stong_sw_nonzero"] = "skipped (above cap)";
    }
    return j;
}

inline json report_to_json(const MainTheoremReport& rep) {
    json fams = json::array();
    for (const auto& f : rep.families) fams.push_back(family_check_to_json(f));
    json spor = json::array();
    for (const auto& s : rep.sporadic)
        spor.push_back({{"name", s.name},
                        {"valid", s.valid},
                        {"special", s.special},
                        {"witness_partition", s.witness_partition.parts()},
                        {"witness_value", s.witness_value.str()},
                        {"expected_value", s.expected_value.str()},
                        {"passed", s.passed()}});
    return {{"families", fams}, {"sporadic", spor}, {"all_passed", rep.all_passed()}};
}

inline json search_result_to_json(const SearchResult& res) {
    json hits = json::array();
    for (const auto& h : res.hits)
        hits.push_back({{"matrix", matrix_to_json(h.matrix)}, {"verdict", verdict_to_json(h.verdict)}});
    return {{"hits", hits},
            {"examined", res.examined},
            {"candidate_space", res.candidate_space},
            {"complete", res.complete}};
}

// Text renderings used by the CLI; byte-stable for fixed inputs.

inline std::string table_to_text(const InvariantTable& t) {
    std::ostringstream os;
    for (const auto& [pi, val] : t.entries) os << pi.str() << ' ' << val << '\n';
    return os.str();
}

inline std::string verdict_to_text(const BordismVerdict& v) {
    std::ostringstream os;
    os << "nonzero_unitary: " << (v.nonzero_unitary ? "true" : "false");
    if (v.unitary_witness) os << " witness " << v.unitary_witness->str();
    os << '\n';
    os << "nonbounding_unoriented: " << (v.nonbounding_unoriented ? "true" : "false");
    if (v.unoriented_witness) os << " witness " << v.unoriented_witness->str();
    os << '\n';
    return os.str();
}

template <class C>
std::string presentation_to_text(const QuotientPresentation<C>& q) {
    std::ostringstream os;
    os << "polytope: " << q.polytope().str() << '\n';
    os << "variables:";
    for (const auto& n : q.var_names()) os << ' ' << n;
    os << '\n';
    const auto& P = q.polytope();
    for (const auto& f : P.facets())
        os << "F" << f.factor + 1 << ',' << f.face + 1 << " -> "
           << poly_to_string(q.facet_class(f), q.var_names()) << '\n';
    os << "relations:\n";
    for (const auto& rel : q.relations())
        os << "  " << poly_to_string(rel, q.var_names()) << '\n';
    return os.str();
}

inline std::string report_to_text(const MainTheoremReport& rep) {
    std::ostringstream os;
    for (const auto& f : rep.families) {
        os << f.name << " l=" << f.l << " dim=" << f.dimension << ": valid=" << f.valid
           << " special=" << f.special << " mod2_matches_stong=" << f.mod2_matches_stong
           << " indecomposable=" << f.indecomposable << " orientable=" << f.orientable;
        if (f.stong_sw_nonzero) {
            os << " sw_nonzero=" << *f.stong_sw_nonzero;
            if (f.sw_witness) os << " witness=" << f.sw_witness->str();
        } else {
            os << " sw_nonzero=skipped";
        }
        os << " => " << (f.passed() ? "PASS" : "FAIL") << '\n';
    }
    for (const auto& s : rep.sporadic)
        os << s.name << ": valid=" << s.valid << " special=" << s.special << " chern"
           << s.witness_partition.str() << '=' << s.witness_value << " expected="
           << s.expected_value << " => " << (s.passed() ? "PASS" : "FAIL") << '\n';
    os << (rep.all_passed() ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << '\n';
    return os.str();
}

}  // namespace qtoric
