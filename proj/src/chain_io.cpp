#include "qpxval/chain_io.hpp"

#include "qpxval/errors.hpp"

namespace qpxval {

using nlohmann::json;

ChainSpecData chain_spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("chain spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("p") || !j.contains("levels"))
        throw parse_error("chain spec must be an object with \"p\" and \"levels\"");
    ChainSpecData spec;
    if (!j["p"].is_number_integer()) throw parse_error("chain spec: \"p\" must be an integer");
    spec.p = j["p"].get<std::int64_t>();
    if (!j["levels"].is_array()) throw parse_error("chain spec: \"levels\" must be an array");
    for (const auto& lv : j["levels"]) {
        if (!lv.is_object() || !lv.contains("poly") || !lv.contains("value"))
            throw parse_error("chain spec: each level needs \"poly\" and \"value\"");
        spec.levels.push_back({poly_from_string(lv["poly"].get<std::string>()),
                               rat_from_string(lv["value"].get<std::string>())});
    }
    return spec;
}

json chain_spec_to_json(const ChainSpecData& spec) {
    json levels = json::array();
    for (const auto& lv : spec.levels)
        levels.push_back({{"poly", lv.key.to_string()}, {"value", rat_to_string(lv.value)}});
    return json{{"p", spec.p}, {"levels", levels}};
}

json frame_report_json(const RTFrame& fr) {
    const ResidueField& k = fr.residue_field();
    json field{{"p", k.p()},
               {"modulus", k.is_prime_field() ? json(nullptr) : json(t_poly_to_string(k.modulus()))}};
    return json{{"n", fr.n()},
                {"gamma", rat_to_string(fr.gamma())},
                {"e", fr.e()},
                {"h", fr.h().to_string()},
                {"residue_field", field}};
}

json certificate_json(const ChainCertificate& cert) {
    json entries = json::array(), links = json::array();
    for (const auto& en : cert.entries)
        entries.push_back({{"poly", en.key.to_string()},
                           {"value", rat_to_string(en.value)},
                           {"epsilon", rat_to_string(en.epsilon)}});
    for (const auto& l : cert.links)
        links.push_back(
            {{"F", l.F.to_string()}, {"Q", l.Q.to_string()}, {"distinguished", l.distinguished}});
    return json{{"chain", entries}, {"links", links}};
}

json slope_multiset_json(const SlopeMultiset& s) {
    json values = json::array();
    for (const auto& [v, m] : s.values)
        values.push_back({{"value", rat_to_string(v)}, {"multiplicity", m}});
    return json{{"values", values}, {"zero_roots", s.zero_roots}};
}

json axiom_report_json(const AxiomReport& rep) {
    json viols = json::array();
    for (const auto& v : rep.violations)
        viols.push_back({{"f", v.f.to_string()}, {"g", v.g.to_string()}, {"law", v.law}});
    return json{{"pairs_checked", rep.pairs_checked}, {"violations", viols}};
}

json oracle_report_json(const DistinguishedPairReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    return json{{"verdict", to_string(rep.verdict)}, {"checks", checks}};
}

json psi_verdict_json(const PsiVerdict& v) {
    json j{{"member", v.member},
           {"wq", v.wq_value.to_string()},
           {"w", v.w_value.to_string()}};
    j["degree_witness"] = v.degree_witness ? json(*v.degree_witness) : json(nullptr);
    return j;
}

} // namespace qpxval
