#pragma once

// JSON serialization: chain-spec documents, frame reports, chain
// certificates and oracle/axiom reports.

#include <json.hpp>

#include "qpxval/abkp.hpp"
#include "qpxval/frame.hpp"
#include "qpxval/oracle.hpp"
#include "qpxval/valchain.hpp"

namespace qpxval {

// {"p": 3, "levels": [{"poly": "X", "value": "0"}, ...]}
ChainSpecData chain_spec_from_json(const std::string& text);
nlohmann::json chain_spec_to_json(const ChainSpecData& spec);

// {"n":..., "gamma":"a/b", "e":..., "h":"<poly>",
//  "residue_field":{"p":..., "modulus":"<poly in t>"|null}}
nlohmann::json frame_report_json(const RTFrame& fr);

// {"chain":[{"poly":..., "value":"a/b", "epsilon":"a/b"}...],
//  "links":[{"F":..., "Q":..., "distinguished":true}...]}
nlohmann::json certificate_json(const ChainCertificate& cert);

nlohmann::json slope_multiset_json(const SlopeMultiset& s);
nlohmann::json axiom_report_json(const AxiomReport& rep);
nlohmann::json oracle_report_json(const DistinguishedPairReport& rep);
nlohmann::json psi_verdict_json(const PsiVerdict& v);

} // namespace qpxval
