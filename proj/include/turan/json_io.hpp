#pragma once

#include <string>

#include <json.hpp>

#include "turan/classify.hpp"
#include "turan/construction.hpp"
#include "turan/graph.hpp"
#include "turan/palette.hpp"
#include "turan/reduced.hpp"

namespace turan {

// All parsers throw InvalidInput with a short description of the defect;
// serializers emit the canonical (sorted) form so round-trips are exact.

nlohmann::json graph_to_json(const ThreeGraph& g);
ThreeGraph graph_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const PaletteCertificate& c);
PaletteCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json verify_result_to_json(const VerifyResult& r);
nlohmann::json dstar_to_json(const DStar& d);
nlohmann::json report_to_json(const ClassificationReport& r);
nlohmann::json audit_to_json(const DensityAudit& a);

nlohmann::json reduced_to_json(const ReducedThreeGraph& a);
ReducedThreeGraph reduced_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const EmbeddingWitness& w);
EmbeddingWitness witness_from_json(const nlohmann::json& j);

nlohmann::json parse_json(const std::string& text);  // InvalidInput on error

}  // namespace turan
