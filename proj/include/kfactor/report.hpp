#pragma once

#include <string>

#include <json.hpp>

#include "kfactor/factoring.hpp"
#include "kfactor/graph.hpp"
#include "kfactor/spectral.hpp"
#include "kfactor/structure_params.hpp"
#include "kfactor/verify.hpp"

namespace kfactor {

/// All reports share one self-describing envelope; field order is fixed so
/// identical invocations serialize byte-identically (timing aside).
using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1.0";

json graph_summary(const Graph& g);

json to_json(const SpectralResult& result);
json to_json(const DeficiencyWitness& witness);
json to_json(const FactorCertificate& cert);
json to_json(const FactorVerdict& verdict);
json to_json(const ParamReport& report);
json to_json(const HypothesisBreakdown& hypotheses);
json to_json(const TheoremVerdict& verdict);
json to_json(const TheoremTally& tally);
json to_json(const SweepReport& report);

/// Envelope: {schema_version, command, graph_summary?, results, timing}.
json make_report(const std::string& command, const json& parameters);

}  // namespace kfactor
