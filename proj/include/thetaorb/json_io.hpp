#pragma once

#include <json.hpp>

#include "thetaorb/admissibility.hpp"
#include "thetaorb/exceptional_data.hpp"
#include "thetaorb/orbit_duality.hpp"
#include "thetaorb/root_system.hpp"
#include "thetaorb/theta_wavefront.hpp"
#include "thetaorb/weyl_characters.hpp"

namespace thetaorb {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const Verdict& v);
Json to_json(const ThetaOrbitResult& r);
Json to_json(const ThetaPropertyReport& r);
Json to_json(const SubsystemReport& r, const RootSystemData& rs);
Json to_json(const PseudoLeviPair& p);
Json to_json(const DualityTrace& t, const RootSystemData& dual);
Json to_json(const CCoefficientAudit& a);
Json to_json(const ExceptionalOrbitRecord& r);
Json to_json(const ThetaTableRecord& r);

// Inverse of to_json(Verdict); used to check the schema round-trips.
Verdict verdict_from_json(const Json& j);
Partition partition_from_json(const Json& j);

}  // namespace thetaorb
