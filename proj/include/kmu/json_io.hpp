#pragma once

#include <json.hpp>

#include "kmu/betti.hpp"
#include "kmu/geometry.hpp"
#include "kmu/invariants.hpp"
#include "kmu/singularity.hpp"
#include "kmu/unprojection.hpp"

namespace kmu {

using Json = nlohmann::json;

Json ring_to_json(const GradedRing& ring);
RingPtr ring_from_json(const Json& j);

Json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const Json& j);

Json ambient_to_json(const AmbientSpace& a);
AmbientSpace ambient_from_json(const Json& j, Field default_field);

Json spec_to_json(const VarietySpec& v);
VarietySpec spec_from_json(const Json& j, Field default_field);

Json invariants_to_json(const InvariantSet& inv);
InvariantSet invariants_from_json(const Json& j);

Json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

Json unprojection_to_json(const UnprojectionResult& r);

Json singularity_report_to_json(const SingularityReport& r);

}  // namespace kmu
