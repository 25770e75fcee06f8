#pragma once

#include <json.hpp>

#include "throttle/constructive.hpp"
#include "throttle/domination.hpp"
#include "throttle/forcing.hpp"
#include "throttle/throttling.hpp"

namespace throttle {

using Json = nlohmann::json;

Json to_json(const VertexSet& s);
Json to_json(PropagationTime t);
Json to_json(const PropagationTrace& trace);
Json to_json(const ThrottlingResult& r);
Json to_json(const DominationCertificate& c);
Json to_json(const BoundCertificate& c);
Json to_json(const EqualityReport& r);

}  // namespace throttle
