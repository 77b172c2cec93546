#pragma once

#include <json.hpp>

#include "skein/diagram.hpp"
#include "skein/ring.hpp"

namespace skein {

using Json = nlohmann::ordered_json;

/// {"var":"A","terms":[[exp,"coeff"],...]} sorted by exponent, coefficients
/// as decimal strings.
Json ring_to_json(const RingElem& r, const std::string& var = "A");
RingElem ring_from_json(const Json& j);

Json diagram_to_json(const Diagram& d);

Json report_to_json(const Report& r);

}  // namespace skein
