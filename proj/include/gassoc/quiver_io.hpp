#pragma once

#include <string>

#include <json.hpp>

#include "gassoc/quiver.hpp"
#include "gassoc/representation.hpp"

namespace gassoc {

/// {"vertices":[1,2,3], "edges":[{"from":1,"to":2},...], "dynkin":"A3"}.
/// "dynkin" is optional; when present it must match the classified type.
/// Throws ParseError on malformed input, cycles, or dangling vertex ids.
Quiver quiver_from_json(const nlohmann::json& j);
nlohmann::json quiver_to_json(const Quiver& q);

Quiver load_quiver(const std::string& path);

/// Dims per vertex plus row-major matrices with entries as "p/q" strings.
nlohmann::json representation_to_json(const Representation& m);

}  // namespace gassoc
