#pragma once

#include <string>

#include <json.hpp>

#include "qpolis/copres.hpp"
#include "qpolis/finite_ops.hpp"
#include "qpolis/game.hpp"
#include "qpolis/posite.hpp"
#include "qpolis/stream.hpp"

namespace qpolis {

using Json = nlohmann::ordered_json;

// Schemas are versioned; emitted objects carry "schema": "qpolis/v1/<kind>".

Json space_to_json(const FiniteSpace& x);
FiniteSpace space_from_json(const Json& j);  // SCHEMA_ERROR on malformed input

Json map_to_json(const FiniteMap& f);
FiniteMap map_from_json(const Json& j);

Json copres_to_json(const Copresentation& c);
/// Finite explicit form, or a named builtin: {"builtin": "reals"},
/// {"builtin": "completion", "grid_denominator": n},
/// {"builtin": "sierpinski_power", "n": k | "countable"}.
Copresentation copres_from_json(const Json& j);

Json posite_to_json(const Posite& p);
Posite posite_from_json(const Json& j);

Json report_to_json(const Report& r);
Json check_report_to_json(const CheckReport& r);
Json history_to_json(const FiniteSpace& x, const GameHistory& h);

/// FNV-1a of a byte string, hex encoded; stable across platforms.
std::string digest(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);
Json load_json(const std::string& path);  // SCHEMA_ERROR with the path on failure

}  // namespace qpolis
