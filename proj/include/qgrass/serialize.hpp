#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qgrass/family.hpp"
#include "qgrass/subspace.hpp"

namespace qgrass {

// Subspace wire format: {"n": .., "q": .., "dim": .., "rows": [[..], ..]}
// with rows in canonical order and entries as field-element indices.
nlohmann::ordered_json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j);

// Family wire format: {"params": {n,k,t,q}, "provenance": .., "defining":
// [..], "members": [..]}; loading re-validates every invariant.
nlohmann::ordered_json family_to_json(const Family& fam);
Family family_from_json(const nlohmann::json& j);

// Compact binary variant for large families: fixed header, then each
// member as a length-prefixed run of nibble-packed rows.
std::vector<uint8_t> family_to_binary(const Family& fam);
Family family_from_binary(const std::vector<uint8_t>& bytes);

void save_family(const Family& fam, const std::string& path, bool binary);
Family load_family(const std::string& path);

// Minimal structural schema check (the subset of JSON Schema the bundled
// report schema uses: type / required / properties / items).
bool matches_schema(const nlohmann::json& value, const nlohmann::json& schema, std::string* error = nullptr);

}  // namespace qgrass
