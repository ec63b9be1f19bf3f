#pragma once

#include <string>

#include "json.hpp"
#include "picardlab/constructions.hpp"

namespace picardlab {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& value);

Json inventory_to_json(const SingInventory& inventory);  // sorted [{family, index, count}]
SingInventory inventory_from_json(const Json& value);

Json report_to_json(const ConstructionReport& report);
ConstructionReport report_from_json(const Json& value);

// Two-space indented, trailing newline. Parsing and re-serialising gives the same bytes.
std::string serialize(const Json& value);

}  // namespace picardlab
