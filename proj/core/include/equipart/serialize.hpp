#pragma once

#include <nlohmann/json.hpp>

#include "equipart/coloring.hpp"
#include "equipart/elimination.hpp"
#include "equipart/partition.hpp"
#include "equipart/setmerge.hpp"
#include "equipart/verify.hpp"

namespace equipart {

// Keys keep insertion order so emitted documents are stable byte for byte.
using Json = nlohmann::ordered_json;

Json to_json(const Witness& w);
Json to_json(const Report& r);               // {verdict, checks:[{name, pass, witness}]}
Json to_json(const Partition& p);            // {parts, trace}
Json to_json(const MergeResult& r);          // {B0, B:[{members, from}], I, q, r}
Json to_json(const Coloring& c);             // {kind, classes}
Json to_json(const EliminationStep& step);   // {"kind":"edge","v":..,"v1":..} etc.

// Accepts {"kind":..,"classes":[[...],...]} or a bare array of classes.
// Throws MalformedInput.
Coloring coloring_from_json(const Json& j);
Partition partition_from_json(const Json& j);

std::string to_string(ColoringKind kind);

}  // namespace equipart
