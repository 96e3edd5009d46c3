#pragma once

// JSON renderings with a fixed key order. Node indices are 1-based and
// restricted-root coordinates are exact fractions {"num", "den"}.

#include "json.hpp"

#include "satake/epsilon.hpp"
#include "satake/satake.hpp"
#include "satake/verdict.hpp"

namespace satake {

using Json = nlohmann::ordered_json;

Json fraction_json(long long num, long long den);

Json record_json(const RealFormRecord& rec);
Json classification_json(const ClassificationTable& table);
Json restricted_json(const RestrictedRootData& data);
Json verdict_json(const StructureVerdict& v);
Json permutation_json(const NodePermutation& p);

}  // namespace satake
