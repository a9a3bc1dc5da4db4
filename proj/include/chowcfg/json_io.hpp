#pragma once

#include <json.hpp>

#include "chowcfg/autgroup.hpp"
#include "chowcfg/invariants.hpp"
#include "chowcfg/presentation.hpp"
#include "chowcfg/stability.hpp"

namespace chowcfg {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "chowcfg/1";

// Rationals cross the JSON boundary as "p/q" strings only.

Json to_json(const ChowElement& a);
ChowElement chow_from_json(const Json& j);

Json to_json(const Stability& theta);
Stability stability_from_json(const Json& j);

Json to_json(const LinearForm& a);

Json to_json(const RelationPair& pair);
Json to_json(const ForbiddenFamily& fam);
Json to_json(const Certificate& cert);
Json to_json(const DistinguishReport& rep);
Json to_json(const SignedScaledPermutation& g);

CandidateMatrix matrix_from_json(const Json& j);

// Canonical rendering used wherever byte-identical output matters.
std::string render_json(const Json& j);

}  // namespace chowcfg
