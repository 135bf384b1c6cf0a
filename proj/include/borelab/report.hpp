#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "borelab/verify.hpp"

namespace borelab {

using Json = nlohmann::ordered_json;

// Involution data: s-vector, components with their attached sets, walls and admissible roots.
Json involution_json(const GradedContext& ctx);
std::string involution_text(const GradedContext& ctx);

// Result document; the checks array stays empty unless results are given.
Json result_document(const GradedContext& ctx, const MinusculePoset& poset, const FamilyTable& families,
                     const std::vector<CheckResult>* checks = nullptr);
std::string result_text(const Json& doc);
std::string checks_text(const std::vector<CheckResult>& checks);

// Hasse diagram with maximal elements filled.
std::string hasse_dot(const GradedContext& ctx, const MinusculePoset& poset);

}  // namespace borelab
