#pragma once

#include <json.hpp>

#include "midy/primes.hpp"

namespace midy {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const BetaBase& base);
Json to_json(const Expansion& exp);
Json to_json(const MidyVerdict& v);
Json to_json(const RuleTrace& t);
Json to_json(const ComplementResult& c);

Expansion expansion_from_json(const Json& j);
MidyVerdict verdict_from_json(const Json& j);

Decision decision_from_string(const std::string& s);
Rule rule_from_string(const std::string& s);

}  // namespace midy
