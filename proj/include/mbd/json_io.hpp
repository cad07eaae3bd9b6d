#pragma once

#include <json.hpp>

#include "mbd/session.hpp"

namespace mbd {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonVersion = 1;

Json to_json(const AxiomSet& s);  // 0-based ids
Json query_json(const Query& q, const std::vector<AxiomSet>& leading);
Json config_json(const SessionConfig& c, bool require_coherency);
Json session_json(const Session& s);  // full state
Json result_json(const Session& s);   // final ranked set; InvalidPhase before done
Json tree_json(const HSTree& t);

// Reads {"mode","n","measure","singletons","coherency","max_nodes","max_seconds"};
// missing keys keep their defaults. Throws Error on unknown values.
SessionConfig config_from_json(const Json& j, bool* require_coherency = nullptr);

Answer answer_from_string(const std::string& s);

}  // namespace mbd
