#pragma once

#include "json.hpp"
#include "varcode/codec.hpp"
#include "varcode/engine.hpp"
#include "varcode/model.hpp"

namespace varcode {

// The solve document consumed by the encode/decode commands.
struct SolveDocument {
    Instance instance;
    int optimal_m = 0;
    Cost optimal_cost = 0;
    std::vector<TraceEntry> trace;
    Code code;
};

nlohmann::json to_json(const SolveDocument& doc);
SolveDocument document_from_json(const nlohmann::json& j);

SolveDocument make_document(const Instance& inst, const Solution& solution, const Code& code);

}  // namespace varcode
