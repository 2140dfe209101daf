#include "varcode/document.hpp"

#include <stdexcept>

namespace varcode {

nlohmann::json to_json(const SolveDocument& doc) {
    nlohmann::json j;
    j["costs"] = doc.instance.costs;
    j["denominator"] = doc.instance.denominator;
    j["n"] = doc.instance.word_count;
    j["optimal_m"] = doc.optimal_m;
    j["optimal_cost"] = doc.optimal_cost;
    j["trace"] = nlohmann::json::array();
    for (const TraceEntry& e : doc.trace) {
        j["trace"].push_back({{"m", e.m}, {"cost", e.cost}});
    }
    j["codewords"] = nlohmann::json::array();
    for (size_t s = 0; s < doc.code.words.size(); ++s) {
        j["codewords"].push_back({{"symbol", s},
                                  {"letters", doc.code.words[s]},
                                  {"length", doc.code.lengths[s]}});
    }
    return j;
}

SolveDocument document_from_json(const nlohmann::json& j) {
    SolveDocument doc;
    doc.instance.costs = j.at("costs").get<std::vector<Cost>>();
    doc.instance.letter_count = static_cast<int>(doc.instance.costs.size());
    doc.instance.denominator = j.at("denominator").get<std::int64_t>();
    doc.instance.word_count = j.at("n").get<std::int64_t>();
    doc.optimal_m = j.at("optimal_m").get<int>();
    doc.optimal_cost = j.at("optimal_cost").get<Cost>();
    if (j.contains("trace")) {
        for (const auto& e : j.at("trace")) {
            doc.trace.push_back(TraceEntry{e.at("m").get<int>(), e.at("cost").get<Cost>()});
        }
    }
    doc.code.letter_count = doc.instance.letter_count;
    doc.code.words.resize(j.at("codewords").size());
    doc.code.lengths.resize(j.at("codewords").size());
    for (const auto& w : j.at("codewords")) {
        auto s = w.at("symbol").get<size_t>();
        if (s >= doc.code.words.size()) throw std::invalid_argument("symbol out of range in document");
        doc.code.words[s] = w.at("letters").get<std::vector<int>>();
        doc.code.lengths[s] = w.at("length").get<Cost>();
    }
    return doc;
}

SolveDocument make_document(const Instance& inst, const Solution& solution, const Code& code) {
    SolveDocument doc;
    doc.instance = inst;
    doc.optimal_m = solution.optimal_m;
    doc.optimal_cost = solution.optimal_cost;
    doc.trace = solution.trace;
    doc.code = code;
    return doc;
}

}  // namespace varcode
