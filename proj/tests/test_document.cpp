#include "doctest.h"
#include "varcode/codec.hpp"
#include "varcode/document.hpp"
#include "varcode/engine.hpp"
#include "varcode/model.hpp"

using namespace varcode;

TEST_CASE("solve documents round-trip through JSON") {
    std::vector<Rational> raw{{1, 2}, {1, 1}};
    Instance inst = validate_instance(raw, 6);
    Solution solution = compute_optimal(inst);
    Code code = assign_codewords(solution.tree, inst);
    SolveDocument doc = make_document(inst, solution, code);

    nlohmann::json j = to_json(doc);
    CHECK(j["costs"] == nlohmann::json({1, 2}));
    CHECK(j["denominator"] == 2);
    CHECK(j["n"] == 6);
    CHECK(j["optimal_m"] == solution.optimal_m);
    CHECK(j["optimal_cost"] == solution.optimal_cost);
    CHECK(j["trace"].size() == solution.trace.size());
    CHECK(j["codewords"].size() == 6);
    CHECK(j["codewords"][0]["symbol"] == 0);

    SolveDocument back = document_from_json(j);
    CHECK(back.instance.costs == inst.costs);
    CHECK(back.instance.denominator == inst.denominator);
    CHECK(back.instance.word_count == inst.word_count);
    CHECK(back.optimal_cost == solution.optimal_cost);
    CHECK(back.trace == solution.trace);
    CHECK(back.code.words == code.words);
    CHECK(back.code.lengths == code.lengths);

    // the decoded document drives the codec directly
    std::vector<std::int64_t> symbols{0, 3, 5};
    CHECK(decode(back.code, encode(back.code, symbols)) == symbols);
}
