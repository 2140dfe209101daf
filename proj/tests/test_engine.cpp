#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "varcode/baseline.hpp"
#include "varcode/engine.hpp"
#include "varcode/model.hpp"

using namespace varcode;

namespace {

// Terminals of T_m computed from first principles: the n minimum children of
// the non-terminals {1..m} that are not themselves non-terminals.
std::vector<NodeRef> expected_terminals(const CodeTree& tree, const Instance& inst) {
    std::set<std::pair<int, int>> non_terminal_ids;
    for (size_t rank = 2; rank <= tree.non_terminals.size(); ++rank) {
        const TreeNode& u = tree.non_terminals[rank - 1];
        non_terminal_ids.insert({u.parent, u.child_index});
    }
    std::vector<NodeRef> candidates;
    for (size_t rank = 1; rank <= tree.non_terminals.size(); ++rank) {
        for (int i = 1; i <= inst.letter_count; ++i) {
            if (non_terminal_ids.count({static_cast<int>(rank), i})) continue;
            candidates.push_back(NodeRef{static_cast<int>(rank), i,
                                         tree.non_terminals[rank - 1].depth + inst.cost(i)});
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.resize(static_cast<size_t>(inst.word_count));
    return candidates;
}

std::vector<NodeRef> sorted_terminals(const CodeTree& tree) {
    std::vector<NodeRef> t = tree.terminals;
    std::sort(t.begin(), t.end());
    return t;
}

std::vector<Instance> small_grid() {
    std::vector<Instance> grid;
    const std::vector<Cost> pool{1, 2, 3, 5};
    for (size_t a = 0; a < pool.size(); ++a)
        for (size_t b = a; b < pool.size(); ++b) {
            for (std::int64_t n = 2; n <= 9; ++n)
                grid.push_back(make_instance({pool[a], pool[b]}, n));
            for (size_t c = b; c < pool.size(); ++c)
                for (std::int64_t n = 2; n <= 9; ++n)
                    grid.push_back(make_instance({pool[a], pool[b], pool[c]}, n));
        }
    return grid;
}

}  // namespace

TEST_CASE("create builds T_mmin for the running example (2,2,5), n=10") {
    Instance inst = make_instance({2, 2, 5}, 10);
    TreeState state(inst);
    CHECK(state.m_min() == 5);
    CHECK(state.m() == 5);
    CHECK(state.cost() == 60);
    CHECK(state.low(1) == 3);
    CHECK(state.low(2) == 3);
    CHECK(state.low(3) == 1);
    CHECK(state.high(1) == 5);
    CHECK(state.high(2) == 5);
    CHECK(state.high(3) == 4);
}

TEST_CASE("create handles n <= r directly") {
    Instance inst = make_instance({1, 2, 3}, 3);
    TreeState state(inst);
    CHECK(state.m() == 1);
    CHECK(state.cost() == 6);
    CHECK(state.m_deg() == 3);
}

TEST_CASE("create for the uniform binary tree, n=6") {
    Instance inst = make_instance({1, 1}, 6);
    TreeState state(inst);
    CHECK(state.m_min() == 5);
    CHECK(state.cost() == 16);
}

TEST_CASE("sprout and level walk the running example through T_6, T_7, T_8") {
    Instance inst = make_instance({2, 2, 5}, 10);
    TreeState state(inst);

    state.advance();  // T_6
    CHECK(state.m() == 6);
    CHECK(state.cost() == 59);
    CHECK(state.m_deg() == 2);
    CHECK(state.depth(1) == 0);
    CHECK(state.depth(2) == 2);
    CHECK(state.depth(3) == 2);
    CHECK(state.depth(4) == 4);
    CHECK(state.depth(5) == 4);
    CHECK(state.depth(6) == 4);
    CHECK(state.low(1) == 4);
    CHECK(state.low(2) == 3);
    CHECK(state.low(3) == 1);
    CHECK(state.high(1) == 6);
    CHECK(state.high(2) == 6);
    CHECK(state.high(3) == 3);

    state.advance();  // T_7
    CHECK(state.cost() == 60);
    CHECK(state.low(1) == 4);
    CHECK(state.low(2) == 4);
    CHECK(state.low(3) == 1);
    CHECK(state.high(1) == 7);
    CHECK(state.high(2) == 7);
    CHECK(state.high(3) == 2);
    CHECK(state.proper());

    state.advance();  // T_8 is improper
    CHECK(state.cost() == 62);
    CHECK(state.low(1) == 4);
    CHECK(state.low(2) == 4);
    CHECK(state.low(3) == 2);
    CHECK(state.high(1) == 8);
    CHECK(state.high(2) == 7);
    CHECK(state.high(3) == 2);
    CHECK_FALSE(state.proper());
}

TEST_CASE("compute_optimal on the running example") {
    Instance inst = make_instance({2, 2, 5}, 10);
    Solution solution = compute_optimal(inst);
    CHECK(solution.optimal_m == 6);
    CHECK(solution.optimal_cost == 59);
    CHECK(solution.trace == std::vector<TraceEntry>{{5, 60}, {6, 59}, {7, 60}});
}

TEST_CASE("compute_optimal fixed points") {
    CHECK(compute_optimal(make_instance({1, 1}, 6)).optimal_cost == 16);
    CHECK(compute_optimal(make_instance({1, 2}, 6)).optimal_cost == 23);
    CHECK(compute_optimal(make_instance({3, 4, 9}, 2)).optimal_cost == 7);
    CHECK(compute_optimal(make_instance({1, 2, 3, 5}, 2)).optimal_cost == 3);
}

TEST_CASE("compute_optimal handles n=1 as the empty-word code") {
    Solution solution = compute_optimal(make_instance({1, 2}, 1));
    CHECK(solution.optimal_cost == 0);
    CHECK(solution.optimal_m == 0);
    CHECK(solution.tree.terminals.size() == 1);
    CHECK(solution.trace.empty());
}

TEST_CASE("materialize_tree matches the displayed T_6 state") {
    Instance inst = make_instance({2, 2, 5}, 10);
    CodeTree tree = materialize_tree(inst, 6);
    CHECK(tree.non_terminals.size() == 6);
    CHECK(tree.terminals.size() == 10);
    CHECK(tree.cost == 59);
    CHECK(recompute_cost(tree) == 59);

    CHECK_THROWS_AS(materialize_tree(inst, 4), std::out_of_range);
    CHECK_THROWS_AS(materialize_tree(inst, 8), std::out_of_range);

    CodeTree first = materialize_tree(inst, 5);
    CHECK(first.cost == 60);
    CHECK(recompute_cost(first) == 60);
}

TEST_CASE("materialized trees are exactly the n minimum children of {1..m}") {
    for (const Instance& inst : small_grid()) {
        TreeState state(inst);
        while (true) {
            CodeTree tree = state.materialize();
            CHECK(tree.terminals.size() == static_cast<size_t>(inst.word_count));
            CHECK(recompute_cost(tree) == state.cost());
            CHECK(sorted_terminals(tree) == expected_terminals(tree, inst));
            CHECK(check_shallow(tree, inst));
            if (!state.proper()) break;
            state.advance();
            if (!state.proper()) break;
        }
    }
}

TEST_CASE("sprout always converts the minimum terminal") {
    for (const Instance& inst : small_grid()) {
        TreeState state(inst);
        while (state.proper()) {
            CodeTree tree = state.materialize();
            NodeRef min_terminal =
                *std::min_element(tree.terminals.begin(), tree.terminals.end());
            int previous_m = state.m();
            state.advance();
            if (state.m() == previous_m) break;
            CodeTree next = state.materialize();
            const TreeNode& converted = next.non_terminals[static_cast<size_t>(previous_m)];
            CHECK(converted.parent == min_terminal.parent);
            CHECK(converted.child_index == min_terminal.child_index);
            if (!state.proper()) break;
        }
    }
}

TEST_CASE("degree bound and trace unimodality hold across the grid") {
    for (const Instance& inst : small_grid()) {
        TreeState state(inst);
        std::vector<Cost> costs{state.cost()};
        // d_m <= (m + n - 1) / m for every tree in the run
        CHECK(static_cast<std::int64_t>(state.m_deg()) * state.m() <=
              state.m() + inst.word_count - 1);
        while (state.proper()) {
            state.advance();
            CHECK(static_cast<std::int64_t>(state.m_deg()) * state.m() <=
                  state.m() + inst.word_count - 1);
            if (!state.proper()) break;
            costs.push_back(state.cost());
        }
        for (size_t k = 2; k < costs.size(); ++k) {
            CHECK(costs[k] - costs[k - 1] >= costs[k - 1] - costs[k - 2]);
        }
    }
}

TEST_CASE("queue entries never reappear once a letter retires") {
    for (const Instance& inst : small_grid()) {
        TreeState state(inst);
        std::vector<int> live = state.live_letters();
        std::set<int> live_before(live.begin(), live.end());
        while (state.proper()) {
            state.advance();
            live = state.live_letters();
            std::set<int> live_now(live.begin(), live.end());
            for (int i : live_now) CHECK(live_before.count(i) == 1);
            live_before = std::move(live_now);
        }
    }
}

TEST_CASE("early stop returns the same optimal cost") {
    for (const Instance& inst : small_grid()) {
        Solution full = compute_optimal(inst, false);
        Solution stopped = compute_optimal(inst, true);
        CHECK(full.optimal_cost == stopped.optimal_cost);
        CHECK(full.optimal_m == stopped.optimal_m);
    }
}

TEST_CASE("returned trees are proper; naive baseline produces identical traces") {
    for (const Instance& inst : small_grid()) {
        Solution solution = compute_optimal(inst);
        CHECK(is_proper(solution.tree, inst.letter_count));
        BaselineResult naive = solve_naive(inst);
        CHECK(naive.optimal_cost == solution.optimal_cost);
        CHECK(naive.trace == solution.trace);
    }
}

TEST_CASE("rescaling costs scales the trace but not the argmin") {
    Solution a = compute_optimal(make_instance({2, 3, 7}, 9));
    Solution b = compute_optimal(make_instance({6, 9, 21}, 9));
    CHECK(a.optimal_m == b.optimal_m);
    CHECK(3 * a.optimal_cost == b.optimal_cost);
    REQUIRE(a.trace.size() == b.trace.size());
    for (size_t k = 0; k < a.trace.size(); ++k) {
        CHECK(a.trace[k].m == b.trace[k].m);
        CHECK(3 * a.trace[k].cost == b.trace[k].cost);
    }
}

TEST_CASE("replacement total stays within the harmonic bound") {
    Instance inst = make_instance({1, 2, 3, 5}, 200);
    TreeState state(inst);
    int m_min = state.m_min();
    while (state.proper()) state.advance();
    int m_max = state.m() - 1;
    double bound = 2.0 * (m_max - m_min + 1) +
                   2.0 * static_cast<double>(inst.word_count - 1) *
                       std::log(static_cast<double>(m_max) / std::max(1, m_min - 1));
    CHECK(static_cast<double>(state.replacements()) <= bound);
}

TEST_CASE("engine rejects n=1 and corrupt usage") {
    Instance inst = make_instance({1, 2}, 1);
    CHECK_THROWS_AS(TreeState{inst}, std::invalid_argument);
}
