#pragma once

#include <cstdint>
#include <stdexcept>

#include "varcode/engine.hpp"
#include "varcode/model.hpp"

namespace varcode {

struct OracleResult {
    Cost cost = 0;
    CodeTree tree;  // one optimum; ties resolved arbitrarily
    std::int64_t nodes_explored = 0;
};

struct OracleBudgetExceeded : std::runtime_error {
    OracleBudgetExceeded() : std::runtime_error("oracle budget exceeded: instance too large") {}
};

// Exhaustive search over proper trees with n terminals, expanding the
// shallowest frontier node first. The completion cost of a state depends
// only on the multiset of frontier depths (up to translation) and the
// number of terminals still owed, so states are memoized on that key;
// enable_pruning toggles the memoization. nodes_explored counts evaluated
// states. Shares nothing with the engine beyond the model types.
OracleResult brute_force_optimal(const Instance& inst,
                                 std::int64_t budget = 50'000'000,
                                 bool enable_pruning = true);

// Minimum external path length of a binary tree with n leaves (costs 1,1):
// with k = ceil(log2 n), x = 2(n - 2^(k-1)) leaves sit at depth k and the
// rest at depth k-1.
Cost binary_reference(std::int64_t n);

}  // namespace varcode
