#pragma once

#include <cstdint>
#include <vector>

#include "varcode/engine.hpp"
#include "varcode/model.hpp"

namespace varcode {

struct BaselineResult {
    int optimal_m = 0;
    Cost optimal_cost = 0;
    std::int64_t replacements = 0;
    std::vector<TraceEntry> trace;
};

// Reference solver that keeps all n terminals in two full ordered structures
// and scans replacements per tree. Same tree sequence, O(r n log n) time.
// Kept as the comparison target for run_bench and cross-checked in tests.
BaselineResult solve_naive(const Instance& inst);

}  // namespace varcode
