#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace varcode {

// Exact cost carrier. All letter costs are rescaled to integers up front so
// depth comparisons and tie-breaking never touch floating point.
using Cost = std::int64_t;

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

// Accepts "3", "1/2", "0.25". Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// A validated problem input: r letter costs, sorted ascending and rescaled to
// coprime integers, plus the number of codewords n.
struct Instance {
    int letter_count = 0;            // r
    std::vector<Cost> costs;         // c_1 <= ... <= c_r
    std::int64_t word_count = 0;     // n
    std::int64_t denominator = 1;    // original cost_i = costs[i] / denominator

    Cost cost(int letter) const { return costs[static_cast<size_t>(letter - 1)]; }
};

Instance validate_instance(std::span<const Rational> costs_raw, std::int64_t n);

// Convenience for integer costs (tests, generated instances).
Instance make_instance(std::vector<Cost> costs, std::int64_t n);

// Identity of a node of the infinite r-ary tree: the i-th child of the
// non-terminal with the given rank. Ranks label non-terminals 1..m; the root
// is rank 1. depth must equal depth(parent) + c_i.
struct NodeRef {
    int parent = 0;
    int child_index = 0;
    Cost depth = 0;

    friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

// Total order on nodes: by depth, then parent rank, then child index.
// Realizes the lexicographic tie-break that the tree sequence depends on.
inline std::strong_ordering node_compare(const NodeRef& a, const NodeRef& b) {
    if (a.depth != b.depth) return a.depth <=> b.depth;
    if (a.parent != b.parent) return a.parent <=> b.parent;
    return a.child_index <=> b.child_index;
}

inline bool operator<(const NodeRef& a, const NodeRef& b) {
    return node_compare(a, b) < 0;
}

}  // namespace varcode
