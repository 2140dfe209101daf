#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "varcode/model.hpp"

namespace varcode {

struct TreeNode {
    int parent = 0;       // 0 for the root
    int child_index = 0;  // 0 for the root
    Cost depth = 0;
};

// A materialized tree: non-terminal records by rank (index 0 is rank 1, the
// root) plus the n terminals. The terminals are the prefix code.
struct CodeTree {
    std::vector<TreeNode> non_terminals;
    std::vector<NodeRef> terminals;
    Cost cost = 0;
};

// Sum of terminal depths, recomputed from scratch.
Cost recompute_cost(const CodeTree& tree);

// Every non-terminal has at least two children in the tree.
bool is_proper(const CodeTree& tree, int letter_count);

// Checks the two shallowness conditions against the frontier of candidate
// children. Test-support predicate; O(r * m) work.
bool check_shallow(const CodeTree& tree, const Instance& inst);

// Keyed min/max structure over at most r entries, one slot per letter.
// Keys are NodeRefs ordered by node_compare; insert, delete-by-letter and
// update run in O(log r) comparisons.
class TerminalQueue {
public:
    explicit TerminalQueue(int letter_count)
        : slots_(static_cast<size_t>(letter_count) + 1) {}

    void set_entry(NodeRef node);
    void remove_entry(int letter);
    bool has_entry(int letter) const { return slots_[static_cast<size_t>(letter)].has_value(); }
    bool empty() const { return entries_.empty(); }
    NodeRef min() const { return *entries_.begin(); }
    NodeRef max() const { return *entries_.rbegin(); }

private:
    std::set<NodeRef> entries_;
    std::vector<std::optional<NodeRef>> slots_;
};

// Rolling state of the shallow-tree sequence. The constructor builds T_mmin;
// each advance() applies Sprout then Level, turning T_m into T_{m+1}.
// Requires n >= 2 (the n = 1 code is handled by compute_optimal).
class TreeState {
public:
    explicit TreeState(const Instance& inst);

    int m() const { return m_; }
    int m_min() const { return m_min_; }
    Cost cost() const { return cost_; }
    int m_deg() const { return m_deg_; }
    bool proper() const { return m_deg_ >= 2; }
    Cost depth(int rank) const { return depth_[static_cast<size_t>(rank)]; }
    int low(int letter) const { return low_[static_cast<size_t>(letter)]; }
    int high(int letter) const { return high_[static_cast<size_t>(letter)]; }

    // Terminals swapped in since T_mmin (one per Add-Terminal).
    std::int64_t replacements() const { return replacements_; }

    // Letters that still have terminal children, i.e. low[i] <= high[i].
    std::vector<int> live_letters() const;

    void advance();
    void sprout();
    void level();

    CodeTree materialize() const;

private:
    void convert_min_terminal();
    void add_terminal();
    void update_queues(int letter);

    const Instance* inst_;
    int m_ = 0;
    int m_min_ = 0;
    Cost cost_ = 0;
    int m_deg_ = 0;
    std::int64_t replacements_ = 0;
    std::vector<Cost> depth_;       // by rank, 1-based
    std::vector<int> parent_;       // by rank, 1-based
    std::vector<int> child_index_;  // by rank, 1-based
    std::vector<int> low_;          // by letter, 1-based
    std::vector<int> high_;         // by letter, 1-based
    TerminalQueue low_queue_;
    TerminalQueue high_queue_;
};

struct TraceEntry {
    int m = 0;
    Cost cost = 0;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct Solution {
    int optimal_m = 0;
    Cost optimal_cost = 0;
    std::vector<TraceEntry> trace;  // proper trees only, m = mmin..mmax
    CodeTree tree;
};

// Runs the full shallow-tree scan and materializes an optimal proper tree.
// With early_stop the scan ends at the first cost increase (the cost
// sequence is unimodal); the returned optimum is the same either way.
Solution compute_optimal(const Instance& inst, bool early_stop = false);

// Second construction pass: re-runs from T_mmin up to exactly target_m.
// Throws std::out_of_range unless mmin <= target_m <= mmax.
CodeTree materialize_tree(const Instance& inst, int target_m);

// Rebuilds the rolling state for T_target_m (same range checks).
TreeState run_to(const Instance& inst, int target_m);

}  // namespace varcode
