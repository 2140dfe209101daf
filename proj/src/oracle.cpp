#include "varcode/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace varcode {

namespace {

constexpr Cost kInfeasible = INT64_MAX / 4;

struct NodeLess {
    bool operator()(const NodeRef& a, const NodeRef& b) const { return a < b; }
};

class Search {
public:
    Search(const Instance& inst, std::int64_t budget, bool memoize)
        : inst_(&inst), budget_(budget), memoize_(memoize) {}

    OracleResult run() {
        frontier_.insert(NodeRef{0, 0, 0});  // the root, rank 0 until expanded
        OracleResult result;
        result.cost = complete(inst_->word_count);
        memoize_ = true;  // replaying the decisions needs cheap re-evaluation
        reconstruct(inst_->word_count, result.cost);
        result.tree.non_terminals = std::move(internals_);
        result.tree.terminals = std::move(terminals_);
        result.tree.cost = result.cost;
        result.nodes_explored = explored_;
        return result;
    }

private:
    using MemoKey = std::pair<std::vector<Cost>, std::int64_t>;

    // Frontier depths shifted so the minimum is zero: shifting every depth by
    // delta shifts the completion cost by remaining * delta.
    MemoKey make_key(std::int64_t remaining) const {
        std::vector<Cost> depths;
        depths.reserve(frontier_.size());
        const Cost base = frontier_.begin()->depth;
        for (const NodeRef& f : frontier_) depths.push_back(f.depth - base);
        std::sort(depths.begin(), depths.end());
        return {std::move(depths), remaining};
    }

    // Minimum total terminal depth needed to finish the tree: every frontier
    // node becomes a terminal or a non-terminal whose first d children are
    // committed, and every committed node owes at least one terminal.
    Cost complete(std::int64_t remaining) {
        const auto frontier_size = static_cast<std::int64_t>(frontier_.size());
        if (frontier_size == 0) return remaining == 0 ? 0 : kInfeasible;
        if (remaining < frontier_size) return kInfeasible;

        MemoKey key;
        Cost base = 0;
        if (memoize_) {
            base = frontier_.begin()->depth;
            key = make_key(remaining);
            auto hit = memo_.find(key);
            if (hit != memo_.end()) {
                return hit->second >= kInfeasible ? kInfeasible
                                                  : hit->second + remaining * base;
            }
        }
        if (++explored_ > budget_) throw OracleBudgetExceeded();

        NodeRef u = *frontier_.begin();
        frontier_.erase(frontier_.begin());

        // The shallowest committed node becomes a terminal...
        Cost best = complete(remaining - 1);
        if (best < kInfeasible) best += u.depth;

        // ...or a non-terminal with its first d children committed, 2 <= d <= r.
        const int max_degree = static_cast<int>(std::min<std::int64_t>(
            inst_->letter_count, remaining - frontier_size + 1));
        if (max_degree >= 2) {
            const int rank = next_rank_++;
            for (int d = 1; d <= max_degree; ++d) {
                frontier_.insert(NodeRef{rank, d, u.depth + inst_->cost(d)});
                if (d >= 2) best = std::min(best, complete(remaining));
            }
            for (int d = 1; d <= max_degree; ++d) {
                frontier_.erase(NodeRef{rank, d, u.depth + inst_->cost(d)});
            }
            --next_rank_;
        }

        frontier_.insert(u);
        if (memoize_) {
            memo_[std::move(key)] = best >= kInfeasible ? kInfeasible
                                                        : best - remaining * base;
        }
        return best;
    }

    // Replay the search, committing the first decision that achieves the
    // known optimum, and record the resulting tree.
    void reconstruct(std::int64_t remaining, Cost target) {
        if (frontier_.empty()) return;
        NodeRef u = *frontier_.begin();
        frontier_.erase(frontier_.begin());

        Cost as_terminal = complete(remaining - 1);
        if (as_terminal < kInfeasible && as_terminal + u.depth == target) {
            terminals_.push_back(u);
            reconstruct(remaining - 1, as_terminal);
            return;
        }

        const auto frontier_size = static_cast<std::int64_t>(frontier_.size()) + 1;
        const int max_degree = static_cast<int>(std::min<std::int64_t>(
            inst_->letter_count, remaining - frontier_size + 1));
        for (int d = 1; d <= max_degree; ++d) {
            frontier_.insert(NodeRef{next_rank_, d, u.depth + inst_->cost(d)});
            if (d >= 2 && complete(remaining) == target) {
                internals_.push_back(TreeNode{u.parent, u.child_index, u.depth});
                ++next_rank_;
                reconstruct(remaining, target);
                return;
            }
        }
        throw std::logic_error("oracle reconstruction lost the optimum");
    }

    const Instance* inst_;
    std::int64_t budget_;
    bool memoize_;
    std::int64_t explored_ = 0;
    int next_rank_ = 1;
    std::set<NodeRef, NodeLess> frontier_;
    std::map<MemoKey, Cost> memo_;
    std::vector<TreeNode> internals_;
    std::vector<NodeRef> terminals_;
};

}  // namespace

OracleResult brute_force_optimal(const Instance& inst, std::int64_t budget,
                                 bool enable_pruning) {
    Search search(inst, budget, enable_pruning);
    return search.run();
}

Cost binary_reference(std::int64_t n) {
    if (n <= 1) return 0;
    const int k = std::bit_width(static_cast<std::uint64_t>(n - 1));  // ceil(log2 n)
    const std::int64_t x = 2 * (n - (std::int64_t{1} << (k - 1)));
    return static_cast<Cost>(k) * x + static_cast<Cost>(k - 1) * (n - x);
}

}  // namespace varcode
