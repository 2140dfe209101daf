#include "varcode/baseline.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace varcode {

namespace {

struct NodeLess {
    bool operator()(const NodeRef& a, const NodeRef& b) const { return a < b; }
};

// Mirrors the engine's tree sequence, but stores every terminal explicitly.
class NaiveState {
public:
    explicit NaiveState(const Instance& inst) : inst_(&inst) {
        const int r = inst.letter_count;
        const std::int64_t n = inst.word_count;
        depth_.assign(2, 0);
        m_ = 1;

        if (n <= r) {
            for (int i = 1; i <= n; ++i) insert_terminal(1, i);
            m_deg_ = static_cast<int>(n);
            return;
        }
        for (int i = 1; i <= r; ++i) insert_terminal(1, i);

        const int m_min = static_cast<int>(1 + (n - 2) / (r - 1));
        for (int step = 2; step <= m_min - 1; ++step) {
            convert_min_terminal();
            for (int j = 1; j <= r; ++j) insert_terminal(m_, j);
        }
        const int delta = static_cast<int>(n - static_cast<std::int64_t>(r - 1) * (m_min - 1));
        convert_min_terminal();
        for (int j = 1; j <= delta; ++j) insert_terminal(m_, j);
        m_deg_ = delta;
        level();
        replacements_ = 0;
    }

    int m() const { return m_; }
    Cost cost() const { return cost_; }
    bool proper() const { return m_deg_ >= 2; }
    std::int64_t replacements() const { return replacements_; }

    void advance() {
        convert_min_terminal();
        m_deg_ = 0;
        add_terminal();
        level();
    }

private:
    void insert_terminal(int parent, int letter) {
        NodeRef node{parent, letter, depth_[static_cast<size_t>(parent)] + inst_->cost(letter)};
        terminals_.insert(node);
        cost_ += node.depth;
    }

    void convert_min_terminal() {
        if (terminals_.empty()) throw std::logic_error("corrupt state: no terminals");
        NodeRef u = *terminals_.begin();
        terminals_.erase(terminals_.begin());
        cost_ -= u.depth;
        ++m_;
        depth_.push_back(u.depth);
    }

    void add_terminal() {
        ++m_deg_;
        insert_terminal(m_, m_deg_);
        ++replacements_;
    }

    void level() {
        const int r = inst_->letter_count;
        while (m_deg_ < r && !terminals_.empty()) {
            NodeRef max_terminal = *terminals_.rbegin();
            NodeRef candidate{m_, m_deg_ + 1,
                              depth_[static_cast<size_t>(m_)] + inst_->cost(m_deg_ + 1)};
            if (!(candidate < max_terminal)) break;
            add_terminal();
            auto it = terminals_.end();
            --it;
            cost_ -= it->depth;
            terminals_.erase(it);
        }
    }

    const Instance* inst_;
    int m_ = 0;
    int m_deg_ = 0;
    Cost cost_ = 0;
    std::int64_t replacements_ = 0;
    std::vector<Cost> depth_;
    std::set<NodeRef, NodeLess> terminals_;
};

}  // namespace

BaselineResult solve_naive(const Instance& inst) {
    BaselineResult result;
    if (inst.word_count == 1) {
        return result;  // empty-word code, cost 0
    }
    NaiveState state(inst);
    result.trace.push_back(TraceEntry{state.m(), state.cost()});
    while (state.proper()) {
        state.advance();
        if (!state.proper()) break;
        result.trace.push_back(TraceEntry{state.m(), state.cost()});
    }
    auto best = std::min_element(
        result.trace.begin(), result.trace.end(),
        [](const TraceEntry& a, const TraceEntry& b) { return a.cost < b.cost; });
    result.optimal_m = best->m;
    result.optimal_cost = best->cost;
    result.replacements = state.replacements();
    return result;
}

}  // namespace varcode
