#include "varcode/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace varcode {

Cost recompute_cost(const CodeTree& tree) {
    Cost total = 0;
    for (const NodeRef& t : tree.terminals) total += t.depth;
    return total;
}

bool is_proper(const CodeTree& tree, int letter_count) {
    std::vector<int> children(tree.non_terminals.size() + 1, 0);
    for (size_t rank = 2; rank <= tree.non_terminals.size(); ++rank) {
        ++children[static_cast<size_t>(tree.non_terminals[rank - 1].parent)];
    }
    for (const NodeRef& t : tree.terminals) {
        if (t.parent == 0) continue;  // n = 1 convention: the root itself is the terminal
        ++children[static_cast<size_t>(t.parent)];
    }
    (void)letter_count;
    for (size_t rank = 1; rank <= tree.non_terminals.size(); ++rank) {
        if (children[rank] < 2) return false;
    }
    return true;
}

bool check_shallow(const CodeTree& tree, const Instance& inst) {
    const int r = inst.letter_count;
    std::map<std::pair<int, int>, char> non_terminal_ids;  // (parent, child index)
    Cost max_non_terminal_depth = 0;
    for (size_t rank = 2; rank <= tree.non_terminals.size(); ++rank) {
        const TreeNode& u = tree.non_terminals[rank - 1];
        non_terminal_ids[{u.parent, u.child_index}] = 1;
        max_non_terminal_depth = std::max(max_non_terminal_depth, u.depth);
    }
    std::map<std::pair<int, int>, char> terminal_ids;
    Cost max_terminal_depth = 0;
    for (const NodeRef& t : tree.terminals) {
        terminal_ids[{t.parent, t.child_index}] = 1;
        max_terminal_depth = std::max(max_terminal_depth, t.depth);
    }
    // Scan all children of non-terminals. A child outside the non-terminal
    // set bounds condition (i); one outside the tree bounds condition (ii).
    for (size_t rank = 1; rank <= tree.non_terminals.size(); ++rank) {
        Cost parent_depth = tree.non_terminals[rank - 1].depth;
        for (int i = 1; i <= r; ++i) {
            Cost child_depth = parent_depth + inst.cost(i);
            bool is_non_terminal = non_terminal_ids.count({static_cast<int>(rank), i}) > 0;
            if (!is_non_terminal) {
                if (max_non_terminal_depth > child_depth) return false;
                bool in_tree = terminal_ids.count({static_cast<int>(rank), i}) > 0;
                if (!in_tree && max_terminal_depth > child_depth) return false;
            }
        }
    }
    return true;
}

void TerminalQueue::set_entry(NodeRef node) {
    auto& slot = slots_[static_cast<size_t>(node.child_index)];
    if (slot) entries_.erase(*slot);
    entries_.insert(node);
    slot = node;
}

void TerminalQueue::remove_entry(int letter) {
    auto& slot = slots_[static_cast<size_t>(letter)];
    if (slot) {
        entries_.erase(*slot);
        slot.reset();
    }
}

TreeState::TreeState(const Instance& inst)
    : inst_(&inst),
      low_queue_(inst.letter_count),
      high_queue_(inst.letter_count) {
    const int r = inst.letter_count;
    const std::int64_t n = inst.word_count;
    if (n < 2) throw std::invalid_argument("tree construction requires n >= 2");

    m_min_ = static_cast<int>(1 + (n - 2) / (r - 1));  // ceil((n-1)/(r-1))
    depth_.assign(2, 0);
    parent_.assign(2, 0);
    child_index_.assign(2, 0);
    low_.assign(static_cast<size_t>(r) + 1, 1);
    high_.assign(static_cast<size_t>(r) + 1, 0);
    m_ = 1;

    if (n <= r) {
        // T_mmin is the root plus its first n children.
        for (int i = 1; i <= n; ++i) {
            high_[static_cast<size_t>(i)] = 1;
            update_queues(i);
            cost_ += inst.cost(i);
        }
        m_deg_ = static_cast<int>(n);
        return;
    }

    // T_1: the root with all r children as terminals.
    Cost cost_sum = 0;
    for (int i = 1; i <= r; ++i) {
        high_[static_cast<size_t>(i)] = 1;
        update_queues(i);
        cost_sum += inst.cost(i);
    }
    cost_ = cost_sum;

    // T_2 .. T_{mmin-1}: convert the minimum terminal, add all r children.
    for (int step = 2; step <= m_min_ - 1; ++step) {
        convert_min_terminal();
        for (int j = 1; j <= r; ++j) {
            high_[static_cast<size_t>(j)] = m_;
            update_queues(j);
        }
        cost_ += static_cast<Cost>(r - 1) * depth_[static_cast<size_t>(m_)] + cost_sum;
    }

    // T_mmin: add only the Delta cheapest children, then Level.
    const int delta = static_cast<int>(n - static_cast<std::int64_t>(r - 1) * (m_min_ - 1));
    convert_min_terminal();
    Cost delta_sum = 0;
    for (int j = 1; j <= delta; ++j) {
        high_[static_cast<size_t>(j)] = m_;
        update_queues(j);
        delta_sum += inst.cost(j);
    }
    cost_ += static_cast<Cost>(delta - 1) * depth_[static_cast<size_t>(m_)] + delta_sum;
    m_deg_ = delta;
    level();
    replacements_ = 0;
}

std::vector<int> TreeState::live_letters() const {
    std::vector<int> live;
    for (int i = 1; i <= inst_->letter_count; ++i) {
        if (low_[static_cast<size_t>(i)] <= high_[static_cast<size_t>(i)]) live.push_back(i);
    }
    return live;
}

void TreeState::advance() {
    sprout();
    level();
}

void TreeState::sprout() {
    convert_min_terminal();
    cost_ -= depth_[static_cast<size_t>(m_)];
    m_deg_ = 0;
    add_terminal();
}

void TreeState::level() {
    const int r = inst_->letter_count;
    while (m_deg_ < r && !high_queue_.empty()) {
        NodeRef max_terminal = high_queue_.max();
        NodeRef candidate{m_, m_deg_ + 1,
                          depth_[static_cast<size_t>(m_)] + inst_->cost(m_deg_ + 1)};
        if (!(candidate < max_terminal)) break;
        add_terminal();
        // Delete the maximum terminal.
        int i = max_terminal.child_index;
        cost_ -= max_terminal.depth;
        --high_[static_cast<size_t>(i)];
        update_queues(i);
    }
}

void TreeState::convert_min_terminal() {
    if (low_queue_.empty()) throw std::logic_error("corrupt state: low-queue is empty");
    NodeRef u = low_queue_.min();
    const int i = u.child_index;
    ++m_;
    depth_.push_back(u.depth);
    parent_.push_back(u.parent);
    child_index_.push_back(i);
    ++low_[static_cast<size_t>(i)];
    update_queues(i);
}

void TreeState::add_terminal() {
    if (m_deg_ >= inst_->letter_count) {
        throw std::logic_error("corrupt state: node m already has r children");
    }
    ++m_deg_;
    // The interval for this letter must end exactly at the previous rank;
    // anything else means a retired letter is being resurrected.
    if (high_[static_cast<size_t>(m_deg_)] != m_ - 1) {
        throw std::logic_error("corrupt state: non-contiguous terminal interval");
    }
    cost_ += depth_[static_cast<size_t>(m_)] + inst_->cost(m_deg_);
    high_[static_cast<size_t>(m_deg_)] = m_;
    update_queues(m_deg_);
    ++replacements_;
}

void TreeState::update_queues(int letter) {
    const size_t i = static_cast<size_t>(letter);
    if (low_[i] <= high_[i]) {
        low_queue_.set_entry(
            NodeRef{low_[i], letter, depth_[static_cast<size_t>(low_[i])] + inst_->cost(letter)});
        high_queue_.set_entry(
            NodeRef{high_[i], letter, depth_[static_cast<size_t>(high_[i])] + inst_->cost(letter)});
    } else {
        low_queue_.remove_entry(letter);
        high_queue_.remove_entry(letter);
    }
}

CodeTree TreeState::materialize() const {
    CodeTree tree;
    tree.cost = cost_;
    tree.non_terminals.reserve(static_cast<size_t>(m_));
    for (int rank = 1; rank <= m_; ++rank) {
        tree.non_terminals.push_back(TreeNode{parent_[static_cast<size_t>(rank)],
                                              child_index_[static_cast<size_t>(rank)],
                                              depth_[static_cast<size_t>(rank)]});
    }
    tree.terminals.reserve(static_cast<size_t>(inst_->word_count));
    for (int i = 1; i <= inst_->letter_count; ++i) {
        for (int u = low_[static_cast<size_t>(i)]; u <= high_[static_cast<size_t>(i)]; ++u) {
            tree.terminals.push_back(
                NodeRef{u, i, depth_[static_cast<size_t>(u)] + inst_->cost(i)});
        }
    }
    return tree;
}

TreeState run_to(const Instance& inst, int target_m) {
    TreeState state(inst);
    if (target_m < state.m_min()) {
        throw std::out_of_range("target m below m_min");
    }
    while (state.m() < target_m) {
        if (!state.proper()) throw std::out_of_range("target m above m_max");
        state.advance();
    }
    if (!state.proper()) throw std::out_of_range("target m above m_max");
    return state;
}

CodeTree materialize_tree(const Instance& inst, int target_m) {
    return run_to(inst, target_m).materialize();
}

Solution compute_optimal(const Instance& inst, bool early_stop) {
    Solution solution;
    if (inst.word_count == 1) {
        // The single codeword is the empty word: the root is the terminal.
        solution.optimal_m = 0;
        solution.optimal_cost = 0;
        solution.tree.terminals.push_back(NodeRef{0, 0, 0});
        return solution;
    }

    TreeState state(inst);
    solution.trace.push_back(TraceEntry{state.m(), state.cost()});
    while (state.proper()) {
        Cost previous = state.cost();
        state.advance();
        if (!state.proper()) break;  // improper tree: not a candidate
        solution.trace.push_back(TraceEntry{state.m(), state.cost()});
        if (early_stop && state.cost() >= previous) break;
    }

    auto best = std::min_element(
        solution.trace.begin(), solution.trace.end(),
        [](const TraceEntry& a, const TraceEntry& b) { return a.cost < b.cost; });
    solution.optimal_m = best->m;
    solution.optimal_cost = best->cost;
    solution.tree = materialize_tree(inst, solution.optimal_m);
    return solution;
}

}  // namespace varcode
