#include "varcode/codec.hpp"

#include <algorithm>
#include <utility>

namespace varcode {

Code assign_codewords(const CodeTree& tree, const Instance& inst) {
    // Paths to all non-terminals first; ranks are created parent-first.
    std::vector<std::vector<int>> paths(tree.non_terminals.size() + 1);
    for (size_t rank = 2; rank <= tree.non_terminals.size(); ++rank) {
        const TreeNode& u = tree.non_terminals[rank - 1];
        if (u.parent < 1 || static_cast<size_t>(u.parent) >= rank) {
            throw std::invalid_argument("malformed tree: dangling parent rank");
        }
        paths[rank] = paths[static_cast<size_t>(u.parent)];
        paths[rank].push_back(u.child_index);
    }

    std::vector<std::pair<std::vector<int>, Cost>> words;
    words.reserve(tree.terminals.size());
    for (const NodeRef& t : tree.terminals) {
        if (t.parent == 0) {
            words.emplace_back(std::vector<int>{}, 0);  // n = 1: the empty word
            continue;
        }
        if (static_cast<size_t>(t.parent) > tree.non_terminals.size()) {
            throw std::invalid_argument("malformed tree: dangling parent rank");
        }
        std::vector<int> word = paths[static_cast<size_t>(t.parent)];
        word.push_back(t.child_index);
        words.emplace_back(std::move(word), t.depth);
    }
    std::sort(words.begin(), words.end());

    Code code;
    code.letter_count = inst.letter_count;
    code.words.reserve(words.size());
    code.lengths.reserve(words.size());
    for (auto& [word, length] : words) {
        code.words.push_back(std::move(word));
        code.lengths.push_back(length);
    }
    return code;
}

bool is_prefix_free(const Code& code) {
    std::vector<const std::vector<int>*> sorted;
    sorted.reserve(code.words.size());
    for (const auto& w : code.words) sorted.push_back(&w);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return *a < *b; });
    // In lexicographic order a prefix immediately precedes its extensions.
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
        const auto& a = *sorted[i];
        const auto& b = *sorted[i + 1];
        if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin())) return false;
    }
    return true;
}

std::vector<int> encode(const Code& code, std::span<const std::int64_t> symbols) {
    std::vector<int> letters;
    for (size_t pos = 0; pos < symbols.size(); ++pos) {
        std::int64_t s = symbols[pos];
        if (s < 0 || static_cast<size_t>(s) >= code.words.size()) {
            throw CodecError(CodecError::Kind::bad_symbol, pos,
                             "symbol out of range at position " + std::to_string(pos));
        }
        const auto& word = code.words[static_cast<size_t>(s)];
        letters.insert(letters.end(), word.begin(), word.end());
    }
    return letters;
}

Decoder::Decoder(const Code& code) : letter_count_(code.letter_count) {
    nodes_.emplace_back();
    nodes_[0].next.assign(static_cast<size_t>(letter_count_) + 1, 0);
    for (size_t s = 0; s < code.words.size(); ++s) {
        int at = 0;
        for (int letter : code.words[s]) {
            if (letter < 1 || letter > letter_count_) {
                throw std::invalid_argument("codeword letter out of range");
            }
            int& slot = nodes_[static_cast<size_t>(at)].next[static_cast<size_t>(letter)];
            if (slot == 0) {
                slot = static_cast<int>(nodes_.size());
                nodes_.emplace_back();
                nodes_.back().next.assign(static_cast<size_t>(letter_count_) + 1, 0);
            }
            at = nodes_[static_cast<size_t>(at)].next[static_cast<size_t>(letter)];
        }
        nodes_[static_cast<size_t>(at)].symbol = static_cast<std::int64_t>(s);
    }
}

std::vector<std::int64_t> Decoder::decode(std::span<const int> letters) const {
    std::vector<std::int64_t> symbols;
    int at = 0;
    size_t word_start = 0;
    for (size_t pos = 0; pos < letters.size(); ++pos) {
        int letter = letters[pos];
        if (letter < 1 || letter > letter_count_) {
            throw CodecError(CodecError::Kind::bad_letter, pos,
                             "letter out of range at position " + std::to_string(pos));
        }
        int next = nodes_[static_cast<size_t>(at)].next[static_cast<size_t>(letter)];
        if (next == 0) {
            throw CodecError(CodecError::Kind::unknown_path, pos,
                             "no codeword along this path at position " + std::to_string(pos));
        }
        at = next;
        if (nodes_[static_cast<size_t>(at)].symbol >= 0) {
            symbols.push_back(nodes_[static_cast<size_t>(at)].symbol);
            at = 0;
            word_start = pos + 1;
        }
    }
    if (at != 0) {
        throw CodecError(CodecError::Kind::dangling_suffix, word_start,
                         "dangling suffix at position " + std::to_string(word_start));
    }
    return symbols;
}

std::vector<std::int64_t> decode(const Code& code, std::span<const int> letters) {
    return Decoder(code).decode(letters);
}

}  // namespace varcode
