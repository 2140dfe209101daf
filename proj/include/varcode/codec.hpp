#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "varcode/engine.hpp"
#include "varcode/model.hpp"

namespace varcode {

// A concrete prefix code: words[s] is the codeword for symbol s, as a
// sequence of letter indices in 1..r, sorted lexicographically.
struct Code {
    int letter_count = 0;
    std::vector<std::vector<int>> words;
    std::vector<Cost> lengths;  // total cost per word
};

struct CodecError : std::runtime_error {
    enum class Kind { dangling_suffix, unknown_path, bad_symbol, bad_letter };

    CodecError(Kind kind, size_t position, const std::string& what)
        : std::runtime_error(what), kind(kind), position(position) {}

    Kind kind;
    size_t position;
};

// Reads the codewords off a proper tree: each terminal's word is the
// child-index path from the root. Symbols are assigned in lexicographic
// word order.
Code assign_codewords(const CodeTree& tree, const Instance& inst);

bool is_prefix_free(const Code& code);

std::vector<int> encode(const Code& code, std::span<const std::int64_t> symbols);

// Tree-walk decoder over the code's trie. Reusable across calls.
class Decoder {
public:
    explicit Decoder(const Code& code);

    std::vector<std::int64_t> decode(std::span<const int> letters) const;

private:
    struct TrieNode {
        std::vector<int> next;       // by letter, 0 = absent
        std::int64_t symbol = -1;    // >= 0 at word ends
    };
    std::vector<TrieNode> nodes_;
    int letter_count_;
};

std::vector<std::int64_t> decode(const Code& code, std::span<const int> letters);

}  // namespace varcode
