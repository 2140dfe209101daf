#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "varcode/baseline.hpp"
#include "varcode/codec.hpp"
#include "varcode/document.hpp"
#include "varcode/engine.hpp"
#include "varcode/model.hpp"
#include "varcode/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;
constexpr int kExitOracleMismatch = 3;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

std::vector<varcode::Rational> parse_costs(const std::string& spec) {
    std::vector<varcode::Rational> costs;
    for (const std::string& part : split(spec, ',')) {
        costs.push_back(varcode::parse_rational(part));
    }
    return costs;
}

std::vector<std::string> parse_glyphs(const std::string& spec, int letter_count) {
    std::vector<std::string> glyphs = split(spec, ',');
    if (static_cast<int>(glyphs.size()) != letter_count) {
        throw std::invalid_argument("need exactly one glyph per letter (" +
                                    std::to_string(letter_count) + ")");
    }
    return glyphs;
}

std::string render_letters(const std::vector<int>& letters,
                           const std::vector<std::string>& glyphs) {
    std::string out;
    for (size_t k = 0; k < letters.size(); ++k) {
        if (glyphs.empty()) {
            if (k > 0) out += ' ';
            out += std::to_string(letters[k]);
        } else {
            out += glyphs[static_cast<size_t>(letters[k] - 1)];
        }
    }
    return out;
}

std::vector<int> parse_letters(const std::string& text,
                               const std::vector<std::string>& glyphs, int letter_count) {
    std::vector<int> letters;
    if (glyphs.empty()) {
        std::stringstream ss(text);
        int v;
        while (ss >> v) letters.push_back(v);
        if (!ss.eof()) throw std::invalid_argument("letters must be integers in 1..r");
        return letters;
    }
    for (const std::string& g : glyphs) {
        if (g.size() != 1) {
            throw std::invalid_argument("decoding requires single-character glyphs");
        }
    }
    for (size_t pos = 0; pos < text.size(); ++pos) {
        int letter = 0;
        for (int i = 1; i <= letter_count; ++i) {
            if (glyphs[static_cast<size_t>(i - 1)][0] == text[pos]) {
                letter = i;
                break;
            }
        }
        if (letter == 0) {
            throw std::invalid_argument("unknown glyph '" + std::string(1, text[pos]) +
                                        "' at position " + std::to_string(pos));
        }
        letters.push_back(letter);
    }
    return letters;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text << "\n";
}

std::string read_all_stdin() {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

varcode::SolveDocument load_document(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open code document: " + path);
    nlohmann::json j;
    f >> j;
    return varcode::document_from_json(j);
}

int run_solve(const std::string& costs_spec, std::int64_t n, const std::string& format,
              bool trace, bool early_stop, bool verify_oracle, std::int64_t oracle_budget,
              const std::string& glyphs_spec, const std::string& out_path) {
    auto costs = parse_costs(costs_spec);
    varcode::Instance inst = varcode::validate_instance(costs, n);
    std::vector<std::string> glyphs;
    if (!glyphs_spec.empty()) glyphs = parse_glyphs(glyphs_spec, inst.letter_count);

    varcode::Solution solution = varcode::compute_optimal(inst, early_stop);
    varcode::Code code = varcode::assign_codewords(solution.tree, inst);

    bool oracle_mismatch = false;
    std::string oracle_note;
    if (verify_oracle) {
        try {
            varcode::OracleResult oracle = varcode::brute_force_optimal(inst, oracle_budget);
            if (oracle.cost == solution.optimal_cost) {
                oracle_note = "oracle check: match (cost " + std::to_string(oracle.cost) + ")";
            } else {
                oracle_mismatch = true;
                oracle_note = "oracle check: MISMATCH (engine " +
                              std::to_string(solution.optimal_cost) + ", oracle " +
                              std::to_string(oracle.cost) + ")";
            }
        } catch (const varcode::OracleBudgetExceeded&) {
            std::cerr << "warning: oracle budget exceeded; instance too large to verify\n";
        }
    }

    if (format == "json") {
        varcode::SolveDocument doc = varcode::make_document(inst, solution, code);
        nlohmann::json j = varcode::to_json(doc);
        if (!oracle_note.empty()) j["oracle_check"] = !oracle_mismatch;
        write_output(j.dump(2), out_path);
    } else {
        std::ostringstream out;
        out << "optimal cost: " << solution.optimal_cost;
        if (inst.denominator != 1) out << " (in units of 1/" << inst.denominator << ")";
        out << "\noptimal m: " << solution.optimal_m << "\n";
        if (trace) {
            out << "trace:";
            for (const auto& e : solution.trace) out << " m=" << e.m << " cost=" << e.cost;
            out << "\n";
        }
        out << "codewords:\n";
        for (size_t s = 0; s < code.words.size(); ++s) {
            out << "  " << s << ": " << render_letters(code.words[s], glyphs) << "  (length "
                << code.lengths[s] << ")\n";
        }
        if (!oracle_note.empty()) out << oracle_note << "\n";
        std::string text = out.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        write_output(text, out_path);
    }
    return oracle_mismatch ? kExitOracleMismatch : kExitOk;
}

int run_encode(const std::string& code_path, std::string symbols_text,
               const std::string& glyphs_spec, const std::string& out_path) {
    varcode::SolveDocument doc = load_document(code_path);
    std::vector<std::string> glyphs;
    if (!glyphs_spec.empty()) glyphs = parse_glyphs(glyphs_spec, doc.code.letter_count);
    if (symbols_text.empty()) symbols_text = read_all_stdin();

    std::vector<std::int64_t> symbols;
    std::stringstream ss(symbols_text);
    std::int64_t s;
    while (ss >> s) symbols.push_back(s);
    std::vector<int> letters = varcode::encode(doc.code, symbols);
    write_output(render_letters(letters, glyphs), out_path);
    return kExitOk;
}

int run_decode(const std::string& code_path, std::string letters_text,
               const std::string& glyphs_spec, const std::string& out_path) {
    varcode::SolveDocument doc = load_document(code_path);
    std::vector<std::string> glyphs;
    if (!glyphs_spec.empty()) glyphs = parse_glyphs(glyphs_spec, doc.code.letter_count);
    if (letters_text.empty()) {
        letters_text = read_all_stdin();
        while (!letters_text.empty() &&
               (letters_text.back() == '\n' || letters_text.back() == '\r')) {
            letters_text.pop_back();
        }
    }

    std::vector<int> letters = parse_letters(letters_text, glyphs, doc.code.letter_count);
    std::vector<std::int64_t> symbols = varcode::decode(doc.code, letters);
    std::ostringstream out;
    for (size_t k = 0; k < symbols.size(); ++k) {
        if (k > 0) out << ' ';
        out << symbols[k];
    }
    write_output(out.str(), out_path);
    return kExitOk;
}

int run_bench(const std::string& costs_spec, int random_letters, std::int64_t max_cost,
              std::uint64_t seed, const std::string& n_spec, const std::string& format) {
    std::vector<varcode::Rational> costs;
    if (!costs_spec.empty()) {
        costs = parse_costs(costs_spec);
    } else if (random_letters > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> dist(1, max_cost);
        for (int i = 0; i < random_letters; ++i) costs.push_back({dist(rng), 1});
    } else {
        throw std::invalid_argument("bench needs --costs or --random-costs");
    }

    nlohmann::json rows = nlohmann::json::array();
    bool mismatch = false;
    for (const std::string& n_text : split(n_spec, ',')) {
        std::int64_t n = std::stoll(n_text);
        varcode::Instance inst = varcode::validate_instance(costs, n);

        auto t0 = std::chrono::steady_clock::now();
        varcode::Solution engine = varcode::compute_optimal(inst);
        auto t1 = std::chrono::steady_clock::now();
        varcode::BaselineResult naive = varcode::solve_naive(inst);
        auto t2 = std::chrono::steady_clock::now();

        std::int64_t engine_swaps = 0;
        if (n >= 2) {
            varcode::TreeState state(inst);
            while (state.proper()) state.advance();
            engine_swaps = state.replacements();
        }

        double engine_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        double naive_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
        if (engine.optimal_cost != naive.optimal_cost) mismatch = true;
        rows.push_back({{"n", n},
                        {"engine_ms", engine_ms},
                        {"naive_ms", naive_ms},
                        {"engine_cost", engine.optimal_cost},
                        {"naive_cost", naive.optimal_cost},
                        {"engine_swaps", engine_swaps},
                        {"naive_swaps", naive.replacements},
                        {"costs_equal", engine.optimal_cost == naive.optimal_cost}});
    }

    if (format == "json") {
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << "n=" << row["n"] << "  engine=" << row["engine_ms"]
                      << "ms  naive=" << row["naive_ms"] << "ms  cost=" << row["engine_cost"]
                      << "  swaps=" << row["engine_swaps"] << "/" << row["naive_swaps"]
                      << (row["costs_equal"].get<bool>() ? "" : "  COST MISMATCH") << "\n";
        }
    }
    if (mismatch) {
        std::cerr << "error: engine and naive baseline disagree\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-length prefix codes over alphabets with unequal letter costs"};
    app.require_subcommand(1);

    std::string costs_spec, format = "text", glyphs_spec, out_path;
    std::string code_path, symbols_text, letters_text, n_spec;
    std::int64_t n = 0, oracle_budget = 50'000'000, max_cost = 1000;
    std::uint64_t seed = 1;
    int random_letters = 0;
    bool trace = false, early_stop = false, verify_oracle = false;

    auto* solve = app.add_subcommand("solve", "Construct an optimal prefix code");
    solve->add_option("--costs", costs_spec, "Comma-separated letter costs (ints, fractions or decimals)")
        ->required();
    solve->add_option("-n,--words", n, "Number of codewords")->required();
    solve->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    solve->add_flag("--trace", trace, "Include the per-m cost trace");
    solve->add_flag("--early-stop", early_stop, "Stop the scan at the first cost increase");
    solve->add_flag("--verify-oracle", verify_oracle, "Cross-check against the brute-force oracle");
    solve->add_option("--oracle-budget", oracle_budget, "Node budget for the oracle");
    solve->add_option("--glyphs", glyphs_spec, "Comma-separated glyph per letter, e.g. '.,_'");
    solve->add_option("--out", out_path, "Write output to a file instead of stdout");

    auto* encode_cmd = app.add_subcommand("encode", "Encode symbol indices with a solved code");
    encode_cmd->add_option("--code", code_path, "Solve document (JSON)")->required();
    encode_cmd->add_option("--symbols", symbols_text, "Space-separated symbols (default: stdin)");
    encode_cmd->add_option("--glyphs", glyphs_spec, "Render letters with these glyphs");
    encode_cmd->add_option("--out", out_path, "Write output to a file instead of stdout");

    auto* decode_cmd = app.add_subcommand("decode", "Decode a letter stream with a solved code");
    decode_cmd->add_option("--code", code_path, "Solve document (JSON)")->required();
    decode_cmd->add_option("--letters", letters_text, "Letter stream (default: stdin)");
    decode_cmd->add_option("--glyphs", glyphs_spec, "Interpret input through these glyphs");
    decode_cmd->add_option("--out", out_path, "Write output to a file instead of stdout");

    auto* bench = app.add_subcommand("bench", "Time the engine against the naive baseline");
    bench->add_option("--costs", costs_spec, "Comma-separated letter costs");
    bench->add_option("--random-costs", random_letters, "Draw this many random letter costs");
    bench->add_option("--max-cost", max_cost, "Upper bound for random costs");
    bench->add_option("--seed", seed, "Seed for random costs");
    bench->add_option("-n,--words", n_spec, "Comma-separated list of n values")->required();
    bench->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            return run_solve(costs_spec, n, format, trace, early_stop, verify_oracle,
                             oracle_budget, glyphs_spec, out_path);
        }
        if (encode_cmd->parsed()) return run_encode(code_path, symbols_text, glyphs_spec, out_path);
        if (decode_cmd->parsed()) return run_decode(code_path, letters_text, glyphs_spec, out_path);
        if (bench->parsed()) {
            return run_bench(costs_spec, random_letters, max_cost, seed, n_spec, format);
        }
    } catch (const varcode::CodecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
