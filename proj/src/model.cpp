#include "varcode/model.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace varcode {

namespace {

std::int64_t parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    size_t pos = 0;
    std::int64_t v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw std::invalid_argument("cost arithmetic overflow");
    return static_cast<std::int64_t>(p);
}

Rational normalized(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        std::int64_t num = parse_int(text.substr(0, slash));
        std::int64_t den = parse_int(text.substr(slash + 1));
        return normalized(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        if (frac_len == 0) throw std::invalid_argument("not a number: '" + text + "'");
        std::int64_t num = parse_int(digits);
        std::int64_t den = 1;
        for (size_t i = 0; i < frac_len; ++i) den = checked_mul(den, 10);
        return normalized(num, den);
    }
    return Rational{parse_int(text), 1};
}

Instance validate_instance(std::span<const Rational> costs_raw, std::int64_t n) {
    if (costs_raw.size() < 2) throw std::invalid_argument("need at least 2 letters (r >= 2)");
    if (costs_raw.size() > 1'000'000) throw std::invalid_argument("too many letters");
    if (n < 1) throw std::invalid_argument("need at least 1 codeword (n >= 1)");

    // Common denominator, then divide the whole cost vector by its gcd.
    std::int64_t common = 1;
    for (const Rational& q : costs_raw) {
        if (q.den <= 0) throw std::invalid_argument("invalid rational cost");
        if (q.num <= 0) throw std::invalid_argument("letter costs must be strictly positive");
        common = checked_mul(common / std::gcd(common, q.den), q.den);
    }
    std::vector<Cost> costs;
    costs.reserve(costs_raw.size());
    for (const Rational& q : costs_raw) {
        costs.push_back(checked_mul(q.num, common / q.den));
    }
    // Reduce by the joint gcd so that costs and denominator stay coprime
    // integers and the original rationals remain recoverable.
    std::int64_t g = common;
    for (Cost c : costs) g = std::gcd(g, c);
    if (g > 1) {
        for (Cost& c : costs) c /= g;
        common /= g;
    }
    std::sort(costs.begin(), costs.end());

    Instance inst;
    inst.letter_count = static_cast<int>(costs.size());
    inst.costs = std::move(costs);
    inst.word_count = n;
    inst.denominator = common;
    return inst;
}

Instance make_instance(std::vector<Cost> costs, std::int64_t n) {
    std::vector<Rational> raw;
    raw.reserve(costs.size());
    for (Cost c : costs) raw.push_back(Rational{c, 1});
    return validate_instance(raw, n);
}

}  // namespace varcode
