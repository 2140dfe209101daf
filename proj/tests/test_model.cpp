#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "varcode/model.hpp"

using namespace varcode;

TEST_CASE("validate_instance sorts and keeps integer costs") {
    Instance inst = make_instance({2, 2, 5}, 10);
    CHECK(inst.letter_count == 3);
    CHECK(inst.costs == std::vector<Cost>{2, 2, 5});
    CHECK(inst.word_count == 10);
    CHECK(inst.denominator == 1);

    Instance shuffled = make_instance({5, 2, 2}, 10);
    CHECK(shuffled.costs == inst.costs);
}

TEST_CASE("validate_instance rescales rationals by the common denominator") {
    std::vector<Rational> raw{{1, 2}, {1, 1}};
    Instance inst = validate_instance(raw, 6);
    CHECK(inst.costs == std::vector<Cost>{1, 2});
    CHECK(inst.denominator == 2);

    std::vector<Rational> mixed{{2, 3}, {4, 3}};
    Instance inst2 = validate_instance(mixed, 4);
    CHECK(inst2.costs == std::vector<Cost>{2, 4});
    CHECK(inst2.denominator == 3);
}

TEST_CASE("validate_instance rejects degenerate inputs") {
    CHECK_THROWS_AS(make_instance({0, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_instance({-1, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_instance({1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_instance({1, 2}, 0), std::invalid_argument);
}

TEST_CASE("parse_rational handles integers, fractions and decimals") {
    CHECK(parse_rational("3").num == 3);
    CHECK(parse_rational("3").den == 1);
    auto half = parse_rational("1/2");
    CHECK(half.num == 1);
    CHECK(half.den == 2);
    auto quarter = parse_rational("0.25");
    CHECK(quarter.num == 1);
    CHECK(quarter.den == 4);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1."), std::invalid_argument);
}

TEST_CASE("node_compare orders by depth, then parent, then child index") {
    NodeRef a{1, 1, 2}, b{1, 3, 5};
    CHECK(a < b);
    CHECK(NodeRef{2, 1, 4} < NodeRef{3, 1, 4});
    CHECK(NodeRef{2, 1, 4} < NodeRef{2, 2, 4});
}

TEST_CASE("node_compare is a strict total order refining depth") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> small(1, 6);
    auto random_node = [&] {
        return NodeRef{small(rng), small(rng), static_cast<Cost>(small(rng))};
    };
    for (int trial = 0; trial < 2000; ++trial) {
        NodeRef x = random_node(), y = random_node(), z = random_node();
        // antisymmetry
        if (x < y) CHECK_FALSE(y < x);
        if (!(x < y) && !(y < x)) CHECK(x == y);
        // transitivity
        if (x < y && y < z) CHECK(x < z);
        // the order refines depth
        if (x < y) CHECK(x.depth <= y.depth);
    }
}
