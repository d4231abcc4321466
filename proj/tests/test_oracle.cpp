#include "doctest.h"

#include <random>

#include "brute.hpp"
#include "spindle/oracle.hpp"
#include "test_util.hpp"

using namespace spindle;

TEST_CASE("oracle_find: running example") {
    Digraph fig1 = testutil::fig1_digraph();
    auto w = oracle_find(fig1, {2, 2, 2});
    REQUIRE(w.has_value());
    CHECK(validate_witness(fig1, SpindleSpec::uniform(3, 2), *w));
    CHECK_FALSE(oracle_find(fig1, {3, 3, 3}).has_value());

    Digraph single(2, {{0, 1}});
    CHECK(oracle_find(single, {1}).has_value());
}

TEST_CASE("oracle_find: order invariance in lengths") {
    std::mt19937_64 rng(606);
    for (int i = 0; i < 40; ++i) {
        Digraph g = testutil::random_digraph_swept(rng, 6 + static_cast<int>(rng() % 3));
        const bool a = oracle_find(g, {1, 2, 3}).has_value();
        const bool b = oracle_find(g, {3, 2, 1}).has_value();
        const bool c = oracle_find(g, {2, 3, 1}).has_value();
        CHECK(a == b);
        CHECK(b == c);
    }
}

TEST_CASE("oracle_find: exact mode") {
    Digraph fig1 = testutil::fig1_digraph();
    CHECK(oracle_find(fig1, {2, 3, 4}, SpindleMode::ExactSubgraph).has_value());
    CHECK_FALSE(oracle_find(fig1, {2, 2, 4}, SpindleMode::ExactSubgraph).has_value());
}

TEST_CASE("oracle_max_k: running example and edge cases") {
    Digraph fig1 = testutil::fig1_digraph();
    CHECK(oracle_max_k(fig1, 2) == 3);
    CHECK(oracle_max_k(fig1, 3) == 2);
    CHECK(oracle_max_k(fig1, 4) == 1);
    CHECK(oracle_max_k(Digraph(4, {}), 1) == 0);
    // Non-increasing in the length bound.
    std::mt19937_64 rng(707);
    for (int i = 0; i < 20; ++i) {
        Digraph g = testutil::random_digraph_swept(rng, 6);
        int prev = oracle_max_k(g, 1);
        for (int len = 2; len <= 4; ++len) {
            int cur = oracle_max_k(g, len);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("oracle_max_total: examples") {
    CHECK(oracle_max_total(testutil::fig1_digraph()) == 7);
    CHECK(oracle_max_total(Digraph(2, {{0, 1}, {0, 1}})) == 2);
    CHECK(oracle_max_total(Digraph(3, {{0, 1}, {1, 2}})) == 0);
}

TEST_CASE("oracle_disjoint_pack: small cases") {
    // One (2x1)-spindle: a pair of parallel arcs.
    Digraph one(2, {{0, 1}, {0, 1}});
    CHECK(oracle_disjoint_pack(one, 1));
    CHECK_FALSE(oracle_disjoint_pack(one, 2));

    // Oriented triangle: 0->1->2 plus 0->2 is a (2x1)-spindle subdivision.
    Digraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(oracle_disjoint_pack(tri, 1));
    CHECK_FALSE(oracle_disjoint_pack(tri, 2));

    // Two vertex-disjoint triangles.
    Digraph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(oracle_disjoint_pack(two, 2));
    CHECK_FALSE(oracle_disjoint_pack(two, 3));
}

TEST_CASE("oracle guard refuses oversized inputs") {
    Digraph big(20, {});
    CHECK_THROWS_AS(oracle_find(big, {1}), GuardError);
    CHECK_THROWS_AS(oracle_max_k(big, 1), GuardError);
    CHECK(oracle_max_k(big, 1, 32) == 0); // override works
}

TEST_CASE("oracle_find: monotone under pointwise-smaller lengths") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 30; ++i) {
        Digraph g = testutil::random_digraph_swept(rng, 7);
        if (oracle_find(g, {2, 3}).has_value()) {
            CHECK(oracle_find(g, {2, 2}).has_value());
            CHECK(oracle_find(g, {1, 3}).has_value());
        }
    }
}
