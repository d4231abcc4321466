#include "doctest.h"

#include <random>

#include "spindle/digraph.hpp"
#include "test_util.hpp"

using namespace spindle;

TEST_CASE("parse: single arc") {
    Digraph g = parse_digraph("2 1\n0 1\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.arc_count() == 1);
    CHECK(g.arc(0).tail == 0);
    CHECK(g.arc(0).head == 1);
}

TEST_CASE("parse: parallel arcs are preserved in order") {
    Digraph g = parse_digraph("2 2\n0 1\n0 1\n");
    CHECK(g.arc_count() == 2);
    CHECK(g.multiplicity(0, 1) == 2);
}

TEST_CASE("parse: self-loop names the line") {
    try {
        parse_digraph("2 1\n0 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
}

TEST_CASE("parse: comments and bad ids") {
    Digraph g = parse_digraph("# header comment\n3 1\n# arc comment\n0 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.arc_count() == 1);
    CHECK_THROWS_AS(parse_digraph("2 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("2 x\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("3 2\n0 1\n"), ParseError);
}

TEST_CASE("serialize: examples and round trip") {
    CHECK(serialize_digraph(Digraph(2, {{0, 1}})) == "2 1\n0 1\n");
    CHECK(serialize_digraph(Digraph(3, {})) == "3 0\n");

    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        Digraph g = testutil::random_digraph(rng, 2 + static_cast<int>(rng() % 9),
                                             static_cast<int>(rng() % 20));
        Digraph h = parse_digraph(serialize_digraph(g));
        REQUIRE(h.vertex_count() == g.vertex_count());
        REQUIRE(h.arc_count() == g.arc_count());
        for (int id = 0; id < g.arc_count(); ++id) CHECK(h.arc(id) == g.arc(id));
    }
}

TEST_CASE("topological order") {
    Digraph path(3, {{0, 1}, {1, 2}});
    auto order = topological_order(path);
    REQUIRE(order.has_value());
    CHECK(*order == std::vector<int>{0, 1, 2});

    Digraph cyc(2, {{0, 1}, {1, 0}});
    CHECK_FALSE(topological_order(cyc).has_value());

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Digraph dag = testutil::random_dag(rng, 8, 16);
        auto topo = topological_order(dag);
        REQUIRE(topo.has_value());
        std::vector<int> pos(8);
        for (int j = 0; j < 8; ++j) pos[static_cast<size_t>((*topo)[static_cast<size_t>(j)])] = j;
        for (const Arc& a : dag.arcs()) CHECK(pos[static_cast<size_t>(a.tail)] < pos[static_cast<size_t>(a.head)]);
    }
}

TEST_CASE("validate_witness: running example") {
    Digraph g = testutil::fig1_digraph();
    SpindleWitness w;
    w.tail = 0;
    w.head = 1;
    w.paths = {
        DiPath{{0, 2, 3, 4, 1}, {0, 1, 2, 3}},
        DiPath{{0, 5, 6, 1}, {4, 5, 6}},
        DiPath{{0, 7, 1}, {7, 8}},
    };
    CHECK(validate_witness(g, SpindleSpec::uniform(3, 2), w));
    CHECK_FALSE(validate_witness(g, SpindleSpec::uniform(3, 3), w));
    // Subdivision monotonicity: pointwise smaller specs stay accepted.
    CHECK(validate_witness(g, SpindleSpec::subdivision({1, 2, 3}), w));
    CHECK(validate_witness(g, SpindleSpec::subdivision({2, 3, 4}), w));
    CHECK_FALSE(validate_witness(g, SpindleSpec::exact({2, 3, 3}), w));
    CHECK(validate_witness(g, SpindleSpec::exact({2, 3, 4}), w));
}

TEST_CASE("validate_witness: identity and violation cases") {
    Digraph g(2, {{0, 1}});
    SpindleWitness w;
    w.tail = 0;
    w.head = 1;
    w.paths = {DiPath{{0, 1}, {0}}};
    CHECK(validate_witness(g, SpindleSpec::uniform(1, 1), w));

    // Two paths sharing an internal vertex.
    Digraph h(4, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {2, 1}});
    SpindleWitness bad;
    bad.tail = 0;
    bad.head = 1;
    bad.paths = {DiPath{{0, 2, 1}, {0, 1}}, DiPath{{0, 2, 1}, {0, 4}}};
    CHECK_FALSE(validate_witness(h, SpindleSpec::uniform(2, 2), bad));

    // Arc identity reuse across paths.
    SpindleWitness reuse;
    reuse.tail = 0;
    reuse.head = 1;
    reuse.paths = {DiPath{{0, 2, 1}, {0, 1}}, DiPath{{0, 3, 1}, {0, 3}}};
    CHECK_FALSE(validate_witness(h, SpindleSpec::uniform(2, 2), reuse));

    SpindleWitness ok;
    ok.tail = 0;
    ok.head = 1;
    ok.paths = {DiPath{{0, 2, 1}, {0, 1}}, DiPath{{0, 3, 1}, {2, 3}}};
    CHECK(validate_witness(h, SpindleSpec::uniform(2, 2), ok));
}

TEST_CASE("parallel arcs form a valid (1,1)-spindle") {
    Digraph g(2, {{0, 1}, {0, 1}});
    SpindleWitness w;
    w.tail = 0;
    w.head = 1;
    w.paths = {DiPath{{0, 1}, {0}}, DiPath{{0, 1}, {1}}};
    CHECK(validate_witness(g, SpindleSpec::uniform(2, 1), w));
}
