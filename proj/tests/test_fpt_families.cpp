#include "doctest.h"

#include <random>
#include <set>

#include "brute.hpp"
#include "spindle/fpt.hpp"
#include "test_util.hpp"

using namespace spindle;

namespace {

SetFamily to_setfamily(const PathFamily& f, int n) {
    SetFamily s;
    s.universe_size = n;
    s.p = f.p;
    for (const auto& e : f.entries) s.members.push_back(e.set);
    return s;
}

// Exhaustive path families for one (start, p): buckets of vertex sets.
std::map<int, SetFamily> exhaustive_families(const Digraph& g, int start, int p) {
    std::map<int, SetFamily> out;
    for (const auto& [end, set] : brute::all_path_sets(g, start, p)) {
        SetFamily& f = out[end];
        f.universe_size = g.vertex_count();
        f.p = p;
        f.members.push_back(set);
    }
    return out;
}

} // namespace

TEST_CASE("compute_path_families: base level is the start vertex") {
    Digraph g(3, {{0, 1}, {1, 2}});
    auto fams = compute_path_families(g, 0, 1, 2);
    REQUIRE(fams.size() == 1);
    REQUIRE(fams.count(0) == 1);
    CHECK(fams.at(0).entries.size() == 1);
    CHECK(fams.at(0).entries[0].set == std::vector<int>{0});
    CHECK(fams.at(0).entries[0].witness.length() == 0);
}

TEST_CASE("compute_path_families: unique path") {
    Digraph g(4, {{0, 1}, {1, 2}, {2, 3}});
    auto fams = compute_path_families(g, 0, 3, 1);
    REQUIRE(fams.size() == 1);
    REQUIRE(fams.count(2) == 1);
    const PathFamily& f = fams.at(2);
    REQUIRE(f.entries.size() == 1);
    CHECK(f.entries[0].set == std::vector<int>{0, 1, 2});
    CHECK(f.entries[0].witness.vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("compute_path_families: witnesses span their sets") {
    std::mt19937_64 rng(151);
    for (int i = 0; i < 60; ++i) {
        const int n = 4 + static_cast<int>(rng() % 6);
        Digraph g = testutil::random_digraph_swept(rng, n);
        const int start = static_cast<int>(rng() % n);
        const int p = 2 + static_cast<int>(rng() % 3);
        auto fams = compute_path_families(g, start, p, static_cast<int>(rng() % 4));
        for (const auto& [end, fam] : fams) {
            for (const auto& e : fam.entries) {
                CHECK(e.witness.valid_in(g));
                CHECK(e.witness.first() == start);
                CHECK(e.witness.last() == end);
                std::vector<int> span(e.witness.vertices);
                std::sort(span.begin(), span.end());
                CHECK(span == e.set);
            }
        }
    }
}

TEST_CASE("compute_path_families: buckets q-represent the exhaustive families") {
    std::mt19937_64 rng(161);
    for (int i = 0; i < 200; ++i) {
        const int n = 5 + static_cast<int>(rng() % 8); // up to 12
        Digraph g = testutil::random_digraph(rng, n, 2 + static_cast<int>(rng() % (3 * n)));
        const int start = static_cast<int>(rng() % n);
        const int p = 2 + static_cast<int>(rng() % 3); // path vertex count <= 4
        const int q = static_cast<int>(rng() % 4);
        auto fams = compute_path_families(g, start, p, q);
        auto full = exhaustive_families(g, start, p);
        REQUIRE(fams.size() == full.size());
        for (const auto& [end, exact] : full) {
            REQUIRE(fams.count(end) == 1);
            SetFamily sub = to_setfamily(fams.at(end), n);
            CHECK(sub.members.size() <= binomial(p + q, p));
            REQUIRE(check_representative(exact, sub, q));
        }
    }
}

TEST_CASE("merge_families: degenerate second family") {
    Digraph g(4, {{0, 1}, {1, 2}, {0, 3}});
    auto f2s = compute_path_families(g, 0, 1, 3);
    auto f1s = compute_path_families(g, 0, 3, 1);
    REQUIRE(f1s.count(2) == 1);
    TrimContext ctx = make_trim_context(4, 3 + 1);
    MergedFamily m = merge_families(f1s.at(2), f2s.at(0), 1, ctx);
    REQUIRE(m.entries.size() == 1);
    CHECK(m.entries[0].set == std::vector<int>{0, 1, 2});
}

TEST_CASE("merge_families: overlapping paths merge to nothing") {
    // Two paths from 0 that must share vertex 1.
    Digraph g(4, {{0, 1}, {1, 2}, {1, 3}});
    auto fams = compute_path_families(g, 0, 3, 2);
    REQUIRE(fams.count(2) == 1);
    REQUIRE(fams.count(3) == 1);
    TrimContext ctx = make_trim_context(4, 5 + 2);
    MergedFamily m = merge_families(fams.at(2), fams.at(3), 2, ctx);
    CHECK(m.entries.empty());
}

TEST_CASE("merge_families: start mismatch is an error") {
    Digraph g(3, {{0, 1}, {1, 2}});
    auto a = compute_path_families(g, 0, 2, 0);
    auto b = compute_path_families(g, 1, 2, 0);
    TrimContext ctx = make_trim_context(3, 3);
    CHECK_THROWS_AS(merge_families(a.at(1), b.at(2), 0, ctx), std::invalid_argument);
}

TEST_CASE("merge_families: merged family represents the exhaustive pair sets") {
    std::mt19937_64 rng(171);
    for (int i = 0; i < 80; ++i) {
        const int n = 5 + static_cast<int>(rng() % 6); // up to 10
        Digraph g = testutil::random_digraph_swept(rng, n);
        const int start = static_cast<int>(rng() % n);
        const int p1 = 2, p2 = 2 + static_cast<int>(rng() % 2);
        const int q = static_cast<int>(rng() % 3);
        // Boosted inputs per the merge soundness argument.
        auto f1s = compute_path_families(g, start, p1, q + p2 - 1);
        auto f2s = compute_path_families(g, start, p2, q + p1 - 1);
        TrimContext ctx = make_trim_context(n, p1 + p2 - 1 + q);
        auto full1 = brute::all_path_sets(g, start, p1);
        auto full2 = brute::all_path_sets(g, start, p2);
        for (const auto& [u1, fam1] : f1s) {
            for (const auto& [u2, fam2] : f2s) {
                if (u1 == u2) continue;
                MergedFamily m = merge_families(fam1, fam2, q, ctx);
                // Exhaustive S family for this (u1, u2).
                SetFamily exact;
                exact.universe_size = n;
                exact.p = p1 + p2 - 1;
                std::set<std::vector<int>> seen;
                for (const auto& [e1, s1] : full1) {
                    if (e1 != u1) continue;
                    for (const auto& [e2, s2] : full2) {
                        if (e2 != u2) continue;
                        std::vector<int> inter;
                        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                              std::back_inserter(inter));
                        if (inter != std::vector<int>{start}) continue;
                        std::vector<int> uni;
                        std::set_union(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                       std::back_inserter(uni));
                        if (seen.insert(uni).second) exact.members.push_back(uni);
                    }
                }
                SetFamily got;
                got.universe_size = n;
                got.p = p1 + p2 - 1;
                for (const auto& e : m.entries) got.members.push_back(e.set);
                if (exact.members.empty()) {
                    CHECK(got.members.empty());
                } else {
                    REQUIRE(check_representative(exact, got, q));
                }
            }
        }
    }
}
