#ifndef SPINDLE_TESTS_TEST_UTIL_HPP
#define SPINDLE_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "spindle/digraph.hpp"
#include "spindle/disjoint_paths.hpp"

namespace spindle::testutil {

// The running example: a (4,3,2)-spindle from vertex 0 to vertex 1.
// Paths: 0-2-3-4-1 (length 4), 0-5-6-1 (length 3), 0-7-1 (length 2).
inline Digraph fig1_digraph() {
    return Digraph(8, {{0, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 1}, {0, 7}, {7, 1}});
}

// Matching-gadget example: X = {u1,u2,u3}, Y = {u3,u4}, two disjoint
// nontrivial X->Y paths (u1,v1,u3) and (u2,v3,u4).
// Vertices: u1..u4 = 0..3, v1 = 4, v2 = 5, v3 = 6.
struct Fig3 {
    Digraph g{7, {{0, 4}, {4, 2}, {1, 6}, {6, 3}, {0, 5}, {5, 3}}};
    std::vector<int> X{0, 1, 2};
    std::vector<int> Y{2, 3};
};

inline Digraph random_digraph(std::mt19937_64& rng, int n, int m) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i) {
        int u = pick(rng), v = pick(rng);
        while (v == u) v = pick(rng);
        arcs.push_back(Arc{u, v});
    }
    return Digraph(n, std::move(arcs));
}

// Arc density swept over instances: m drawn from [n-1, dense_max].
inline Digraph random_digraph_swept(std::mt19937_64& rng, int n) {
    const int dense_max = n * (n - 1);
    std::uniform_int_distribution<int> mdist(n - 1, dense_max);
    return random_digraph(rng, n, mdist(rng));
}

inline Digraph random_dag(std::mt19937_64& rng, int n, int m) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i) {
        int a = pick(rng), b = pick(rng);
        while (a == b) b = pick(rng);
        if (a > b) std::swap(a, b); // arcs follow perm order, so the result is acyclic
        arcs.push_back(Arc{perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]});
    }
    return Digraph(n, std::move(arcs));
}

} // namespace spindle::testutil

#endif
