#ifndef SPINDLE_FPT_HPP
#define SPINDLE_FPT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "spindle/digraph.hpp"
#include "spindle/repsets.hpp"

namespace spindle {

// Family of candidate vertex sets for paths from `start` to `finish` on
// exactly `p` vertices, each with one witness path spanning the set.
struct PathFamily {
    int start = -1;
    int finish = -1;
    int p = 0;
    struct Entry {
        std::vector<int> set; // sorted
        DiPath witness;
    };
    std::vector<Entry> entries;
};

// Pairs of start-sharing paths merged into one candidate set per pair.
struct MergedFamily {
    int start = -1;
    int end1 = -1, end2 = -1;
    int p1 = 0, p2 = 0; // vertex counts of the two sides
    struct Entry {
        std::vector<int> set; // sorted union, |set| = p1 + p2 - 1
        DiPath witness1, witness2;
    };
    std::vector<Entry> entries;
};

// For each reachable end vertex, a q-representative family of the vertex
// sets of start->end paths on exactly `p` vertices. Level j of the
// level-by-level extension is trimmed as (q + p - j)-representative so the
// final level is q-representative.
std::map<int, PathFamily> compute_path_families(const Digraph& g, int start, int p, int q);

// All unions of one entry from each side intersecting exactly in {start},
// trimmed q-representatively.
MergedFamily merge_families(const PathFamily& f1, const PathFamily& f2, int q,
                            const TrimContext& ctx);

// Tuning knobs shared by the 2-spindle solvers.
struct SolveOptions {
    std::uint64_t seed = 0;
    int jobs = 1;
    // Color-coding trials; -1 selects ceil(e^c * 20 * ln 2) for c colors,
    // which bounds the per-spindle miss probability by 2^-20.
    long long trials = -1;
    // At or below this many vertices the short-spindle phase runs an
    // exhaustive exact search instead of color coding (deterministic, same
    // guarantee, and far cheaper at small scale).
    int exact_short_threshold = 14;
};

long long default_colorcoding_trials(int colors);

// Witness 2-spindle whose path lengths sum to at least `total`, or nullopt.
// Representative-family search per the total-length decomposition; always
// validates before returning.
std::optional<SpindleWitness> solve_total_length(const Digraph& g, int total,
                                                 const SolveOptions& opts = {});

// One-sided randomized search for an exact (len1, len2)-spindle subgraph by
// color coding: vertices are colored with len1 + len2 colors and two
// colorful paths whose color sets meet exactly at the endpoints force the
// spindle. Absence after all trials is not a proof of non-existence.
std::optional<SpindleWitness> find_exact_spindle_colorcoding(const Digraph& g, int len1,
                                                             int len2, long long trials,
                                                             std::uint64_t seed = 0);

// Decides (with witness) whether g contains a subdivision of a
// (len1, len2)-spindle, len1 <= len2: short spindles via the exact-subgraph
// sweep, long ones via path families at q = len1 + len2 - 1 plus a guessed
// short-path prefix and a two-path flow check.
std::optional<SpindleWitness> solve_fixed_lengths(const Digraph& g, int len1, int len2,
                                                  const SolveOptions& opts = {});

} // namespace spindle

#endif
