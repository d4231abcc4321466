#include "spindle/fpt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

#include "spindle/effort.hpp"

namespace spindle {

long long default_colorcoding_trials(int colors) {
    if (colors < 2) return 1;
    // ceil(e^c * 20 * ln 2): a specific c-vertex spindle is colorful with
    // probability c!/c^c >= e^-c, so this many trials miss it with
    // probability at most 2^-20.
    const double t = std::ceil(std::exp(static_cast<double>(colors)) * 20.0 * std::log(2.0));
    if (t >= static_cast<double>(std::numeric_limits<long long>::max()))
        return std::numeric_limits<long long>::max();
    return static_cast<long long>(t);
}

namespace {

struct StateKey {
    int vertex;
    std::uint64_t mask;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    size_t operator()(const StateKey& k) const {
        std::uint64_t h = k.mask * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(k.vertex);
        h ^= h >> 29;
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 32;
        return static_cast<size_t>(h);
    }
};

struct StateInfo {
    int parent_vertex;
    std::uint64_t parent_mask;
    int arc; // arc used to reach this state, -1 at the root
};

using Level = std::unordered_map<StateKey, StateInfo, StateKeyHash>;

DiPath rebuild_path(const std::vector<Level>& levels, int level, StateKey key) {
    DiPath p;
    std::vector<int> verts, arcs;
    while (true) {
        const StateInfo& info = levels[static_cast<size_t>(level)].at(key);
        verts.push_back(key.vertex);
        if (info.arc < 0) break;
        arcs.push_back(info.arc);
        key = StateKey{info.parent_vertex, info.parent_mask};
        --level;
    }
    std::reverse(verts.begin(), verts.end());
    std::reverse(arcs.begin(), arcs.end());
    p.vertices = std::move(verts);
    p.arc_ids = std::move(arcs);
    return p;
}

} // namespace

std::optional<SpindleWitness> find_exact_spindle_colorcoding(const Digraph& g, int len1,
                                                             int len2, long long trials,
                                                             std::uint64_t seed) {
    if (len1 < 1 || len2 < 1) throw std::invalid_argument("lengths must be positive");
    if (trials < 1) throw std::invalid_argument("at least one trial required");
    const int n = g.vertex_count();
    const int colors = len1 + len2; // an exact (len1,len2)-spindle has len1+len2 vertices
    if (colors > 62) throw std::invalid_argument("color-coding capped at 62 colors");
    if (n < colors) return std::nullopt; // no trial can succeed

    if (len1 == 1 && len2 == 1) {
        // Colorful states cannot tell parallel arcs apart; a (1,1)-spindle is
        // exactly an arc of multiplicity two, so scan for one directly.
        for (int u = 0; u < n; ++u)
            for (int id1 : g.out_arcs(u)) {
                const int v = g.arc(id1).head;
                for (int id2 : g.out_arcs(u)) {
                    if (id2 <= id1 || g.arc(id2).head != v) continue;
                    SpindleWitness w;
                    w.tail = u;
                    w.head = v;
                    w.paths = {DiPath{{u, v}, {id1}}, DiPath{{u, v}, {id2}}};
                    if (!validate_witness(g, SpindleSpec::exact({1, 1}), w))
                        throw std::logic_error("color-coding produced an invalid witness");
                    return w;
                }
            }
        return std::nullopt;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> color_dist(0, colors - 1);
    const std::uint64_t full_mask = (colors == 64) ? ~0ULL : ((1ULL << colors) - 1);
    const int max_len = std::max(len1, len2);
    std::vector<int> color(static_cast<size_t>(n));

    for (long long trial = 0; trial < trials; ++trial) {
        effort::bump();
        for (int v = 0; v < n; ++v) color[static_cast<size_t>(v)] = color_dist(rng);

        for (int u = 0; u < n; ++u) {
            if (g.out_degree(u) < 2) continue;
            // levels[j]: colorful paths from u on j+1 vertices.
            std::vector<Level> levels(static_cast<size_t>(max_len) + 1);
            const std::uint64_t ubit = 1ULL << color[static_cast<size_t>(u)];
            levels[0].emplace(StateKey{u, ubit}, StateInfo{-1, 0, -1});
            for (int j = 0; j < max_len; ++j) {
                for (const auto& [key, info] : levels[static_cast<size_t>(j)]) {
                    for (int id : g.out_arcs(key.vertex)) {
                        const int to = g.arc(id).head;
                        const std::uint64_t bit = 1ULL << color[static_cast<size_t>(to)];
                        if (key.mask & bit) continue;
                        levels[static_cast<size_t>(j) + 1].try_emplace(
                            StateKey{to, key.mask | bit}, StateInfo{key.vertex, key.mask, id});
                    }
                }
            }
            // Match a length-len1 and a length-len2 path to the same head
            // whose color sets meet exactly at the endpoint colors.
            for (const auto& [key1, info1] : levels[static_cast<size_t>(len1)]) {
                const int v = key1.vertex;
                const std::uint64_t vbit = 1ULL << color[static_cast<size_t>(v)];
                if (vbit == ubit) continue; // endpoints must differ in color
                const std::uint64_t want = (~key1.mask & full_mask) | ubit | vbit;
                auto it = levels[static_cast<size_t>(len2)].find(StateKey{v, want});
                if (it == levels[static_cast<size_t>(len2)].end()) continue;
                SpindleWitness w;
                w.tail = u;
                w.head = v;
                w.paths = {rebuild_path(levels, len1, key1),
                           rebuild_path(levels, len2, StateKey{v, want})};
                if (!validate_witness(g, SpindleSpec::exact({len1, len2}), w))
                    throw std::logic_error("color-coding produced an invalid witness");
                return w;
            }
        }
    }
    return std::nullopt;
}

} // namespace spindle
