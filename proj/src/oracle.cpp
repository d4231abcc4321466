#include "spindle/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "spindle/effort.hpp"

namespace spindle {

namespace {

// Backtracking state for one (tail, head) endpoint pair. Demands are packed
// longest-first so the scarcest resources are claimed early.
struct PairSearch {
    const Digraph& g;
    int tail, head;
    std::vector<int> demands;
    SpindleMode mode;
    std::vector<char> used_vertex;
    std::vector<char> used_arc;
    std::vector<DiPath> chosen;
    int free_internals;
    int unused_out;
    int unused_in;

    int unused_direct; // arcs tail->head not yet used (only length-1 paths)

    PairSearch(const Digraph& g_, int u, int v, std::vector<int> ds, SpindleMode m)
        : g(g_), tail(u), head(v), demands(std::move(ds)), mode(m),
          used_vertex(static_cast<size_t>(g_.vertex_count()), 0),
          used_arc(static_cast<size_t>(g_.arc_count()), 0) {
        free_internals = g.vertex_count() - 2;
        unused_out = g.out_degree(tail);
        unused_in = g.in_degree(head);
        unused_direct = g.multiplicity(tail, head);
    }

    int internals_still_needed(size_t from_level) const {
        int need = 0;
        for (size_t i = from_level; i < demands.size(); ++i)
            need += std::max(0, demands[i] - 1);
        return need;
    }

    bool solve(size_t level) {
        if (level == demands.size()) return true;
        const int remaining = static_cast<int>(demands.size()) - static_cast<int>(level);
        if (remaining > unused_out || remaining > unused_in) return false;
        if (internals_still_needed(level) > free_internals) return false;
        // Each path needs an internal vertex unless it is a direct arc, and
        // only demands of 1 can be met by a direct arc.
        int direct_capable = 0;
        for (size_t i = level; i < demands.size(); ++i)
            if (demands[i] <= 1) ++direct_capable;
        if (remaining - std::min(direct_capable, unused_direct) > free_internals) return false;
        // Equal demands are interchangeable; force ascending first-arc ids
        // within a block to avoid exploring permutations of one system.
        const int floor = (level > 0 && demands[level] == demands[level - 1])
                              ? chosen.back().arc_ids.front()
                              : -1;
        DiPath p;
        p.vertices.push_back(tail);
        return extend(level, p, floor);
    }

    bool extend(size_t level, DiPath& p, int first_arc_floor) {
        effort::bump();
        const int d = demands[level];
        const int cur = p.vertices.back();
        const bool at_start = p.vertices.size() == 1;
        // Arcs into the head first: reaching it ends the path, so this finds
        // short completions before roaming.
        for (int phase = 0; phase < 2; ++phase) {
            for (int id : g.out_arcs(cur)) {
                if (used_arc[static_cast<size_t>(id)]) continue;
                if (at_start && id <= first_arc_floor) continue;
                const int nxt = g.arc(id).head;
                if ((nxt == head) != (phase == 0)) continue;
                if (nxt == head) {
                    const int len = p.length() + 1;
                    const bool long_enough =
                        mode == SpindleMode::Subdivision ? len >= d : len == d;
                    if (!long_enough) continue; // a path may not pass through head
                    p.arc_ids.push_back(id);
                    p.vertices.push_back(head);
                    bool ok = commit(level, p);
                    p.arc_ids.pop_back();
                    p.vertices.pop_back();
                    if (ok) return true;
                    continue;
                }
                if (nxt == tail || used_vertex[static_cast<size_t>(nxt)]) continue;
                if (mode == SpindleMode::ExactSubgraph && p.length() + 1 >= d) continue;
                // One internal for nxt, plus what this path and the rest still owe.
                const int need_here = std::max(0, d - (p.length() + 2));
                if (1 + need_here + internals_still_needed(level + 1) > free_internals) continue;
                used_vertex[static_cast<size_t>(nxt)] = 1;
                --free_internals;
                p.arc_ids.push_back(id);
                p.vertices.push_back(nxt);
                bool ok = extend(level, p, first_arc_floor);
                p.arc_ids.pop_back();
                p.vertices.pop_back();
                used_vertex[static_cast<size_t>(nxt)] = 0;
                ++free_internals;
                if (ok) return true;
            }
        }
        return false;
    }

    // The enclosing extend() frames already hold the vertex marks and the
    // free_internals accounting for p; only arc usage and the endpoint arc
    // budgets change here.
    bool commit(size_t level, const DiPath& p) {
        for (int id : p.arc_ids) used_arc[static_cast<size_t>(id)] = 1;
        --unused_out;
        --unused_in;
        const bool direct = p.length() == 1;
        if (direct) --unused_direct;
        chosen.push_back(p);
        if (solve(level + 1)) return true;
        chosen.pop_back();
        ++unused_out;
        ++unused_in;
        if (direct) ++unused_direct;
        for (int id : p.arc_ids) used_arc[static_cast<size_t>(id)] = 0;
        return false;
    }
};

void check_guard(const Digraph& g, int guard) {
    if (g.vertex_count() > guard)
        throw GuardError("digraph has " + std::to_string(g.vertex_count()) +
                         " vertices, oracle guard is " + std::to_string(guard));
}

} // namespace

std::optional<SpindleWitness> oracle_find(const Digraph& g, const std::vector<int>& lengths,
                                          SpindleMode mode, int guard) {
    check_guard(g, guard);
    if (lengths.empty()) throw std::invalid_argument("empty length multiset");
    for (int len : lengths)
        if (len < 1) throw std::invalid_argument("lengths must be positive");
    std::vector<int> demands(lengths);
    std::sort(demands.begin(), demands.end(), std::greater<>());

    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.out_degree(u) > 0 && g.in_degree(v) > 0) pairs.emplace_back(u, v);
    // Fail-fast order: big degree products first; stable for determinism.
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        long da = static_cast<long>(g.out_degree(a.first)) * g.in_degree(a.second);
        long db = static_cast<long>(g.out_degree(b.first)) * g.in_degree(b.second);
        return da > db;
    });
    for (auto [u, v] : pairs) {
        PairSearch search(g, u, v, demands, mode);
        if (search.solve(0)) {
            SpindleWitness w;
            w.tail = u;
            w.head = v;
            w.paths = std::move(search.chosen);
            if (!validate_witness(g, SpindleSpec{lengths, mode}, w))
                throw std::logic_error("oracle produced an invalid witness");
            return w;
        }
    }
    return std::nullopt;
}

int oracle_max_k(const Digraph& g, int len, int guard) {
    check_guard(g, guard);
    if (len < 1) throw std::invalid_argument("len must be positive");
    int k = 0;
    while (k < g.arc_count()) {
        std::vector<int> lengths(static_cast<size_t>(k + 1), len);
        if (!oracle_find(g, lengths, SpindleMode::Subdivision, guard)) break;
        ++k;
    }
    return k;
}

int oracle_max_total(const Digraph& g, int guard) {
    check_guard(g, guard);
    const int max_total = 2 * (g.vertex_count() - 1);
    int best = 0;
    for (int total = 2; total <= max_total; ++total) {
        bool found = false;
        for (int l1 = 1; l1 <= total / 2 && !found; ++l1)
            if (oracle_find(g, {l1, total - l1}, SpindleMode::Subdivision, guard)) found = true;
        if (!found) break; // monotone in the total
        best = total;
    }
    return best;
}

bool oracle_disjoint_pack(const Digraph& g, int count, int guard) {
    check_guard(g, guard);
    if (count <= 0) return true;
    const int n = g.vertex_count();
    if (n > 62) throw GuardError("disjoint pack search capped at 62 vertices");

    // Enumerate every (2 x 1)-spindle subdivision as a vertex bitmask, then
    // backtrack over index-increasing disjoint selections.
    std::vector<std::uint64_t> masks;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            std::vector<std::pair<std::uint64_t, std::vector<int>>> paths; // (vertex mask, arc ids)
            std::vector<char> used(static_cast<size_t>(n), 0);
            std::vector<int> arcs;
            std::uint64_t mask = 1ULL << u;
            auto dfs = [&](auto&& self, int cur) -> void {
                for (int id : g.out_arcs(cur)) {
                    const int nx = g.arc(id).head;
                    if (nx == v) {
                        arcs.push_back(id);
                        paths.emplace_back(mask | (1ULL << v), arcs);
                        arcs.pop_back();
                    } else if (nx != u && !used[static_cast<size_t>(nx)]) {
                        used[static_cast<size_t>(nx)] = 1;
                        mask |= 1ULL << nx;
                        arcs.push_back(id);
                        self(self, nx);
                        arcs.pop_back();
                        mask &= ~(1ULL << nx);
                        used[static_cast<size_t>(nx)] = 0;
                    }
                }
            };
            dfs(dfs, u);
            const std::uint64_t endpoints = (1ULL << u) | (1ULL << v);
            for (size_t i = 0; i < paths.size(); ++i)
                for (size_t j = i + 1; j < paths.size(); ++j) {
                    if ((paths[i].first & paths[j].first) != endpoints) continue;
                    if (paths[i].second == paths[j].second) continue;
                    masks.push_back(paths[i].first | paths[j].first);
                }
        }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

    std::function<bool(size_t, int, std::uint64_t)> pick = [&](size_t idx, int left,
                                                               std::uint64_t taken) -> bool {
        if (left == 0) return true;
        if (masks.size() - idx < static_cast<size_t>(left)) return false;
        for (size_t i = idx; i < masks.size(); ++i) {
            if (masks[i] & taken) continue;
            if (pick(i + 1, left - 1, taken | masks[i])) return true;
        }
        return false;
    };
    return pick(0, count, 0);
}

} // namespace spindle
