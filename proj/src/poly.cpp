#include "spindle/poly.hpp"

#include <algorithm>
#include <thread>

#include "spindle/disjoint_paths.hpp"

namespace spindle {

namespace {

// Count and witness for one candidate (tail, head) pair.
std::pair<int, std::vector<DiPath>> solve_pair(const Digraph& g, int len, int u, int v) {
    if (len == 1) return max_internally_disjoint_paths(g, u, v);
    if (len == 2) {
        FilteredDigraph f = filter_arcs(g, [&](int id) {
            const Arc& a = g.arc(id);
            return !((a.tail == u && a.head == v) || (a.tail == v && a.head == u));
        });
        auto [count, paths] = max_internally_disjoint_paths(f.graph, u, v);
        for (DiPath& p : paths)
            for (int& id : p.arc_ids) id = f.orig_arc[static_cast<size_t>(id)];
        return {count, std::move(paths)};
    }
    // len == 3: delete arcs between s and t, drop both endpoints, and ask for
    // vertex-disjoint nontrivial paths from N+(s) to N-(t).
    FilteredDigraph del = filter_arcs(g, [&](int id) {
        const Arc& a = g.arc(id);
        return !((a.tail == u && a.head == v) || (a.tail == v && a.head == u));
    });
    std::vector<int> X, Y;
    for (int w : del.graph.out_neighbors(u))
        if (w != v) X.push_back(w);
    for (int w : del.graph.in_neighbors(v))
        if (w != u) Y.push_back(w);
    if (X.empty() || Y.empty()) return {0, {}};
    FilteredDigraph mid = filter_arcs(del.graph, [&](int id) {
        const Arc& a = del.graph.arc(id);
        return a.tail != u && a.head != u && a.tail != v && a.head != v;
    });
    auto [count, paths] = max_nontrivial_xy_paths(mid.graph, X, Y);
    // Re-attach the endpoints and translate arc ids back to g.
    for (DiPath& p : paths) {
        for (int& id : p.arc_ids)
            id = del.orig_arc[static_cast<size_t>(mid.orig_arc[static_cast<size_t>(id)])];
        const int x = p.first(), y = p.last();
        p.vertices.insert(p.vertices.begin(), u);
        p.arc_ids.insert(p.arc_ids.begin(), g.find_arc(u, x));
        p.vertices.push_back(v);
        p.arc_ids.push_back(g.find_arc(y, v));
    }
    return {count, std::move(paths)};
}

} // namespace

std::pair<int, std::optional<SpindleWitness>> max_k_for_ell(const Digraph& g, int len,
                                                            int jobs) {
    if (len < 1 || len > 3) throw std::invalid_argument("path length must be 1, 2, or 3");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs.emplace_back(u, v);

    std::vector<int> counts(pairs.size(), 0);
    auto run_range = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i)
            counts[i] = solve_pair(g, len, pairs[i].first, pairs[i].second).first;
    };
    jobs = std::max(1, jobs);
    if (jobs == 1 || pairs.size() < 2) {
        run_range(0, pairs.size());
    } else {
        const size_t workers = std::min<size_t>(static_cast<size_t>(jobs), pairs.size());
        std::vector<std::thread> pool;
        const size_t chunk = (pairs.size() + workers - 1) / workers;
        for (size_t w = 0; w < workers; ++w) {
            size_t lo = w * chunk, hi = std::min(pairs.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    // Deterministic reduction: maximum count, first pair in lexicographic
    // order (pairs were generated lexicographically).
    int best = 0;
    size_t best_idx = 0;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (counts[i] > best) {
            best = counts[i];
            best_idx = i;
        }
    if (best == 0) return {0, std::nullopt};
    auto [count, paths] = solve_pair(g, len, pairs[best_idx].first, pairs[best_idx].second);
    SpindleWitness w;
    w.tail = pairs[best_idx].first;
    w.head = pairs[best_idx].second;
    w.paths = std::move(paths);
    if (!validate_witness(g, SpindleSpec::uniform(count, len), w))
        throw std::logic_error("polynomial solver produced an invalid witness");
    return {best, std::move(w)};
}

} // namespace spindle
