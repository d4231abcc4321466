#ifndef SPINDLE_FPT_INTERNAL_HPP
#define SPINDLE_FPT_INTERNAL_HPP

#include <optional>
#include <vector>

#include "spindle/digraph.hpp"
#include "spindle/disjoint_paths.hpp"

namespace spindle::detail {

inline std::vector<char> reachable_from(const Digraph& g, int src) {
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> stack{src};
    seen[static_cast<size_t>(src)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int id : g.out_arcs(v)) {
            int h = g.arc(id).head;
            if (!seen[static_cast<size_t>(h)]) {
                seen[static_cast<size_t>(h)] = 1;
                stack.push_back(h);
            }
        }
    }
    return seen;
}

inline DiPath splice(const DiPath& a, const DiPath& b) {
    DiPath out = a;
    out.vertices.insert(out.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
    out.arc_ids.insert(out.arc_ids.end(), b.arc_ids.begin(), b.arc_ids.end());
    return out;
}

// First pair of internally disjoint paths between any ordered vertex pair,
// i.e. an arbitrary 2-spindle.
inline std::optional<SpindleWitness> any_two_disjoint_paths(const Digraph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (g.out_degree(u) < 2) continue;
        for (int v = 0; v < n; ++v) {
            if (u == v || g.in_degree(v) < 2) continue;
            auto [count, paths] = max_internally_disjoint_paths(g, u, v);
            if (count >= 2) {
                SpindleWitness w;
                w.tail = u;
                w.head = v;
                w.paths = {std::move(paths[0]), std::move(paths[1])};
                return w;
            }
        }
    }
    return std::nullopt;
}

} // namespace spindle::detail

#endif
