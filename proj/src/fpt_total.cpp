#include "spindle/fpt.hpp"

#include <algorithm>
#include <set>

#include "fpt_internal.hpp"
#include "spindle/disjoint_paths.hpp"

namespace spindle {

namespace {

using detail::reachable_from;
using detail::splice;

// Spec the witness actually satisfies for a total-length target.
SpindleSpec total_spec(const SpindleWitness& w, int total) {
    const int l1 = w.paths[0].length(), l2 = w.paths[1].length();
    int s1 = std::clamp(total - l2, 1, l1);
    return SpindleSpec::subdivision({s1, total - s1});
}

} // namespace

std::optional<SpindleWitness> solve_total_length(const Digraph& g, int total,
                                                 const SolveOptions& opts) {
    (void)opts;
    if (total < 2) throw std::invalid_argument("total length must be at least 2");
    const int n = g.vertex_count();
    // A 2-spindle with total length L occupies exactly L vertices.
    if (n < total) return std::nullopt;

    if (total == 2) {
        auto w = detail::any_two_disjoint_paths(g);
        if (w && !validate_witness(g, SpindleSpec::subdivision({1, 1}), *w))
            throw std::logic_error("total-length solver produced an invalid witness");
        return w;
    }

    TrimContext merge_ctx = make_trim_context(n, 2 * (total - 1));
    std::set<std::vector<int>> failed_flow; // (set, end1, end2, v) seen and rejected

    for (int u = 0; u < n; ++u) {
        if (g.out_degree(u) < 2) continue;
        // Path families per prefix vertex count c, trimmed so that the merge
        // of counts (c, total - c) stays (total-1)-representative.
        std::vector<std::map<int, PathFamily>> fams(static_cast<size_t>(total));
        for (int c = 1; c <= total - 1; ++c)
            fams[static_cast<size_t>(c)] = compute_path_families(g, u, c, 2 * total - c - 2);

        for (int l1 = 1; 2 * l1 <= total; ++l1) {
            const int l2 = total - l1;
            for (const auto& [u1, fam1] : fams[static_cast<size_t>(l1)]) {
                for (const auto& [u2, fam2] : fams[static_cast<size_t>(l2)]) {
                    if (u1 == u2) continue;
                    if (l1 == l2 && u1 > u2) continue; // symmetric split
                    MergedFamily merged = merge_families(fam1, fam2, total - 1, merge_ctx);
                    for (const auto& entry : merged.entries) {
                        // Remove the candidate prefix pair except its tips.
                        std::vector<char> removed(static_cast<size_t>(n), 0);
                        for (int w : entry.set) removed[static_cast<size_t>(w)] = 1;
                        removed[static_cast<size_t>(u1)] = 0;
                        removed[static_cast<size_t>(u2)] = 0;
                        FilteredDigraph sub = filter_arcs(g, [&](int id) {
                            const Arc& a = g.arc(id);
                            return !removed[static_cast<size_t>(a.tail)] &&
                                   !removed[static_cast<size_t>(a.head)];
                        });
                        std::vector<char> r1 = reachable_from(sub.graph, u1);
                        std::vector<char> r2 = reachable_from(sub.graph, u2);
                        for (int v = 0; v < n; ++v) {
                            if (v == u1 || v == u2) continue;
                            if (!r1[static_cast<size_t>(v)] || !r2[static_cast<size_t>(v)])
                                continue;
                            if (std::binary_search(entry.set.begin(), entry.set.end(), v))
                                continue;
                            std::vector<int> key = entry.set;
                            key.push_back(-1);
                            key.push_back(u1);
                            key.push_back(u2);
                            key.push_back(v);
                            if (failed_flow.count(key)) continue;
                            auto flow = two_disjoint_paths_to(sub.graph, u1, u2, v);
                            if (!flow) {
                                failed_flow.insert(std::move(key));
                                continue;
                            }
                            for (int& id : flow->first.arc_ids)
                                id = sub.orig_arc[static_cast<size_t>(id)];
                            for (int& id : flow->second.arc_ids)
                                id = sub.orig_arc[static_cast<size_t>(id)];
                            SpindleWitness w;
                            w.tail = u;
                            w.head = v;
                            w.paths = {splice(entry.witness1, flow->first),
                                       splice(entry.witness2, flow->second)};
                            if (!validate_witness(g, total_spec(w, total), w))
                                throw std::logic_error(
                                    "total-length solver produced an invalid witness");
                            return w;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace spindle
