#include "spindle/disjoint_paths.hpp"

#include <algorithm>

namespace spindle {

SplitGadget build_split_graph(const Digraph& g, const std::vector<int>& X,
                              const std::vector<int>& Y) {
    const int n = g.vertex_count();
    SplitGadget sg;
    sg.in_x.assign(static_cast<size_t>(n), 0);
    sg.in_y.assign(static_cast<size_t>(n), 0);
    for (int v : X) {
        if (v < 0 || v >= n) throw std::invalid_argument("X vertex out of range");
        sg.in_x[static_cast<size_t>(v)] = 1;
    }
    for (int v : Y) {
        if (v < 0 || v >= n) throw std::invalid_argument("Y vertex out of range");
        sg.in_y[static_cast<size_t>(v)] = 1;
    }
    auto in_xy = [&](int v) { return sg.in_x[static_cast<size_t>(v)] || sg.in_y[static_cast<size_t>(v)]; };

    // Drop arcs into X\Y and arcs out of Y\X; paths never need them.
    FilteredDigraph pre = filter_arcs(g, [&](int id) {
        const Arc& a = g.arc(id);
        if (sg.in_x[static_cast<size_t>(a.head)] && !sg.in_y[static_cast<size_t>(a.head)]) return false;
        if (sg.in_y[static_cast<size_t>(a.tail)] && !sg.in_x[static_cast<size_t>(a.tail)]) return false;
        return true;
    });
    sg.preprocessed = std::move(pre.graph);
    sg.orig_arc = std::move(pre.orig_arc);

    sg.origin.resize(static_cast<size_t>(n));
    sg.is_copy.assign(static_cast<size_t>(n), false);
    sg.copy_id.assign(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) sg.origin[static_cast<size_t>(v)] = v;
    for (int v = 0; v < n; ++v) {
        if (in_xy(v)) continue;
        sg.copy_id[static_cast<size_t>(v)] = static_cast<int>(sg.origin.size());
        sg.origin.push_back(v);
        sg.is_copy.push_back(true);
    }
    sg.graph.n = static_cast<int>(sg.origin.size());
    for (int v = 0; v < n; ++v) {
        if (in_xy(v)) continue;
        sg.graph.edges.emplace_back(v, sg.copy_id[static_cast<size_t>(v)]);
        sg.edge_arc.push_back(-1);
    }
    for (int id = 0; id < sg.preprocessed.arc_count(); ++id) {
        const Arc& a = sg.preprocessed.arc(id);
        int head_side = in_xy(a.head) ? a.head : sg.copy_id[static_cast<size_t>(a.head)];
        sg.graph.edges.emplace_back(a.tail, head_side);
        sg.edge_arc.push_back(id);
    }
    return sg;
}

std::pair<int, std::vector<DiPath>> max_nontrivial_xy_paths(const Digraph& g,
                                                            const std::vector<int>& X,
                                                            const std::vector<int>& Y) {
    if (X.empty() || Y.empty()) return {0, {}};
    SplitGadget sg = build_split_graph(g, X, Y);
    Matching m = max_matching(sg.graph);

    int pairs = 0; // |V(g) \ (X u Y)|, the size of the reference matching N
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!sg.in_x[static_cast<size_t>(v)] && !sg.in_y[static_cast<size_t>(v)]) ++pairs;
    int count = std::max(0, m.size() - pairs);
    if (count == 0) return {0, {}};

    // Symmetric difference M (triangle) N, where N pairs every v with v'.
    // Components with one extra M edge are alternating paths between
    // N-unsaturated vertices, i.e. between vertices of X u Y; their stored
    // arcs spell out a directed path.
    const int gn = sg.graph.n;
    std::vector<char> in_m(sg.graph.edges.size(), 0);
    for (int id : m.edge_ids) in_m[static_cast<size_t>(id)] = 1;
    std::vector<std::vector<int>> adj(static_cast<size_t>(gn)); // edge ids of M^N
    for (int id = 0; id < static_cast<int>(sg.graph.edges.size()); ++id) {
        bool is_n = sg.edge_arc[static_cast<size_t>(id)] == -1;
        if (static_cast<bool>(in_m[static_cast<size_t>(id)]) == is_n) continue;
        adj[static_cast<size_t>(sg.graph.edges[static_cast<size_t>(id)].first)].push_back(id);
        adj[static_cast<size_t>(sg.graph.edges[static_cast<size_t>(id)].second)].push_back(id);
    }

    std::vector<DiPath> result;
    std::vector<char> edge_done(sg.graph.edges.size(), 0);
    for (int start = 0; start < gn; ++start) {
        if (adj[static_cast<size_t>(start)].size() != 1) continue; // path endpoints only
        int first_edge = adj[static_cast<size_t>(start)][0];
        if (edge_done[static_cast<size_t>(first_edge)]) continue;
        // Walk the component, collecting arc ids of M edges.
        std::vector<int> arc_ids;
        int m_edges = 0, n_edges = 0;
        int v = start, prev_edge = -1;
        for (;;) {
            int next_edge = -1;
            for (int id : adj[static_cast<size_t>(v)])
                if (id != prev_edge && !edge_done[static_cast<size_t>(id)]) next_edge = id;
            if (next_edge == -1) break;
            edge_done[static_cast<size_t>(next_edge)] = 1;
            int arc = sg.edge_arc[static_cast<size_t>(next_edge)];
            if (arc == -1)
                ++n_edges;
            else {
                ++m_edges;
                arc_ids.push_back(arc);
            }
            const auto& e = sg.graph.edges[static_cast<size_t>(next_edge)];
            v = (e.first == v) ? e.second : e.first;
            prev_edge = next_edge;
        }
        if (m_edges != n_edges + 1) continue; // balanced component, not a path
        // Order the collected arcs into a chain; the walk direction may be
        // against the arc direction, so try both ends.
        DiPath p;
        auto chain = [&](const std::vector<int>& ids) {
            DiPath out;
            out.vertices.push_back(sg.preprocessed.arc(ids.front()).tail);
            for (int id : ids) {
                const Arc& a = sg.preprocessed.arc(id);
                if (a.tail != out.vertices.back()) return DiPath{};
                out.arc_ids.push_back(id);
                out.vertices.push_back(a.head);
            }
            return out;
        };
        p = chain(arc_ids);
        if (p.vertices.empty()) {
            std::reverse(arc_ids.begin(), arc_ids.end());
            p = chain(arc_ids);
        }
        if (p.vertices.empty()) throw std::logic_error("gadget component is not a directed path");
        // Map arc ids back to the input digraph.
        for (int& id : p.arc_ids) id = sg.orig_arc[static_cast<size_t>(id)];
        result.push_back(std::move(p));
        if (static_cast<int>(result.size()) == count) break;
    }
    if (static_cast<int>(result.size()) != count)
        throw std::logic_error("matching decomposition yielded fewer paths than expected");
    return {count, std::move(result)};
}

} // namespace spindle
