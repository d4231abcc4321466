#include "spindle/disjoint_paths.hpp"

#include <algorithm>
#include <queue>

#include "spindle/effort.hpp"

namespace spindle {

namespace {

// Unit-capacity network with residual arcs. Node count stays small (2n), so
// plain BFS augmentation is enough: the flow value never exceeds n.
struct UnitFlowNet {
    struct Edge {
        int to;
        int cap;       // residual capacity, 0 or 1 (split edges for s/t get n)
        int orig_arc;  // arc id in the source digraph, -1 for split edges
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> head; // node -> edge indices

    explicit UnitFlowNet(int nodes) : head(static_cast<size_t>(nodes)) {}

    void add(int from, int to, int cap, int orig_arc) {
        head[static_cast<size_t>(from)].push_back(static_cast<int>(edges.size()));
        edges.push_back({to, cap, orig_arc});
        head[static_cast<size_t>(to)].push_back(static_cast<int>(edges.size()));
        edges.push_back({from, 0, -1});
    }

    bool augment(int source, int sink) {
        effort::bump();
        std::vector<int> pred_edge(head.size(), -1);
        std::vector<char> seen(head.size(), 0);
        std::queue<int> q;
        q.push(source);
        seen[static_cast<size_t>(source)] = 1;
        while (!q.empty() && !seen[static_cast<size_t>(sink)]) {
            int v = q.front();
            q.pop();
            for (int ei : head[static_cast<size_t>(v)]) {
                const Edge& e = edges[static_cast<size_t>(ei)];
                if (e.cap > 0 && !seen[static_cast<size_t>(e.to)]) {
                    seen[static_cast<size_t>(e.to)] = 1;
                    pred_edge[static_cast<size_t>(e.to)] = ei;
                    q.push(e.to);
                }
            }
        }
        if (!seen[static_cast<size_t>(sink)]) return false;
        for (int v = sink; v != source;) {
            int ei = pred_edge[static_cast<size_t>(v)];
            edges[static_cast<size_t>(ei)].cap -= 1;
            edges[static_cast<size_t>(ei ^ 1)].cap += 1;
            v = edges[static_cast<size_t>(ei ^ 1)].to;
        }
        return true;
    }
};

} // namespace

std::pair<int, std::vector<DiPath>> max_internally_disjoint_paths(
    const Digraph& g, int s, int t, const std::vector<int>& forbidden) {
    const int n = g.vertex_count();
    if (s == t) throw std::invalid_argument("s and t must differ");
    if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("endpoint out of range");
    std::vector<char> blocked(static_cast<size_t>(n), 0);
    for (int v : forbidden) {
        if (v == s || v == t) throw std::invalid_argument("forbidden set contains an endpoint");
        blocked[static_cast<size_t>(v)] = 1;
    }

    // Node layout: v_in = 2v, v_out = 2v + 1.
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };
    UnitFlowNet net(2 * n);
    for (int v = 0; v < n; ++v) {
        if (blocked[static_cast<size_t>(v)] || v == s || v == t) continue;
        net.add(vin(v), vout(v), 1, -1);
    }
    for (int id = 0; id < g.arc_count(); ++id) {
        const Arc& a = g.arc(id);
        if (blocked[static_cast<size_t>(a.tail)] || blocked[static_cast<size_t>(a.head)]) continue;
        if (a.head == s || a.tail == t) continue; // useless for s->t flow
        net.add(vout(a.tail), vin(a.head), 1, id);
    }
    const int source = vout(s), sink = vin(t);
    int flow = 0;
    while (net.augment(source, sink)) ++flow;

    // Decompose the flow by walking saturated forward edges from the source.
    // Internal vertices carry at most one unit, so walks never enter flow
    // cycles and always end at the sink.
    std::vector<DiPath> paths;
    std::vector<std::vector<int>> flow_out(net.head.size());
    for (size_t node = 0; node < net.head.size(); ++node)
        for (int ei : net.head[node])
            if ((ei & 1) == 0 && net.edges[static_cast<size_t>(ei)].cap == 0)
                flow_out[node].push_back(ei); // forward edge fully used
    for (int i = 0; i < flow; ++i) {
        DiPath p;
        p.vertices.push_back(s);
        int node = source;
        while (node != sink) {
            int ei = flow_out[static_cast<size_t>(node)].back();
            flow_out[static_cast<size_t>(node)].pop_back();
            const auto& e = net.edges[static_cast<size_t>(ei)];
            if (e.orig_arc >= 0) {
                p.arc_ids.push_back(e.orig_arc);
                p.vertices.push_back(g.arc(e.orig_arc).head);
            }
            node = e.to;
        }
        paths.push_back(std::move(p));
    }
    return {flow, std::move(paths)};
}

std::optional<std::pair<DiPath, DiPath>> two_disjoint_paths_to(const Digraph& g, int a,
                                                               int b, int v) {
    if (a == v || b == v) return std::nullopt;
    if (a == b) {
        auto [count, paths] = max_internally_disjoint_paths(g, a, v);
        if (count < 2) return std::nullopt;
        return std::make_pair(std::move(paths[0]), std::move(paths[1]));
    }
    // Super-source with one arc to each of a and b; unit vertex capacities
    // then force one path through each.
    const int sigma = g.vertex_count();
    std::vector<Arc> arcs = g.arcs();
    arcs.push_back(Arc{sigma, a});
    arcs.push_back(Arc{sigma, b});
    Digraph ext(sigma + 1, std::move(arcs));
    auto [count, paths] = max_internally_disjoint_paths(ext, sigma, v);
    if (count < 2) return std::nullopt;
    DiPath from_a, from_b;
    for (DiPath& p : paths) {
        // Drop the super-source hop.
        p.vertices.erase(p.vertices.begin());
        p.arc_ids.erase(p.arc_ids.begin());
        if (p.first() == a)
            from_a = std::move(p);
        else
            from_b = std::move(p);
    }
    if (from_a.vertices.empty() || from_b.vertices.empty()) return std::nullopt;
    return std::make_pair(std::move(from_a), std::move(from_b));
}

} // namespace spindle
