#ifndef SPINDLE_DISJOINT_PATHS_HPP
#define SPINDLE_DISJOINT_PATHS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "spindle/digraph.hpp"

namespace spindle {

struct UndirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Edge ids into the host graph's edge list; no two share an endpoint.
struct Matching {
    std::vector<int> edge_ids;
    int size() const { return static_cast<int>(edge_ids.size()); }
};

// Maximum-cardinality matching in a general graph (Edmonds' blossom
// contraction, O(V^3)).
Matching max_matching(const UndirectedGraph& g);

// Arc-deleted copy of a digraph on the same vertex set; orig_arc maps the
// surviving arc ids back to the source digraph.
struct FilteredDigraph {
    Digraph graph;
    std::vector<int> orig_arc;
};

template <class Pred>
FilteredDigraph filter_arcs(const Digraph& g, Pred keep) {
    FilteredDigraph f;
    std::vector<Arc> arcs;
    for (int id = 0; id < g.arc_count(); ++id) {
        if (keep(id)) {
            arcs.push_back(g.arc(id));
            f.orig_arc.push_back(id);
        }
    }
    f.graph = Digraph(g.vertex_count(), std::move(arcs));
    return f;
}

// Auxiliary undirected graph for the nontrivial X->Y path problem: every
// vertex outside X u Y gets a copy joined to it, and each arc becomes one
// edge whose head side is the copy unless the head lies in X u Y.
struct SplitGadget {
    UndirectedGraph graph;
    // For each gadget vertex: the original vertex it stands for.
    std::vector<int> origin;
    // True for copy vertices v'.
    std::vector<bool> is_copy;
    // Original vertex -> its copy's gadget id, or -1 when v is in X u Y.
    std::vector<int> copy_id;
    // For each gadget edge: source arc id in `preprocessed`, or -1 for a
    // {v, v'} pairing edge.
    std::vector<int> edge_arc;
    // Digraph after dropping arcs into X\Y and out of Y\X; arc ids here map
    // back to the input digraph through orig_arc.
    Digraph preprocessed;
    std::vector<int> orig_arc;
    std::vector<char> in_x, in_y;
};

SplitGadget build_split_graph(const Digraph& g, const std::vector<int>& X,
                              const std::vector<int>& Y);

// Maximum number of vertex-disjoint directed nontrivial paths from X to Y,
// with one optimal path system (arc ids refer to g).
std::pair<int, std::vector<DiPath>> max_nontrivial_xy_paths(const Digraph& g,
                                                            const std::vector<int>& X,
                                                            const std::vector<int>& Y);

// Maximum number of (s,t)-paths pairwise sharing only s and t, avoiding
// `forbidden` vertices, plus one optimal system. Unit vertex capacities via
// in/out splitting; arcs carry unit capacity per identity, so parallel arcs
// yield parallel length-1 paths.
std::pair<int, std::vector<DiPath>> max_internally_disjoint_paths(
    const Digraph& g, int s, int t, const std::vector<int>& forbidden = {});

// Two paths a->v and b->v sharing only v (and, when a == b, only the common
// source). Returned in (from-a, from-b) order.
std::optional<std::pair<DiPath, DiPath>> two_disjoint_paths_to(const Digraph& g, int a,
                                                               int b, int v);

} // namespace spindle

#endif
