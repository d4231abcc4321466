#ifndef SPINDLE_DAG_DP_HPP
#define SPINDLE_DAG_DP_HPP

#include <optional>
#include <vector>

#include "spindle/digraph.hpp"

namespace spindle {

// Vertex-split transform: each vertex u becomes u+ -> u-, each arc (u,v)
// becomes (u-, v+). Arc-disjoint paths in the result are internally
// vertex-disjoint, which is what the DAG spindle DP relies on.
struct SplitDigraph {
    Digraph h;                 // 2n vertices, n + m arcs
    int source_vertices = 0;   // n of the source digraph

    int plus_of(int u) const { return 2 * u; }
    int minus_of(int u) const { return 2 * u + 1; }
    bool is_split_arc(int h_arc) const { return h_arc < source_vertices; }
    // Valid for split arcs: the vertex whose pair the arc joins.
    int split_vertex(int h_arc) const { return h_arc; }
    // Valid for the rest: the source arc id.
    int original_arc(int h_arc) const { return h_arc - source_vertices; }
};

SplitDigraph split_transform(const Digraph& g);

// Decides (with witness) whether an acyclic digraph contains a subdivision
// of a (k x len)-spindle, via the table
//   P_x(e_1, t_1, ..., e_k, t_k) = true iff k arc-disjoint paths from x end
//   at the listed arcs with at least the listed lengths,
// evaluated over the split digraph along a topological order. Throws
// std::invalid_argument when g has a directed cycle.
std::optional<SpindleWitness> dag_spindle(const Digraph& g, int k, int len);

} // namespace spindle

#endif
