#ifndef SPINDLE_GENERATORS_HPP
#define SPINDLE_GENERATORS_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spindle/digraph.hpp"
#include "spindle/disjoint_paths.hpp"

namespace spindle {

// Output of a reduction generator: the instance digraph, the target it
// encodes, an optional planted certificate, and a record of where it came
// from (key/value pairs, CLI-serializable).
struct GeneratedInstance {
    Digraph digraph;
    std::optional<SpindleSpec> target;
    std::optional<int> pack_target;  // vertex-disjoint (2x1)-spindle count
    std::optional<int> total_target; // required total length of a 2-spindle
    std::optional<SpindleWitness> planted;
    std::string reduction;
    std::vector<std::pair<std::string, std::string>> provenance;
};

struct ThreeDMInstance {
    int n = 0; // |A| = |B| = |C|
    std::vector<std::array<int, 3>> triples;
};

// Longest Path -> Max (k x *)-Spindle Subdivision: adds k-1 bypass paths of
// n arcs each, fully connected to the original vertices. The longest path
// length of g equals the largest len with a (k x len)-spindle subdivision.
GeneratedInstance gen_longest_path(const Digraph& g, int k);

// 3-Dimensional Matching -> Max (* x len)-Spindle Subdivision (len >= 4):
// per-triple gadgets between a global source and sink, source arcs
// subdivided len-4 times. The instance is a yes-instance iff the output
// contains a ((n + 2m) x len)-spindle subdivision. A planted witness is
// built when a solution (triple index set) is supplied.
GeneratedInstance gen_3dm(const ThreeDMInstance& inst, int len,
                          const std::optional<std::vector<int>>& solution = std::nullopt);

// Hamiltonian (s,t)-Path -> total-length 2-spindle with total n + 1.
GeneratedInstance gen_hampath_total(const Digraph& g, int s, int t);

// Hamiltonian (s,t)-Path -> (len1, n-1)-spindle subdivision.
GeneratedInstance gen_hampath_fixed(const Digraph& g, int s, int t, int len1);

// Triangle edge partition -> |E|/3 vertex-disjoint (2x1)-spindle
// subdivisions, by orienting the tripartite graph A->B->C, A->C.
GeneratedInstance gen_triangle_partition(const UndirectedGraph& g, const std::vector<int>& A,
                                         const std::vector<int>& B, const std::vector<int>& C);

} // namespace spindle

#endif
