#ifndef SPINDLE_DIGRAPH_HPP
#define SPINDLE_DIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spindle {

// Parse failure for the digraph file format; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct Arc {
    int tail = 0;
    int head = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

// Vertex-indexed multidigraph. Vertices are 0..n-1, arcs are identified by
// their position in the arc list, parallel arcs are distinct identities,
// self-loops are rejected.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int id) const { return arcs_[static_cast<size_t>(id)]; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    // Arc ids leaving / entering a vertex, in arc-id order.
    std::span<const int> out_arcs(int v) const;
    std::span<const int> in_arcs(int v) const;

    int out_degree(int v) const { return static_cast<int>(out_arcs(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_arcs(v).size()); }

    // Distinct out-/in-neighbors (parallel arcs collapsed), ascending.
    std::vector<int> out_neighbors(int v) const;
    std::vector<int> in_neighbors(int v) const;

    // Smallest arc id from u to v, or -1.
    int find_arc(int u, int v) const;
    // Number of parallel arcs from u to v.
    int multiplicity(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    // CSR-style adjacency over arc ids.
    std::vector<int> out_ids_, out_start_;
    std::vector<int> in_ids_, in_start_;
};

// File format: "n m" header, then m lines "tail head" (0-based, ASCII
// decimal, single space). '#' lines are comments.
Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& g);

// Topological ordering, or nullopt when the digraph has a directed cycle.
std::optional<std::vector<int>> topological_order(const Digraph& g);

// Directed path as a vertex sequence plus the arc identity used for each hop.
// A single vertex is a degenerate path of length 0.
struct DiPath {
    std::vector<int> vertices;
    std::vector<int> arc_ids;

    int length() const { return static_cast<int>(arc_ids.size()); }
    int first() const { return vertices.front(); }
    int last() const { return vertices.back(); }

    // Structural check against a host digraph: distinct vertices, arc ids in
    // range and matching consecutive vertex pairs.
    bool valid_in(const Digraph& g) const;
};

enum class SpindleMode {
    Subdivision,   // each requested length is a lower bound
    ExactSubgraph, // each requested length must be met exactly
};

struct SpindleSpec {
    std::vector<int> lengths; // multiset of positive path lengths
    SpindleMode mode = SpindleMode::Subdivision;

    static SpindleSpec subdivision(std::vector<int> lengths) {
        return SpindleSpec{std::move(lengths), SpindleMode::Subdivision};
    }
    static SpindleSpec exact(std::vector<int> lengths) {
        return SpindleSpec{std::move(lengths), SpindleMode::ExactSubgraph};
    }
    // (k x len)-spindle.
    static SpindleSpec uniform(int k, int len, SpindleMode mode = SpindleMode::Subdivision) {
        return SpindleSpec{std::vector<int>(static_cast<size_t>(k), len), mode};
    }
};

// k internally vertex-disjoint tail->head paths; valid witnesses share
// exactly {tail, head} pairwise and never reuse an arc identity.
struct SpindleWitness {
    int tail = -1;
    int head = -1;
    std::vector<DiPath> paths;

    std::vector<int> sorted_lengths() const;
};

// True iff w satisfies all witness invariants against g and its sorted path
// lengths match spec.lengths under the mode's comparison.
bool validate_witness(const Digraph& g, const SpindleSpec& spec, const SpindleWitness& w);

} // namespace spindle

#endif
