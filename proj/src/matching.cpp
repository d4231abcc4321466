#include "spindle/disjoint_paths.hpp"

#include <algorithm>
#include <queue>

#include "spindle/effort.hpp"

namespace spindle {

namespace {

// Edmonds' blossom algorithm over an adjacency-list view. Standard
// contraction scheme: grow an alternating BFS forest from each free vertex,
// contract odd cycles at their base, augment when two even vertices meet.
class Blossom {
public:
    explicit Blossom(const UndirectedGraph& g) : n_(g.n), match_(g.n, -1) {
        adj_.resize(static_cast<size_t>(n_));
        for (const auto& [u, v] : g.edges) {
            adj_[static_cast<size_t>(u)].push_back(v);
            adj_[static_cast<size_t>(v)].push_back(u);
        }
    }

    const std::vector<int>& solve() {
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<size_t>(v)] == -1) augment_from(v);
        return match_;
    }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        for (;;) {
            a = base_[static_cast<size_t>(a)];
            seen[static_cast<size_t>(a)] = 1;
            if (match_[static_cast<size_t>(a)] == -1) break;
            a = parent_[static_cast<size_t>(match_[static_cast<size_t>(a)])];
        }
        for (;;) {
            b = base_[static_cast<size_t>(b)];
            if (seen[static_cast<size_t>(b)]) return b;
            b = parent_[static_cast<size_t>(match_[static_cast<size_t>(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<size_t>(v)] != b) {
            int mv = match_[static_cast<size_t>(v)];
            blossom_[static_cast<size_t>(base_[static_cast<size_t>(v)])] = 1;
            blossom_[static_cast<size_t>(base_[static_cast<size_t>(mv)])] = 1;
            parent_[static_cast<size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<size_t>(mv)];
        }
    }

    int find_augmenting(int root) {
        effort::bump();
        used_.assign(static_cast<size_t>(n_), 0);
        parent_.assign(static_cast<size_t>(n_), -1);
        base_.resize(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) base_[static_cast<size_t>(i)] = i;
        used_[static_cast<size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[static_cast<size_t>(v)]) {
                if (base_[static_cast<size_t>(v)] == base_[static_cast<size_t>(to)] ||
                    match_[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<size_t>(to)] != -1 &&
                     parent_[static_cast<size_t>(match_[static_cast<size_t>(to)])] != -1)) {
                    // Odd cycle: contract the blossom at its base.
                    int b = lowest_common_base(v, to);
                    blossom_.assign(static_cast<size_t>(n_), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[static_cast<size_t>(base_[static_cast<size_t>(i)])]) {
                            base_[static_cast<size_t>(i)] = b;
                            if (!used_[static_cast<size_t>(i)]) {
                                used_[static_cast<size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[static_cast<size_t>(to)] == -1) {
                    parent_[static_cast<size_t>(to)] = v;
                    if (match_[static_cast<size_t>(to)] == -1) return to;
                    used_[static_cast<size_t>(match_[static_cast<size_t>(to)])] = 1;
                    q.push(match_[static_cast<size_t>(to)]);
                }
            }
        }
        return -1;
    }

    void augment_from(int root) {
        int v = find_augmenting(root);
        if (v == -1) return;
        while (v != -1) {
            int pv = parent_[static_cast<size_t>(v)];
            int ppv = match_[static_cast<size_t>(pv)];
            match_[static_cast<size_t>(v)] = pv;
            match_[static_cast<size_t>(pv)] = v;
            v = ppv;
        }
    }
};

} // namespace

Matching max_matching(const UndirectedGraph& g) {
    for (const auto& [u, v] : g.edges) {
        if (u < 0 || u >= g.n || v < 0 || v >= g.n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop edge");
    }
    Blossom solver(g);
    const std::vector<int>& mate = solver.solve();
    // Map mate pairs back to edge ids; for parallel edges the first one wins.
    Matching m;
    std::vector<char> taken(static_cast<size_t>(g.n), 0);
    for (int id = 0; id < static_cast<int>(g.edges.size()); ++id) {
        auto [u, v] = g.edges[static_cast<size_t>(id)];
        if (mate[static_cast<size_t>(u)] == v && !taken[static_cast<size_t>(u)] &&
            !taken[static_cast<size_t>(v)]) {
            taken[static_cast<size_t>(u)] = taken[static_cast<size_t>(v)] = 1;
            m.edge_ids.push_back(id);
        }
    }
    return m;
}

} // namespace spindle
