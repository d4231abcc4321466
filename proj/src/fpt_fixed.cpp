#include "spindle/fpt.hpp"

#include <algorithm>
#include <set>

#include "fpt_internal.hpp"
#include "spindle/disjoint_paths.hpp"

namespace spindle {

namespace {

using detail::reachable_from;
using detail::splice;

// Deterministic exact-subgraph search used by the short-spindle phase at
// small scale: one DFS for a length-a u->v path, a nested DFS for a
// disjoint length-b one.
class ExactPairFinder {
public:
    ExactPairFinder(const Digraph& g, int a, int b)
        : g_(g), a_(a), b_(b), used_(static_cast<size_t>(g.vertex_count()), 0) {}

    std::optional<SpindleWitness> find() {
        const int n = g_.vertex_count();
        if (n < a_ + b_) return std::nullopt;
        for (tail_ = 0; tail_ < n; ++tail_) {
            if (g_.out_degree(tail_) < 2) continue;
            for (head_ = 0; head_ < n; ++head_) {
                if (head_ == tail_ || g_.in_degree(head_) < 2) continue;
                DiPath p;
                p.vertices.push_back(tail_);
                if (walk_first(p)) {
                    SpindleWitness w;
                    w.tail = tail_;
                    w.head = head_;
                    w.paths = {first_, second_};
                    if (!validate_witness(g_, SpindleSpec::exact({a_, b_}), w))
                        throw std::logic_error("exact search produced an invalid witness");
                    return w;
                }
            }
        }
        return std::nullopt;
    }

private:
    const Digraph& g_;
    int a_, b_;
    int tail_ = 0, head_ = 0;
    std::vector<char> used_;
    DiPath first_, second_;

    bool walk_first(DiPath& p) {
        const int cur = p.vertices.back();
        for (int id : g_.out_arcs(cur)) {
            const int nxt = g_.arc(id).head;
            if (nxt == head_) {
                if (p.length() + 1 != a_) continue;
                p.arc_ids.push_back(id);
                p.vertices.push_back(nxt);
                first_ = p;
                DiPath q;
                q.vertices.push_back(tail_);
                bool ok = walk_second(q, id);
                p.arc_ids.pop_back();
                p.vertices.pop_back();
                if (ok) return true;
                continue;
            }
            if (p.length() + 1 >= a_) continue;
            if (nxt == tail_ || used_[static_cast<size_t>(nxt)]) continue;
            used_[static_cast<size_t>(nxt)] = 1;
            p.arc_ids.push_back(id);
            p.vertices.push_back(nxt);
            bool ok = walk_first(p);
            p.arc_ids.pop_back();
            p.vertices.pop_back();
            used_[static_cast<size_t>(nxt)] = 0;
            if (ok) return true;
        }
        return false;
    }

    bool walk_second(DiPath& q, int first_final_arc) {
        const int cur = q.vertices.back();
        for (int id : g_.out_arcs(cur)) {
            const int nxt = g_.arc(id).head;
            if (nxt == head_) {
                if (q.length() + 1 != b_ || id == first_final_arc) continue;
                q.arc_ids.push_back(id);
                q.vertices.push_back(nxt);
                second_ = q;
                return true;
            }
            if (q.length() + 1 >= b_) continue;
            if (nxt == tail_ || used_[static_cast<size_t>(nxt)]) continue;
            used_[static_cast<size_t>(nxt)] = 1;
            q.arc_ids.push_back(id);
            q.vertices.push_back(nxt);
            bool ok = walk_second(q, first_final_arc);
            q.arc_ids.pop_back();
            q.vertices.pop_back();
            used_[static_cast<size_t>(nxt)] = 0;
            if (ok) return true;
        }
        return false;
    }
};

// Directed paths from u on exactly `count` vertices avoiding `avoid`
// (except u itself).
void enumerate_prefixes(const Digraph& g, int u, int count, const std::vector<char>& avoid,
                        std::vector<DiPath>& out) {
    DiPath p;
    p.vertices.push_back(u);
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    used[static_cast<size_t>(u)] = 1;
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(p.vertices.size()) == count) {
            out.push_back(p);
            return;
        }
        for (int id : g.out_arcs(p.vertices.back())) {
            const int nxt = g.arc(id).head;
            if (used[static_cast<size_t>(nxt)] || avoid[static_cast<size_t>(nxt)]) continue;
            used[static_cast<size_t>(nxt)] = 1;
            p.vertices.push_back(nxt);
            p.arc_ids.push_back(id);
            self(self);
            p.arc_ids.pop_back();
            p.vertices.pop_back();
            used[static_cast<size_t>(nxt)] = 0;
        }
    };
    dfs(dfs);
}

} // namespace

std::optional<SpindleWitness> solve_fixed_lengths(const Digraph& g, int len1, int len2,
                                                  const SolveOptions& opts) {
    if (len1 < 1 || len1 > len2) throw std::invalid_argument("need 1 <= len1 <= len2");
    const int n = g.vertex_count();
    if (n < len1 + len2) return std::nullopt;

    const SpindleSpec target = SpindleSpec::subdivision({len1, len2});

    if (len1 == 1 && len2 == 1) {
        // Subdividing a (1,1)-spindle yields an arbitrary 2-spindle, so a
        // flow sweep over endpoint pairs decides this case outright.
        auto w = detail::any_two_disjoint_paths(g);
        if (w && !validate_witness(g, target, *w))
            throw std::logic_error("fixed-lengths solver produced an invalid witness");
        return w;
    }

    // Short phase: spindles whose paths both have at most 2*len2 vertices.
    // Sweep the exact length pairs such a spindle can have.
    const bool exhaustive_short = n <= opts.exact_short_threshold;
    int pair_index = 0;
    for (int a = len1; a <= 2 * len2; ++a) {
        for (int b = std::max(a, len2); b <= 2 * len2; ++b, ++pair_index) {
            if (a + b > n) continue;
            std::optional<SpindleWitness> w;
            if (exhaustive_short) {
                w = ExactPairFinder(g, a, b).find();
            } else {
                const long long trials =
                    opts.trials > 0 ? opts.trials : default_colorcoding_trials(a + b);
                w = find_exact_spindle_colorcoding(g, a, b, trials,
                                                   opts.seed + 0x9e37 * static_cast<std::uint64_t>(pair_index));
            }
            if (w) {
                if (!validate_witness(g, target, *w))
                    throw std::logic_error("fixed-lengths solver produced an invalid witness");
                return w;
            }
        }
    }

    // Long phase: some path has more than 2*len2 vertices, which requires
    // n > 2*len2; the short phase was exhaustive otherwise.
    if (n <= 2 * len2) return std::nullopt;

    const int q = len1 + len2 - 1;
    std::set<std::vector<int>> failed_flow;
    for (int u = 0; u < n; ++u) {
        if (g.out_degree(u) < 2) continue;
        // Candidate first-len2-vertex prefixes of the long path.
        auto fams = compute_path_families(g, u, len2, q);
        for (const auto& [uprime, fam] : fams) {
            for (const auto& entry : fam.entries) {
                std::vector<char> in_set(static_cast<size_t>(n), 0);
                for (int w : entry.set) in_set[static_cast<size_t>(w)] = 1;
                // Guessed first len1 vertices of the short path, disjoint
                // from the candidate set except at u.
                std::vector<char> avoid = in_set;
                avoid[static_cast<size_t>(u)] = 0;
                std::vector<DiPath> prefixes;
                enumerate_prefixes(g, u, len1, avoid, prefixes);
                for (const DiPath& prefix : prefixes) {
                    const int a_src = prefix.vertices.back();
                    std::vector<char> removed = in_set;
                    removed[static_cast<size_t>(uprime)] = 0;
                    for (size_t i = 1; i + 1 < prefix.vertices.size(); ++i)
                        removed[static_cast<size_t>(prefix.vertices[i])] = 1;
                    removed[static_cast<size_t>(a_src)] = 0;
                    FilteredDigraph sub = filter_arcs(g, [&](int id) {
                        const Arc& arc = g.arc(id);
                        return !removed[static_cast<size_t>(arc.tail)] &&
                               !removed[static_cast<size_t>(arc.head)];
                    });
                    std::vector<char> r1 = reachable_from(sub.graph, a_src);
                    std::vector<char> r2 = reachable_from(sub.graph, uprime);
                    for (int v = 0; v < n; ++v) {
                        if (v == a_src || v == uprime || in_set[static_cast<size_t>(v)])
                            continue;
                        if (!r1[static_cast<size_t>(v)] || !r2[static_cast<size_t>(v)]) continue;
                        bool in_prefix = false;
                        for (int w : prefix.vertices)
                            if (w == v) in_prefix = true;
                        if (in_prefix) continue;
                        std::vector<int> key = entry.set;
                        key.push_back(-1);
                        key.insert(key.end(), prefix.vertices.begin(), prefix.vertices.end());
                        key.push_back(-1);
                        key.push_back(v);
                        if (failed_flow.count(key)) continue;
                        auto flow = two_disjoint_paths_to(sub.graph, a_src, uprime, v);
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
                        w.paths = {splice(prefix, flow->first), splice(entry.witness, flow->second)};
                        if (!validate_witness(g, target, w))
                            throw std::logic_error(
                                "fixed-lengths solver produced an invalid witness");
                        return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace spindle
