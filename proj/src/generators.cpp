#include "spindle/generators.hpp"

#include <algorithm>
#include <set>

namespace spindle {

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

} // namespace

GeneratedInstance gen_longest_path(const Digraph& g, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2 (k = 1 is the identity reduction)");
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("source digraph must be non-empty");
    std::vector<Arc> arcs = g.arcs();
    const int total = n + (k - 1) * (n + 1);
    // Block i holds s_i, its n-1 interior path vertices, then t_i.
    for (int i = 0; i < k - 1; ++i) {
        const int s = n + i * (n + 1);
        const int t = s + n;
        for (int v = 0; v < n; ++v) arcs.push_back(Arc{v, s});
        for (int j = 0; j < n; ++j) arcs.push_back(Arc{s + j, s + j + 1});
        for (int v = 0; v < n; ++v) arcs.push_back(Arc{t, v});
    }
    GeneratedInstance out;
    out.digraph = Digraph(total, std::move(arcs));
    out.reduction = "longest-path";
    out.provenance = {
        {"k", std::to_string(k)},
        {"source_vertices", std::to_string(n)},
        {"relation",
         "a longest path of length L in the source yields a (k x L)-spindle subdivision; "
         "conversely any (k x len)-spindle subdivision whose endpoints are source vertices "
         "forces a source path of length at least len"},
    };
    return out;
}

GeneratedInstance gen_3dm(const ThreeDMInstance& inst, int len,
                          const std::optional<std::vector<int>>& solution) {
    if (len < 4) throw std::invalid_argument("len must be at least 4");
    const int n = inst.n, m = static_cast<int>(inst.triples.size());
    if (n < 1) throw std::invalid_argument("3DM instance must have n >= 1");
    for (const auto& t : inst.triples)
        for (int x : t)
            if (x < 0 || x >= n) throw std::invalid_argument("triple index out of range");

    // Layout: a_i = i, b_i = n+i, c_i = 2n+i, gadget j occupies
    // 3n+6j .. 3n+6j+5 as x0,x1,y0,y1,z0,z1, then s and t, then the
    // subdivision chains of the s-arcs in construction order.
    const int base = 3 * n + 6 * m;
    const int s = base, t = base + 1;
    int next_fresh = base + 2;
    std::vector<Arc> arcs;
    auto x0 = [&](int j) { return 3 * n + 6 * j; };
    auto x1 = [&](int j) { return 3 * n + 6 * j + 1; };
    auto y0 = [&](int j) { return 3 * n + 6 * j + 2; };
    auto y1 = [&](int j) { return 3 * n + 6 * j + 3; };
    auto z0 = [&](int j) { return 3 * n + 6 * j + 4; };
    auto z1 = [&](int j) { return 3 * n + 6 * j + 5; };
    for (int j = 0; j < m; ++j) {
        const auto& [ia, ib, ic] = inst.triples[static_cast<size_t>(j)];
        const int a = ia, b = n + ib, c = 2 * n + ic;
        arcs.push_back(Arc{x0(j), x1(j)});
        arcs.push_back(Arc{x1(j), a});
        arcs.push_back(Arc{x1(j), y0(j)});
        arcs.push_back(Arc{y0(j), y1(j)});
        arcs.push_back(Arc{y1(j), b});
        arcs.push_back(Arc{x0(j), z0(j)});
        arcs.push_back(Arc{z0(j), z1(j)});
        arcs.push_back(Arc{z1(j), c});
    }
    // s reaches every earlier vertex through a chain of len-4 fresh
    // vertices; every earlier vertex reaches t directly.
    std::vector<std::vector<int>> chain_of(static_cast<size_t>(base));
    for (int v = 0; v < base; ++v) {
        int prev = s;
        for (int d = 0; d < len - 4; ++d) {
            const int fresh = next_fresh++;
            chain_of[static_cast<size_t>(v)].push_back(fresh);
            arcs.push_back(Arc{prev, fresh});
            prev = fresh;
        }
        arcs.push_back(Arc{prev, v});
    }
    for (int v = 0; v < base; ++v) arcs.push_back(Arc{v, t});

    GeneratedInstance out;
    out.digraph = Digraph(next_fresh, std::move(arcs));
    const int kstar = n + 2 * m;
    out.target = SpindleSpec::uniform(kstar, len);
    out.reduction = "3dm";
    out.provenance = {
        {"n", std::to_string(n)},
        {"m", std::to_string(m)},
        {"len", std::to_string(len)},
        {"k_star", std::to_string(kstar)},
        {"relation", "the 3DM instance has a solution iff the output contains a "
                     "(k_star x len)-spindle subdivision"},
    };

    if (solution) {
        std::set<int> chosen(solution->begin(), solution->end());
        if (chosen.size() != solution->size() || static_cast<int>(chosen.size()) != n)
            throw std::invalid_argument("solution must select exactly n distinct triples");
        std::set<int> used_a, used_b, used_c;
        for (int j : chosen) {
            if (j < 0 || j >= m) throw std::invalid_argument("solution triple index out of range");
            const auto& [ia, ib, ic] = inst.triples[static_cast<size_t>(j)];
            if (!used_a.insert(ia).second || !used_b.insert(ib).second || !used_c.insert(ic).second)
                throw std::invalid_argument("solution triples are not pairwise disjoint");
        }
        const Digraph& d = out.digraph;
        auto wrap = [&](int w1, int w2, int w3) {
            DiPath p;
            p.vertices.push_back(s);
            int prev = s;
            for (int fresh : chain_of[static_cast<size_t>(w1)]) {
                p.arc_ids.push_back(d.find_arc(prev, fresh));
                p.vertices.push_back(fresh);
                prev = fresh;
            }
            for (int w : {w1, w2, w3}) {
                p.arc_ids.push_back(d.find_arc(prev, w));
                p.vertices.push_back(w);
                prev = w;
            }
            p.arc_ids.push_back(d.find_arc(w3, t));
            p.vertices.push_back(t);
            return p;
        };
        SpindleWitness w;
        w.tail = s;
        w.head = t;
        for (int j = 0; j < m; ++j) {
            const auto& [ia, ib, ic] = inst.triples[static_cast<size_t>(j)];
            if (chosen.count(j)) {
                w.paths.push_back(wrap(x0(j), x1(j), ia));
                w.paths.push_back(wrap(y0(j), y1(j), n + ib));
                w.paths.push_back(wrap(z0(j), z1(j), 2 * n + ic));
            } else {
                w.paths.push_back(wrap(x1(j), y0(j), y1(j)));
                w.paths.push_back(wrap(x0(j), z0(j), z1(j)));
            }
        }
        if (!validate_witness(out.digraph, *out.target, w))
            throw std::logic_error("planted 3DM witness failed validation");
        out.planted = std::move(w);
        out.provenance.emplace_back("solution", join_ints(*solution));
    }
    return out;
}

GeneratedInstance gen_hampath_total(const Digraph& g, int s, int t) {
    const int n = g.vertex_count();
    if (s == t) throw std::invalid_argument("s and t must differ");
    if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("endpoint out of range");
    std::vector<Arc> arcs;
    for (const Arc& a : g.arcs())
        if (a.head != s && a.tail != t) arcs.push_back(a);
    const int fresh = n;
    arcs.push_back(Arc{s, fresh});
    arcs.push_back(Arc{fresh, t});
    GeneratedInstance out;
    out.digraph = Digraph(n + 1, std::move(arcs));
    out.total_target = n + 1;
    out.reduction = "hampath-total";
    out.provenance = {
        {"s", std::to_string(s)},
        {"t", std::to_string(t)},
        {"total", std::to_string(n + 1)},
        {"relation", "the source has a Hamiltonian (s,t)-path iff the output contains a "
                     "2-spindle of total length n + 1"},
    };
    return out;
}

GeneratedInstance gen_hampath_fixed(const Digraph& g, int s, int t, int len1) {
    const int n = g.vertex_count();
    if (s == t) throw std::invalid_argument("s and t must differ");
    if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("endpoint out of range");
    if (len1 < 1) throw std::invalid_argument("len1 must be positive");
    std::vector<Arc> arcs;
    for (const Arc& a : g.arcs()) {
        if (a.head == s || a.tail == t) continue;
        if (a.tail == s && a.head == t) continue;
        arcs.push_back(a);
    }
    int prev = s;
    for (int d = 0; d < len1 - 1; ++d) {
        arcs.push_back(Arc{prev, n + d});
        prev = n + d;
    }
    arcs.push_back(Arc{prev, t});
    GeneratedInstance out;
    out.digraph = Digraph(n + len1 - 1, std::move(arcs));
    out.target = SpindleSpec::subdivision({len1, n - 1});
    out.reduction = "hampath-fixed";
    out.provenance = {
        {"s", std::to_string(s)},
        {"t", std::to_string(t)},
        {"len1", std::to_string(len1)},
        {"relation", "the source has a Hamiltonian (s,t)-path iff the output contains a "
                     "(len1, n-1)-spindle subdivision"},
    };
    return out;
}

GeneratedInstance gen_triangle_partition(const UndirectedGraph& g, const std::vector<int>& A,
                                         const std::vector<int>& B, const std::vector<int>& C) {
    std::vector<int> cls(static_cast<size_t>(g.n), -1);
    auto assign = [&](const std::vector<int>& part, int c) {
        for (int v : part) {
            if (v < 0 || v >= g.n) throw std::invalid_argument("class vertex out of range");
            if (cls[static_cast<size_t>(v)] != -1) throw std::invalid_argument("classes overlap");
            cls[static_cast<size_t>(v)] = c;
        }
    };
    assign(A, 0);
    assign(B, 1);
    assign(C, 2);
    std::vector<Arc> arcs;
    for (const auto& [u, v] : g.edges) {
        const int cu = cls[static_cast<size_t>(u)], cv = cls[static_cast<size_t>(v)];
        if (cu == -1 || cv == -1) throw std::invalid_argument("edge endpoint has no class");
        if (cu == cv) throw std::invalid_argument("edge inside a class");
        arcs.push_back(cu < cv ? Arc{u, v} : Arc{v, u});
    }
    GeneratedInstance out;
    out.digraph = Digraph(g.n, std::move(arcs));
    out.pack_target = static_cast<int>(g.edges.size()) / 3;
    out.reduction = "triangles";
    out.provenance = {
        {"edges", std::to_string(g.edges.size())},
        {"divisible_by_3", g.edges.size() % 3 == 0 ? "true" : "false"},
        {"relation", "the edges of the source partition into triangles iff the output "
                     "contains |E|/3 vertex-disjoint (2 x 1)-spindle subdivisions"},
    };
    return out;
}

} // namespace spindle
