#include "spindle/fpt.hpp"

#include <algorithm>
#include <set>

namespace spindle {

namespace {

bool sorted_contains(const std::vector<int>& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

std::vector<int> sorted_insert(const std::vector<int>& s, int v) {
    std::vector<int> out;
    out.reserve(s.size() + 1);
    auto it = std::lower_bound(s.begin(), s.end(), v);
    out.insert(out.end(), s.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, s.end());
    return out;
}

// Keeps only the entries whose sets survive the trim, preserving witnesses.
template <class Family>
void trim_entries(Family& fam, int universe, int p, int q) {
    if (fam.entries.empty()) return;
    SetFamily f;
    f.universe_size = universe;
    f.p = p;
    for (const auto& e : fam.entries) f.members.push_back(e.set);
    TrimContext ctx = make_trim_context(universe, p + q);
    SetFamily kept = trim(f, q, ctx);
    std::set<std::vector<int>> keep(kept.members.begin(), kept.members.end());
    typename std::remove_reference_t<decltype(fam.entries)> out;
    for (auto& e : fam.entries) {
        auto it = keep.find(e.set);
        if (it != keep.end()) {
            out.push_back(std::move(e));
            keep.erase(it); // one witness per retained set
        }
    }
    fam.entries = std::move(out);
}

} // namespace

std::map<int, PathFamily> compute_path_families(const Digraph& g, int start, int p, int q) {
    if (p < 1) throw std::invalid_argument("path vertex count must be at least 1");
    if (q < 0) throw std::invalid_argument("q must be non-negative");
    const int n = g.vertex_count();
    if (start < 0 || start >= n) throw std::invalid_argument("start vertex out of range");

    std::map<int, PathFamily> level;
    {
        PathFamily base;
        base.start = start;
        base.finish = start;
        base.p = 1;
        DiPath trivial;
        trivial.vertices.push_back(start);
        base.entries.push_back({{start}, std::move(trivial)});
        level.emplace(start, std::move(base));
    }
    for (int j = 1; j < p; ++j) {
        // Extend every level-j entry along every usable out-arc, bucket by
        // the new endpoint, dedup by set (first witness wins).
        std::map<int, PathFamily> next;
        std::map<int, std::set<std::vector<int>>> seen;
        for (const auto& [endv, fam] : level) {
            for (const auto& e : fam.entries) {
                for (int id : g.out_arcs(endv)) {
                    const int to = g.arc(id).head;
                    if (sorted_contains(e.set, to)) continue;
                    std::vector<int> nset = sorted_insert(e.set, to);
                    auto& bucket_seen = seen[to];
                    if (!bucket_seen.insert(nset).second) continue;
                    PathFamily& fam_to = next[to];
                    if (fam_to.entries.empty()) {
                        fam_to.start = start;
                        fam_to.finish = to;
                        fam_to.p = j + 1;
                    }
                    DiPath w = e.witness;
                    w.arc_ids.push_back(id);
                    w.vertices.push_back(to);
                    fam_to.entries.push_back({std::move(nset), std::move(w)});
                }
            }
        }
        // Schedule: level j+1 must be (q + p - (j+1))-representative.
        const int level_q = q + p - (j + 1);
        for (auto& [endv, fam] : next) trim_entries(fam, n, j + 1, level_q);
        level = std::move(next);
    }
    return level;
}

MergedFamily merge_families(const PathFamily& f1, const PathFamily& f2, int q,
                            const TrimContext& ctx) {
    if (f1.start != f2.start) throw std::invalid_argument("families must share the start vertex");
    MergedFamily m;
    m.start = f1.start;
    m.end1 = f1.finish;
    m.end2 = f2.finish;
    m.p1 = f1.p;
    m.p2 = f2.p;
    std::set<std::vector<int>> seen;
    for (const auto& a : f1.entries) {
        for (const auto& b : f2.entries) {
            // Union must intersect exactly in the shared start vertex.
            std::vector<int> inter;
            std::set_intersection(a.set.begin(), a.set.end(), b.set.begin(), b.set.end(),
                                  std::back_inserter(inter));
            if (inter.size() != 1 || inter[0] != m.start) continue;
            std::vector<int> uni;
            std::set_union(a.set.begin(), a.set.end(), b.set.begin(), b.set.end(),
                           std::back_inserter(uni));
            if (!seen.insert(uni).second) continue;
            m.entries.push_back({std::move(uni), a.witness, b.witness});
        }
    }
    if (!m.entries.empty()) {
        const int p = m.p1 + m.p2 - 1;
        if (ctx.rank != p + q) throw std::invalid_argument("context rank must equal p + q");
        SetFamily f;
        f.universe_size = static_cast<int>(ctx.generator_points.size());
        f.p = p;
        for (const auto& e : m.entries) f.members.push_back(e.set);
        SetFamily kept = trim(f, q, ctx);
        std::set<std::vector<int>> keep(kept.members.begin(), kept.members.end());
        std::vector<MergedFamily::Entry> out;
        for (auto& e : m.entries) {
            auto it = keep.find(e.set);
            if (it != keep.end()) {
                out.push_back(std::move(e));
                keep.erase(it);
            }
        }
        m.entries = std::move(out);
    }
    return m;
}

} // namespace spindle
