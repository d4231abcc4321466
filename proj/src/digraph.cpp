#include "spindle/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace spindle {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (const Arc& a : arcs_) {
        if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (a.tail == a.head) throw std::invalid_argument("self-loop");
    }
    const int m = arc_count();
    out_start_.assign(static_cast<size_t>(n_) + 1, 0);
    in_start_.assign(static_cast<size_t>(n_) + 1, 0);
    for (const Arc& a : arcs_) {
        ++out_start_[static_cast<size_t>(a.tail) + 1];
        ++in_start_[static_cast<size_t>(a.head) + 1];
    }
    for (int v = 0; v < n_; ++v) {
        out_start_[static_cast<size_t>(v) + 1] += out_start_[static_cast<size_t>(v)];
        in_start_[static_cast<size_t>(v) + 1] += in_start_[static_cast<size_t>(v)];
    }
    out_ids_.resize(static_cast<size_t>(m));
    in_ids_.resize(static_cast<size_t>(m));
    std::vector<int> onext(out_start_.begin(), out_start_.end() - 1);
    std::vector<int> inext(in_start_.begin(), in_start_.end() - 1);
    for (int id = 0; id < m; ++id) {
        const Arc& a = arcs_[static_cast<size_t>(id)];
        out_ids_[static_cast<size_t>(onext[static_cast<size_t>(a.tail)]++)] = id;
        in_ids_[static_cast<size_t>(inext[static_cast<size_t>(a.head)]++)] = id;
    }
}

std::span<const int> Digraph::out_arcs(int v) const {
    return {out_ids_.data() + out_start_[static_cast<size_t>(v)],
            out_ids_.data() + out_start_[static_cast<size_t>(v) + 1]};
}

std::span<const int> Digraph::in_arcs(int v) const {
    return {in_ids_.data() + in_start_[static_cast<size_t>(v)],
            in_ids_.data() + in_start_[static_cast<size_t>(v) + 1]};
}

std::vector<int> Digraph::out_neighbors(int v) const {
    std::vector<int> r;
    for (int id : out_arcs(v)) r.push_back(arcs_[static_cast<size_t>(id)].head);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

std::vector<int> Digraph::in_neighbors(int v) const {
    std::vector<int> r;
    for (int id : in_arcs(v)) r.push_back(arcs_[static_cast<size_t>(id)].tail);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

int Digraph::find_arc(int u, int v) const {
    for (int id : out_arcs(u))
        if (arcs_[static_cast<size_t>(id)].head == v) return id;
    return -1;
}

int Digraph::multiplicity(int u, int v) const {
    int c = 0;
    for (int id : out_arcs(u))
        if (arcs_[static_cast<size_t>(id)].head == v) ++c;
    return c;
}

namespace {

// Splits one line into whitespace-separated fields and parses them as ints.
bool parse_ints(std::string_view line, std::vector<long long>& out) {
    out.clear();
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        long long value = 0;
        auto [p, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc() || p != line.data() + j) return false;
        out.push_back(value);
        i = j;
    }
    return true;
}

} // namespace

Digraph parse_digraph(std::string_view text) {
    long long n = -1, m = -1;
    std::vector<Arc> arcs;
    std::vector<long long> fields;
    int line_no = 0;
    size_t pos = 0;
    bool header_seen = false;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        // Skip blank and comment lines.
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') continue;
        if (!parse_ints(line, fields)) throw ParseError(line_no, "malformed integer");
        if (!header_seen) {
            if (fields.size() != 2) throw ParseError(line_no, "expected header \"n m\"");
            n = fields[0];
            m = fields[1];
            if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
            header_seen = true;
            continue;
        }
        if (fields.size() != 2) throw ParseError(line_no, "expected arc \"tail head\"");
        long long t = fields[0], h = fields[1];
        if (t < 0 || t >= n || h < 0 || h >= n)
            throw ParseError(line_no, "vertex id out of range");
        if (t == h)
            throw ParseError(line_no, "self-loop at line " + std::to_string(line_no));
        arcs.push_back(Arc{static_cast<int>(t), static_cast<int>(h)});
        if (static_cast<long long>(arcs.size()) > m) throw ParseError(line_no, "more arcs than declared");
    }
    if (!header_seen) throw ParseError(1, "missing header");
    if (static_cast<long long>(arcs.size()) != m)
        throw ParseError(line_no, "declared " + std::to_string(m) + " arcs, found " +
                                       std::to_string(arcs.size()));
    return Digraph(static_cast<int>(n), std::move(arcs));
}

std::string serialize_digraph(const Digraph& g) {
    std::string out;
    out += std::to_string(g.vertex_count());
    out += ' ';
    out += std::to_string(g.arc_count());
    out += '\n';
    for (const Arc& a : g.arcs()) {
        out += std::to_string(a.tail);
        out += ' ';
        out += std::to_string(a.head);
        out += '\n';
    }
    return out;
}

std::optional<std::vector<int>> topological_order(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (const Arc& a : g.arcs()) ++indeg[static_cast<size_t>(a.head)];
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<int> stack;
    for (int v = n - 1; v >= 0; --v)
        if (indeg[static_cast<size_t>(v)] == 0) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int id : g.out_arcs(v)) {
            int h = g.arc(id).head;
            if (--indeg[static_cast<size_t>(h)] == 0) stack.push_back(h);
        }
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

bool DiPath::valid_in(const Digraph& g) const {
    if (vertices.empty()) return false;
    if (arc_ids.size() + 1 != vertices.size()) return false;
    std::unordered_set<int> seen;
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t i = 0; i < arc_ids.size(); ++i) {
        int id = arc_ids[i];
        if (id < 0 || id >= g.arc_count()) return false;
        const Arc& a = g.arc(id);
        if (a.tail != vertices[i] || a.head != vertices[i + 1]) return false;
    }
    return true;
}

std::vector<int> SpindleWitness::sorted_lengths() const {
    std::vector<int> ls;
    ls.reserve(paths.size());
    for (const DiPath& p : paths) ls.push_back(p.length());
    std::sort(ls.begin(), ls.end());
    return ls;
}

bool validate_witness(const Digraph& g, const SpindleSpec& spec, const SpindleWitness& w) {
    if (w.tail < 0 || w.tail >= g.vertex_count()) return false;
    if (w.head < 0 || w.head >= g.vertex_count()) return false;
    if (w.tail == w.head) return false;
    if (w.paths.empty()) return false;
    std::unordered_set<int> used_arcs;
    for (const DiPath& p : w.paths) {
        if (!p.valid_in(g)) return false;
        if (p.first() != w.tail || p.last() != w.head) return false;
        if (p.length() < 1) return false;
        for (int id : p.arc_ids)
            if (!used_arcs.insert(id).second) return false; // arc identity reuse
    }
    // Pairwise: shared vertices must be exactly {tail, head}.
    std::vector<int> owner(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < w.paths.size(); ++i) {
        for (int v : w.paths[i].vertices) {
            if (v == w.tail || v == w.head) continue;
            if (owner[static_cast<size_t>(v)] != -1) return false;
            owner[static_cast<size_t>(v)] = static_cast<int>(i);
        }
    }
    // Length bijection under sorted order.
    if (spec.lengths.size() != w.paths.size()) return false;
    for (int len : spec.lengths)
        if (len < 1) return false;
    std::vector<int> want(spec.lengths);
    std::sort(want.begin(), want.end());
    std::vector<int> have = w.sorted_lengths();
    for (size_t i = 0; i < want.size(); ++i) {
        if (spec.mode == SpindleMode::Subdivision) {
            if (have[i] < want[i]) return false;
        } else {
            if (have[i] != want[i]) return false;
        }
    }
    return true;
}

} // namespace spindle
