#include "spindle.h"

#include <cstring>
#include <string>

#include "spindle/dag_dp.hpp"
#include "spindle/effort.hpp"
#include "spindle/digraph.hpp"
#include "spindle/fpt.hpp"
#include "spindle/generators.hpp"
#include "spindle/oracle.hpp"
#include "spindle/poly.hpp"

struct sp_digraph {
    spindle::Digraph g;
};
struct sp_witness {
    spindle::SpindleWitness w;
};
struct sp_instance {
    spindle::GeneratedInstance inst;
    sp_digraph digraph_view;
    sp_witness planted_view;
};

namespace {

thread_local std::string g_last_error;

sp_status fail(sp_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Runs `fn`, mapping the library's exception idiom onto status codes.
template <class Fn>
sp_status guarded(Fn&& fn) {
    try {
        fn();
        return SP_OK;
    } catch (const spindle::ParseError& e) {
        return fail(SP_ERR_PARSE, e.what());
    } catch (const spindle::GuardError& e) {
        return fail(SP_ERR_GUARD, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SP_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SP_ERR_INTERNAL, e.what());
    }
}

spindle::SolveOptions to_options(const sp_options* opts) {
    spindle::SolveOptions o;
    if (opts) {
        o.seed = opts->seed;
        if (opts->jobs > 1) o.jobs = opts->jobs;
        if (opts->trials > 0) o.trials = opts->trials;
        if (opts->exact_short_threshold > 0) o.exact_short_threshold = opts->exact_short_threshold;
    }
    return o;
}

void deliver(std::optional<spindle::SpindleWitness>&& w, int* found, sp_witness** witness) {
    if (found) *found = w.has_value() ? 1 : 0;
    if (witness) *witness = w ? new sp_witness{std::move(*w)} : nullptr;
}

sp_instance* wrap_instance(spindle::GeneratedInstance&& inst) {
    auto* out = new sp_instance{std::move(inst), {}, {}};
    out->digraph_view.g = out->inst.digraph;
    if (out->inst.planted) out->planted_view.w = *out->inst.planted;
    return out;
}

} // namespace

extern "C" {

void sp_options_init(sp_options* opts) {
    if (!opts) return;
    opts->seed = 0;
    opts->jobs = 1;
    opts->trials = -1;
    opts->exact_short_threshold = 14;
    opts->oracle_guard = spindle::kDefaultOracleGuard;
}

const char* sp_last_error(void) { return g_last_error.c_str(); }

const char* sp_version(void) { return "1.0.0"; }

void sp_effort_reset(void) { spindle::effort::reset(); }
uint64_t sp_effort_ticks(void) { return spindle::effort::ticks(); }

sp_status sp_digraph_parse(const char* text, size_t len, sp_digraph** out) {
    if (!text || !out) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new sp_digraph{spindle::parse_digraph(std::string_view(text, len))};
    });
}

sp_status sp_digraph_create(int n, const int* tails, const int* heads, int arc_count,
                            sp_digraph** out) {
    if (!out || (arc_count > 0 && (!tails || !heads)))
        return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<spindle::Arc> arcs(static_cast<size_t>(arc_count));
        for (int i = 0; i < arc_count; ++i) arcs[static_cast<size_t>(i)] = {tails[i], heads[i]};
        *out = new sp_digraph{spindle::Digraph(n, std::move(arcs))};
    });
}

sp_status sp_digraph_serialize(const sp_digraph* g, char** out) {
    if (!g || !out) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        std::string s = spindle::serialize_digraph(g->g);
        *out = new char[s.size() + 1];
        std::memcpy(*out, s.c_str(), s.size() + 1);
    });
}

void sp_string_free(char* s) { delete[] s; }
void sp_digraph_free(sp_digraph* g) { delete g; }

int sp_digraph_vertex_count(const sp_digraph* g) { return g->g.vertex_count(); }
int sp_digraph_arc_count(const sp_digraph* g) { return g->g.arc_count(); }
int sp_digraph_arc_tail(const sp_digraph* g, int arc) { return g->g.arc(arc).tail; }
int sp_digraph_arc_head(const sp_digraph* g, int arc) { return g->g.arc(arc).head; }

int sp_digraph_topological_order(const sp_digraph* g, int* order) {
    auto topo = spindle::topological_order(g->g);
    if (!topo) return 0;
    if (order)
        for (size_t i = 0; i < topo->size(); ++i) order[i] = (*topo)[i];
    return 1;
}

sp_status sp_witness_create(int tail, int head, sp_witness** out) {
    if (!out) return fail(SP_ERR_ARGUMENT, "null argument");
    *out = new sp_witness;
    (*out)->w.tail = tail;
    (*out)->w.head = head;
    return SP_OK;
}

sp_status sp_witness_add_path(sp_witness* w, const int* vertices, int vertex_count,
                              const int* arcs, int arc_count) {
    if (!w || !vertices || vertex_count < 1 || (arc_count > 0 && !arcs) ||
        arc_count != vertex_count - 1)
        return fail(SP_ERR_ARGUMENT, "path must have one more vertex than arcs");
    spindle::DiPath p;
    p.vertices.assign(vertices, vertices + vertex_count);
    p.arc_ids.assign(arcs, arcs + arc_count);
    w->w.paths.push_back(std::move(p));
    return SP_OK;
}

void sp_witness_free(sp_witness* w) { delete w; }

int sp_witness_tail(const sp_witness* w) { return w->w.tail; }
int sp_witness_head(const sp_witness* w) { return w->w.head; }
int sp_witness_path_count(const sp_witness* w) { return static_cast<int>(w->w.paths.size()); }
int sp_witness_path_length(const sp_witness* w, int path) {
    return w->w.paths[static_cast<size_t>(path)].length();
}

sp_status sp_witness_path_vertices(const sp_witness* w, int path, int* vertices) {
    if (!w || !vertices || path < 0 || path >= sp_witness_path_count(w))
        return fail(SP_ERR_ARGUMENT, "bad path index");
    const auto& vs = w->w.paths[static_cast<size_t>(path)].vertices;
    for (size_t i = 0; i < vs.size(); ++i) vertices[i] = vs[i];
    return SP_OK;
}

sp_status sp_witness_path_arcs(const sp_witness* w, int path, int* arcs) {
    if (!w || !arcs || path < 0 || path >= sp_witness_path_count(w))
        return fail(SP_ERR_ARGUMENT, "bad path index");
    const auto& as = w->w.paths[static_cast<size_t>(path)].arc_ids;
    for (size_t i = 0; i < as.size(); ++i) arcs[i] = as[i];
    return SP_OK;
}

sp_status sp_validate_witness(const sp_digraph* g, const int* lengths, int k, int exact,
                              const sp_witness* w, int* valid) {
    if (!g || !lengths || k < 1 || !w || !valid) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        spindle::SpindleSpec spec{std::vector<int>(lengths, lengths + k),
                                  exact ? spindle::SpindleMode::ExactSubgraph
                                        : spindle::SpindleMode::Subdivision};
        *valid = spindle::validate_witness(g->g, spec, w->w) ? 1 : 0;
    });
}

sp_status sp_solve_max_k(const sp_digraph* g, int len, const sp_options* opts, int* k_star,
                         sp_witness** witness) {
    if (!g || !k_star) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto [k, w] = spindle::max_k_for_ell(g->g, len, opts ? std::max(1, opts->jobs) : 1);
        *k_star = k;
        deliver(std::move(w), nullptr, witness);
    });
}

sp_status sp_solve_total_length(const sp_digraph* g, int total, const sp_options* opts,
                                int* found, sp_witness** witness) {
    if (!g || !found) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        deliver(spindle::solve_total_length(g->g, total, to_options(opts)), found, witness);
    });
}

sp_status sp_solve_fixed_lengths(const sp_digraph* g, int len1, int len2,
                                 const sp_options* opts, int* found, sp_witness** witness) {
    if (!g || !found) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        deliver(spindle::solve_fixed_lengths(g->g, len1, len2, to_options(opts)), found, witness);
    });
}

sp_status sp_find_exact_colorcoding(const sp_digraph* g, int len1, int len2,
                                    const sp_options* opts, int* found, sp_witness** witness) {
    if (!g || !found) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        long long trials = opts && opts->trials > 0
                               ? opts->trials
                               : spindle::default_colorcoding_trials(len1 + len2);
        deliver(spindle::find_exact_spindle_colorcoding(g->g, len1, len2, trials,
                                                        opts ? opts->seed : 0),
                found, witness);
    });
}

sp_status sp_solve_dag(const sp_digraph* g, int k, int len, int* found, sp_witness** witness) {
    if (!g || !found) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] { deliver(spindle::dag_spindle(g->g, k, len), found, witness); });
}

sp_status sp_oracle_find(const sp_digraph* g, const int* lengths, int k, int exact, int guard,
                         int* found, sp_witness** witness) {
    if (!g || !lengths || k < 1 || !found) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        deliver(spindle::oracle_find(g->g, std::vector<int>(lengths, lengths + k),
                                     exact ? spindle::SpindleMode::ExactSubgraph
                                           : spindle::SpindleMode::Subdivision,
                                     guard > 0 ? guard : spindle::kDefaultOracleGuard),
                found, witness);
    });
}

sp_status sp_oracle_max_k(const sp_digraph* g, int len, int guard, int* k_star) {
    if (!g || !k_star) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *k_star =
            spindle::oracle_max_k(g->g, len, guard > 0 ? guard : spindle::kDefaultOracleGuard);
    });
}

sp_status sp_oracle_max_total(const sp_digraph* g, int guard, int* total) {
    if (!g || !total) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *total = spindle::oracle_max_total(g->g, guard > 0 ? guard : spindle::kDefaultOracleGuard);
    });
}

sp_status sp_oracle_disjoint_pack(const sp_digraph* g, int count, int guard, int* found) {
    if (!g || !found) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *found = spindle::oracle_disjoint_pack(
                     g->g, count, guard > 0 ? guard : spindle::kDefaultOracleGuard)
                     ? 1
                     : 0;
    });
}

sp_status sp_gen_longest_path(const sp_digraph* g, int k, sp_instance** out) {
    if (!g || !out) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap_instance(spindle::gen_longest_path(g->g, k)); });
}

sp_status sp_gen_3dm(int n, const int* triples, int m, int len, const int* solution,
                     int solution_len, sp_instance** out) {
    if (!out || (m > 0 && !triples)) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        spindle::ThreeDMInstance inst;
        inst.n = n;
        for (int i = 0; i < m; ++i)
            inst.triples.push_back({triples[3 * i], triples[3 * i + 1], triples[3 * i + 2]});
        std::optional<std::vector<int>> sol;
        if (solution) sol = std::vector<int>(solution, solution + solution_len);
        *out = wrap_instance(spindle::gen_3dm(inst, len, sol));
    });
}

sp_status sp_gen_hampath_total(const sp_digraph* g, int s, int t, sp_instance** out) {
    if (!g || !out) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap_instance(spindle::gen_hampath_total(g->g, s, t)); });
}

sp_status sp_gen_hampath_fixed(const sp_digraph* g, int s, int t, int len1, sp_instance** out) {
    if (!g || !out) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = wrap_instance(spindle::gen_hampath_fixed(g->g, s, t, len1)); });
}

sp_status sp_gen_triangles(int n, const int* edges, int m, const int* classes,
                           sp_instance** out) {
    if (!out || (m > 0 && !edges) || !classes) return fail(SP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        spindle::UndirectedGraph g;
        g.n = n;
        for (int i = 0; i < m; ++i) g.edges.emplace_back(edges[2 * i], edges[2 * i + 1]);
        std::vector<int> A, B, C;
        for (int v = 0; v < n; ++v) {
            if (classes[v] == 0)
                A.push_back(v);
            else if (classes[v] == 1)
                B.push_back(v);
            else if (classes[v] == 2)
                C.push_back(v);
            else
                throw std::invalid_argument("classes must map vertices to 0, 1, or 2");
        }
        *out = wrap_instance(spindle::gen_triangle_partition(g, A, B, C));
    });
}

void sp_instance_free(sp_instance* inst) { delete inst; }

const sp_digraph* sp_instance_digraph(const sp_instance* inst) { return &inst->digraph_view; }

const sp_witness* sp_instance_planted(const sp_instance* inst) {
    return inst->inst.planted ? &inst->planted_view : nullptr;
}

const char* sp_instance_reduction(const sp_instance* inst) { return inst->inst.reduction.c_str(); }

int sp_instance_target_lengths(const sp_instance* inst, int* lengths) {
    if (!inst->inst.target) return 0;
    const auto& ls = inst->inst.target->lengths;
    if (lengths)
        for (size_t i = 0; i < ls.size(); ++i) lengths[i] = ls[i];
    return static_cast<int>(ls.size());
}

int sp_instance_pack_target(const sp_instance* inst) {
    return inst->inst.pack_target.value_or(-1);
}

int sp_instance_total_target(const sp_instance* inst) {
    return inst->inst.total_target.value_or(-1);
}

int sp_instance_field_count(const sp_instance* inst) {
    return static_cast<int>(inst->inst.provenance.size());
}

const char* sp_instance_field_key(const sp_instance* inst, int i) {
    return inst->inst.provenance[static_cast<size_t>(i)].first.c_str();
}

const char* sp_instance_field_value(const sp_instance* inst, int i) {
    return inst->inst.provenance[static_cast<size_t>(i)].second.c_str();
}

} // extern "C"
