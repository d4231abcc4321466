// Acceptance suite: runs the full battery of correctness criteria and
// prints one PASS/FAIL line per criterion, with wall-clock budgets
// enforced. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "brute.hpp"
#include "spindle/dag_dp.hpp"
#include "spindle/digraph.hpp"
#include "spindle/disjoint_paths.hpp"
#include "spindle/fpt.hpp"
#include "spindle/generators.hpp"
#include "spindle/oracle.hpp"
#include "spindle/poly.hpp"
#include "spindle/repsets.hpp"
#include "test_util.hpp"

using namespace spindle;
using Clock = std::chrono::steady_clock;

namespace {

struct Hygiene {
    long long checked = 0;
    long long failed = 0;

    bool check(const Digraph& g, const SpindleSpec& spec, const SpindleWitness& w) {
        ++checked;
        const bool ok = validate_witness(g, spec, w);
        if (!ok) ++failed;
        return ok;
    }
} hygiene;

struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<bool(std::string&)> body;
};

// --- criterion 1: Fig. 1 battery -----------------------------------------

bool fig1_battery(std::string& detail) {
    const Digraph fig1 = testutil::fig1_digraph();
    bool ok = true;

    auto [k2, w2] = max_k_for_ell(fig1, 2);
    ok &= k2 == 3 && w2 && hygiene.check(fig1, SpindleSpec::uniform(3, 2), *w2);
    auto [k3, w3] = max_k_for_ell(fig1, 3);
    ok &= k3 == 2 && w3 && hygiene.check(fig1, SpindleSpec::uniform(2, 3), *w3);

    auto d32 = dag_spindle(fig1, 3, 2);
    ok &= d32.has_value() && hygiene.check(fig1, SpindleSpec::uniform(3, 2), *d32);
    ok &= !dag_spindle(fig1, 3, 3).has_value();

    auto t7 = solve_total_length(fig1, 7);
    ok &= t7.has_value() && hygiene.check(fig1, SpindleSpec::subdivision({3, 4}), *t7);
    ok &= !solve_total_length(fig1, 8).has_value();

    auto f34 = solve_fixed_lengths(fig1, 3, 4);
    ok &= f34.has_value() && hygiene.check(fig1, SpindleSpec::subdivision({3, 4}), *f34);
    ok &= !solve_fixed_lengths(fig1, 4, 4).has_value();

    detail = "max-k, DAG DP, total-length, fixed-lengths on the (4,3,2)-spindle";
    return ok;
}

// --- criterion 2: polynomial solvers vs oracle ----------------------------

bool poly_vs_oracle(std::string& detail) {
    std::mt19937_64 rng(20240001);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const int n = 4 + static_cast<int>(rng() % 7);
        Digraph g = testutil::random_digraph_swept(rng, n);
        for (int len = 1; len <= 3; ++len) {
            auto [k, w] = max_k_for_ell(g, len);
            if (k != oracle_max_k(g, len)) {
                detail = "mismatch at instance " + std::to_string(i) +
                         ", len " + std::to_string(len);
                return false;
            }
            if (w && !hygiene.check(g, SpindleSpec::uniform(k, len), *w)) return false;
            ++checked;
        }
    }
    detail = std::to_string(checked) + " (instance, length) pairs agree";
    return true;
}

// --- criterion 3: total-length FPT vs oracle -------------------------------

bool total_vs_oracle(std::string& detail) {
    std::mt19937_64 rng(20240002);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 4 + static_cast<int>(rng() % 7);
        Digraph g = testutil::random_digraph_swept(rng, n);
        const int best = oracle_max_total(g);
        for (int total = 2; total <= 7; ++total) {
            auto w = solve_total_length(g, total);
            if (w.has_value() != (best >= total)) {
                detail = "mismatch at instance " + std::to_string(i) +
                         ", total " + std::to_string(total);
                return false;
            }
            if (w) {
                const int got = w->paths[0].length() + w->paths[1].length();
                if (got < total || !hygiene.check(g, SpindleSpec::subdivision({1, 1}), *w))
                    return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " decisions agree";
    return true;
}

// --- criterion 4: fixed-lengths FPT vs oracle ------------------------------

bool fixed_vs_oracle(std::string& detail) {
    std::mt19937_64 rng(20240003);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 4 + static_cast<int>(rng() % 7);
        Digraph g = testutil::random_digraph_swept(rng, n);
        for (int l1 = 1; l1 <= 2; ++l1) {
            for (int l2 = l1; l2 <= 5; ++l2) {
                auto w = solve_fixed_lengths(g, l1, l2);
                const bool expect = oracle_find(g, {l1, l2}).has_value();
                if (w.has_value() != expect) {
                    detail = "mismatch at instance " + std::to_string(i) + ", lengths (" +
                             std::to_string(l1) + "," + std::to_string(l2) + ")" +
                             (w.has_value() ? " [solver accepted]" : " [solver rejected]");
                    return false;
                }
                if (w && !hygiene.check(g, SpindleSpec::subdivision({l1, l2}), *w)) return false;
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " decisions agree";
    return true;
}

// --- criterion 5: DAG DP vs oracle ----------------------------------------

bool dag_vs_oracle(std::string& detail) {
    std::mt19937_64 rng(20240004);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 4 + static_cast<int>(rng() % 7);
        const int m = static_cast<int>(rng() % (3 * n)) + n / 2;
        Digraph g = testutil::random_dag(rng, n, m);
        for (int k = 1; k <= 3; ++k) {
            for (int len = 1; len <= 4; ++len) {
                auto w = dag_spindle(g, k, len);
                const bool expect =
                    oracle_find(g, std::vector<int>(static_cast<size_t>(k), len)).has_value();
                if (w.has_value() != expect) {
                    detail = "mismatch at instance " + std::to_string(i) + ", (k,len) = (" +
                             std::to_string(k) + "," + std::to_string(len) + ")";
                    return false;
                }
                if (w && !hygiene.check(g, SpindleSpec::uniform(k, len), *w)) return false;
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " decisions agree";
    return true;
}

// --- criterion 6: representative-family contract ---------------------------

bool repsets_contract(std::string& detail) {
    std::mt19937_64 rng(20240005);
    for (int i = 0; i < 200; ++i) {
        const int p = 1 + static_cast<int>(rng() % 4);
        const int q = static_cast<int>(rng() % 5);
        const int n = std::max(p + q, 4 + static_cast<int>(rng() % 9));
        SetFamily f;
        f.universe_size = n;
        f.p = p;
        const int count = 1 + static_cast<int>(rng() % 40);
        for (int j = 0; j < count; ++j) {
            std::set<int> s;
            while (static_cast<int>(s.size()) < p) s.insert(static_cast<int>(rng() % n));
            f.members.emplace_back(s.begin(), s.end());
        }
        TrimContext ctx = make_trim_context(n, p + q);
        SetFamily out = trim(f, q, ctx);
        if (out.members.size() > binomial(p + q, p)) {
            detail = "size bound violated at family " + std::to_string(i);
            return false;
        }
        if (!check_representative(f, out, q)) {
            detail = "representation lost at family " + std::to_string(i);
            return false;
        }
    }
    detail = "200 random families trim within C(p+q,p) and stay representative";
    return true;
}

// --- criterion 7: matching gadget -----------------------------------------

bool matching_gadget(std::string& detail) {
    testutil::Fig3 fig3;
    SplitGadget sg = build_split_graph(fig3.g, fig3.X, fig3.Y);
    if (max_matching(sg.graph).size() != 5) {
        detail = "gadget example matching size is wrong";
        return false;
    }
    auto [count, paths] = max_nontrivial_xy_paths(fig3.g, fig3.X, fig3.Y);
    if (count != 2 || paths.size() != 2) {
        detail = "gadget example path count is wrong";
        return false;
    }

    std::mt19937_64 rng(20240006);
    for (int i = 0; i < 300; ++i) {
        const int n = 4 + static_cast<int>(rng() % 7);
        Digraph g = testutil::random_digraph_swept(rng, n);
        std::vector<int> X, Y;
        for (int v = 0; v < n; ++v) {
            if (rng() % 3 == 0) X.push_back(v);
            if (rng() % 3 == 0) Y.push_back(v);
        }
        if (X.empty()) X.push_back(static_cast<int>(rng() % n));
        if (Y.empty()) Y.push_back(static_cast<int>(rng() % n));
        auto [c, ps] = max_nontrivial_xy_paths(g, X, Y);
        if (c != brute::max_disjoint_xy_paths(g, X, Y)) {
            detail = "path count mismatch at instance " + std::to_string(i);
            return false;
        }
    }
    detail = "gadget example plus 300 random (g, X, Y) instances agree";
    return true;
}

// --- criterion 8: reduction round trips -------------------------------------

bool reduction_round_trips(std::string& detail) {
    // 3DM: all instances with n <= 2, m <= 4 at len = 4 (where the stated
    // vertex identity applies verbatim).
    {
        std::vector<std::array<int, 3>> all_triples;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) all_triples.push_back({a, b, c});
        // n = 1: the single possible triple.
        std::vector<ThreeDMInstance> instances;
        instances.push_back({1, {{0, 0, 0}}});
        // n = 2: every subset of the 8 possible triples with 1 <= m <= 4.
        for (unsigned mask = 1; mask < (1u << 8); ++mask) {
            if (std::popcount(mask) > 4) continue;
            ThreeDMInstance inst;
            inst.n = 2;
            for (int j = 0; j < 8; ++j)
                if ((mask >> j) & 1) inst.triples.push_back(all_triples[static_cast<size_t>(j)]);
            instances.push_back(std::move(inst));
        }
        for (const ThreeDMInstance& inst : instances) {
            const auto solution = brute::three_dm_solution(inst.n, inst.triples);
            GeneratedInstance out = gen_3dm(inst, 4, solution);
            const int n = inst.n, m = static_cast<int>(inst.triples.size());
            const int kstar = n + 2 * m;
            if (out.digraph.vertex_count() != 3 * n + 6 * m + 2 + (4 - 4) * kstar) {
                detail = "3DM vertex count identity violated";
                return false;
            }
            if (solution) {
                if (!out.planted ||
                    !hygiene.check(out.digraph, *out.target, *out.planted)) {
                    detail = "3DM planted witness invalid";
                    return false;
                }
            }
            const auto found = oracle_find(out.digraph, out.target->lengths,
                                           SpindleMode::Subdivision, 40);
            if (found.has_value() != solution.has_value()) {
                detail = "3DM round trip failed at n=" + std::to_string(n) +
                         " m=" + std::to_string(m);
                return false;
            }
            if (found && !hygiene.check(out.digraph, *out.target, *found)) return false;
        }
    }

    // Hamiltonian-path reductions on random digraphs with n <= 8.
    {
        std::mt19937_64 rng(20240007);
        for (int i = 0; i < 40; ++i) {
            const int n = 4 + static_cast<int>(rng() % 5);
            Digraph g = testutil::random_digraph_swept(rng, n);
            const int s = 0, t = n - 1;
            const bool ham = brute::has_hamiltonian_path(g, s, t);

            GeneratedInstance tot = gen_hampath_total(g, s, t);
            auto tw = solve_total_length(tot.digraph, *tot.total_target);
            if (tw.has_value() != ham) {
                detail = "hampath-total round trip failed at instance " + std::to_string(i);
                return false;
            }
            if (tw && !hygiene.check(tot.digraph, SpindleSpec::subdivision({1, 1}), *tw))
                return false;

            const int l1 = 1 + static_cast<int>(rng() % 3);
            GeneratedInstance fix = gen_hampath_fixed(g, s, t, l1);
            const auto& lens = fix.target->lengths;
            auto fw = solve_fixed_lengths(fix.digraph, std::min(lens[0], lens[1]),
                                          std::max(lens[0], lens[1]));
            if (fw.has_value() != ham) {
                detail = "hampath-fixed round trip failed at instance " + std::to_string(i);
                return false;
            }
            if (fw && !hygiene.check(fix.digraph, *fix.target, *fw)) return false;
        }
    }

    // Triangle partition on random tripartite graphs with n <= 9.
    {
        std::mt19937_64 rng(20240008);
        int built = 0;
        for (int i = 0; built < 60 && i < 500; ++i) {
            const int a = 1 + static_cast<int>(rng() % 3);
            const int b = 1 + static_cast<int>(rng() % 3);
            const int c = 1 + static_cast<int>(rng() % 3);
            const int n = a + b + c;
            std::vector<int> A, B, C;
            for (int v = 0; v < a; ++v) A.push_back(v);
            for (int v = a; v < a + b; ++v) B.push_back(v);
            for (int v = a + b; v < n; ++v) C.push_back(v);
            UndirectedGraph g;
            g.n = n;
            for (int u : A)
                for (int v : B)
                    if (rng() % 2) g.edges.emplace_back(u, v);
            for (int u : B)
                for (int v : C)
                    if (rng() % 2) g.edges.emplace_back(u, v);
            for (int u : A)
                for (int v : C)
                    if (rng() % 2) g.edges.emplace_back(u, v);
            if (g.edges.empty() || g.edges.size() % 3 != 0) continue;
            ++built;
            GeneratedInstance inst = gen_triangle_partition(g, A, B, C);
            if (oracle_disjoint_pack(inst.digraph, *inst.pack_target) !=
                brute::triangle_partition_exists(g)) {
                detail = "triangle round trip failed at instance " + std::to_string(i);
                return false;
            }
        }
    }

    detail = "3DM (all n<=2, m<=4), Hamiltonian-path, and triangle reductions round-trip";
    return true;
}

// --- criterion 9: color-coding hit rate -------------------------------------

bool colorcoding_hit_rate(std::string& detail) {
    std::mt19937_64 rng(20240009);
    int hits = 0;
    const int reps = 100;
    for (int i = 0; i < reps; ++i) {
        // Planted (2,3)-spindle on 30 vertices plus noise arcs.
        std::vector<Arc> arcs;
        arcs.push_back(Arc{0, 2});
        arcs.push_back(Arc{2, 1});
        arcs.push_back(Arc{0, 3});
        arcs.push_back(Arc{3, 4});
        arcs.push_back(Arc{4, 1});
        std::uniform_int_distribution<int> pick(0, 29);
        for (int e = 0; e < 60; ++e) {
            int u = pick(rng), v = pick(rng);
            if (u == v) continue;
            arcs.push_back(Arc{u, v});
        }
        Digraph g(30, std::move(arcs));
        auto w = find_exact_spindle_colorcoding(g, 2, 3, default_colorcoding_trials(5), rng());
        if (w && hygiene.check(g, SpindleSpec::exact({2, 3}), *w)) ++hits;
    }
    detail = std::to_string(hits) + "/" + std::to_string(reps) + " planted spindles found";
    return hits >= 99;
}

// --- criterion 10: witness hygiene ------------------------------------------

bool witness_hygiene(std::string& detail) {
    detail = std::to_string(hygiene.checked) + " witnesses validated, " +
             std::to_string(hygiene.failed) + " failures";
    return hygiene.failed == 0 && hygiene.checked > 0;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Fig. 1 battery", 1.0, fig1_battery},
        {2, "oracle equivalence, polynomial solvers", 60.0, poly_vs_oracle},
        {3, "oracle equivalence, FPT total-length", 300.0, total_vs_oracle},
        {4, "oracle equivalence, FPT fixed-lengths", 600.0, fixed_vs_oracle},
        {5, "oracle equivalence, DAG DP", 300.0, dag_vs_oracle},
        {6, "representative-family contract", 60.0, repsets_contract},
        {7, "matching gadget", 60.0, matching_gadget},
        {8, "reduction round trips", 600.0, reduction_round_trips},
        {9, "color-coding hit rate", 300.0, colorcoding_hit_rate},
        {10, "witness hygiene", 1.0, witness_hygiene},
    };
    bool all_ok = true;
    for (const Criterion& c : criteria) {
        const auto started = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - started).count();
        const bool in_budget = secs < c.budget_s;
        const bool pass = ok && in_budget;
        all_ok &= pass;
        std::printf("criterion %2d [%-42s] %s  (%.2f s, budget %.0f s)%s%s\n", c.id,
                    c.name.c_str(), pass ? "PASS" : "FAIL", secs, c.budget_s,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
