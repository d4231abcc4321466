// Command-line front end for the spindle solver library. Talks to the
// shared library exclusively through the C API in spindle.h.
//
// Every command prints a single JSON document on stdout:
//   {"answer": ..., "witness": {...}?, "stats": {"elapsed_ms": ..., "explored": ...}}
// Exit codes: 0 decided, 2 usage or input error, 3 size-guard refusal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spindle.h"

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GuardRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void raise(sp_status st) {
    if (st == SP_OK) return;
    if (st == SP_ERR_GUARD) throw GuardRefusal(sp_last_error());
    throw UsageError(sp_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

using DigraphPtr = std::unique_ptr<sp_digraph, decltype(&sp_digraph_free)>;
using WitnessPtr = std::unique_ptr<sp_witness, decltype(&sp_witness_free)>;
using InstancePtr = std::unique_ptr<sp_instance, decltype(&sp_instance_free)>;

DigraphPtr load_digraph(const std::string& path) {
    const std::string text = read_file(path);
    sp_digraph* g = nullptr;
    raise(sp_digraph_parse(text.c_str(), text.size(), &g));
    return DigraphPtr(g, sp_digraph_free);
}

json witness_to_json(const sp_witness* w) {
    json paths = json::array();
    for (int i = 0; i < sp_witness_path_count(w); ++i) {
        const int len = sp_witness_path_length(w, i);
        std::vector<int> verts(static_cast<size_t>(len) + 1);
        std::vector<int> arcs(static_cast<size_t>(len));
        sp_witness_path_vertices(w, i, verts.data());
        if (len > 0) sp_witness_path_arcs(w, i, arcs.data());
        paths.push_back({{"vertices", verts}, {"arcs", arcs}});
    }
    return {{"tail", sp_witness_tail(w)}, {"head", sp_witness_head(w)}, {"paths", paths}};
}

WitnessPtr witness_from_json(const json& j) {
    sp_witness* w = nullptr;
    raise(sp_witness_create(j.at("tail").get<int>(), j.at("head").get<int>(), &w));
    WitnessPtr out(w, sp_witness_free);
    for (const json& p : j.at("paths")) {
        std::vector<int> verts = p.at("vertices").get<std::vector<int>>();
        std::vector<int> arcs = p.at("arcs").get<std::vector<int>>();
        raise(sp_witness_add_path(w, verts.data(), static_cast<int>(verts.size()), arcs.data(),
                                  static_cast<int>(arcs.size())));
    }
    return out;
}

std::vector<int> parse_csv_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw UsageError("expected a comma-separated integer list");
    return out;
}

int env_guard_default() {
    if (const char* e = std::getenv("SPINDLE_ORACLE_GUARD")) {
        try {
            return std::stoi(e);
        } catch (...) {
            throw UsageError("SPINDLE_ORACLE_GUARD is not an integer");
        }
    }
    return 0; // library default
}

void emit(const json& answer, const sp_witness* w, Clock::time_point started) {
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    json doc;
    doc["answer"] = answer;
    if (w) doc["witness"] = witness_to_json(w);
    doc["stats"] = {{"elapsed_ms", ms}, {"explored", sp_effort_ticks()}};
    std::cout << doc.dump(2) << "\n";
}

// Shared solver flags.
struct SolveFlags {
    sp_options opts{};
    int guard = 0;

    void attach(CLI::App* cmd, bool with_guard = false) {
        sp_options_init(&opts);
        cmd->add_option("--seed", opts.seed, "random seed for color coding");
        cmd->add_option("--jobs", opts.jobs, "solver-internal worker threads");
        cmd->add_option("--trials", opts.trials, "color-coding trials override");
        cmd->add_option("--short-threshold", opts.exact_short_threshold,
                        "max n for the exhaustive short-spindle phase");
        if (with_guard) cmd->add_option("--guard", guard, "oracle size guard override");
    }

    int effective_guard() const { return guard > 0 ? guard : env_guard_default(); }
};

json instance_sidecar(const sp_instance* inst) {
    json doc;
    doc["reduction"] = sp_instance_reduction(inst);
    const int nl = sp_instance_target_lengths(inst, nullptr);
    if (nl > 0) {
        std::vector<int> lengths(static_cast<size_t>(nl));
        sp_instance_target_lengths(inst, lengths.data());
        doc["target"] = {{"kind", "spindle-subdivision"}, {"lengths", lengths}};
    }
    if (int pack = sp_instance_pack_target(inst); pack >= 0)
        doc["target"] = {{"kind", "disjoint-pack"}, {"count", pack}};
    if (int total = sp_instance_total_target(inst); total >= 0)
        doc["target"] = {{"kind", "two-spindle-total"}, {"total", total}};
    if (const sp_witness* planted = sp_instance_planted(inst))
        doc["planted"] = witness_to_json(planted);
    else
        doc["planted"] = nullptr;
    json prov = json::object();
    for (int i = 0; i < sp_instance_field_count(inst); ++i)
        prov[sp_instance_field_key(inst, i)] = sp_instance_field_value(inst, i);
    doc["provenance"] = prov;
    return doc;
}

void write_instance(const sp_instance* inst, const std::string& out_path) {
    char* text = nullptr;
    raise(sp_digraph_serialize(sp_instance_digraph(inst), &text));
    std::unique_ptr<char, decltype(&sp_string_free)> text_owner(text, sp_string_free);
    std::ofstream dg(out_path, std::ios::binary);
    if (!dg) throw UsageError("cannot write " + out_path);
    dg << text;
    std::ofstream sc(out_path + ".json", std::ios::binary);
    if (!sc) throw UsageError("cannot write " + out_path + ".json");
    sc << instance_sidecar(inst).dump(2) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"spindle subdivision solvers and instance generators"};
    app.require_subcommand(1);

    std::string file, witness_file, out_path, lengths_csv, solution_csv, classes_csv;
    int ell = 0, total = 0, l1 = 0, l2 = -1, k = 0, s = 0, t = 0;
    bool use_oracle = false, exact = false;

    // solve
    CLI::App* solve = app.add_subcommand("solve", "decide spindle subdivision problems");
    solve->require_subcommand(1);

    CLI::App* maxk = solve->add_subcommand("max-k", "largest k with a (k x ell)-spindle");
    maxk->add_option("--ell", ell, "path length")->required();
    maxk->add_flag("--oracle", use_oracle, "exhaustive search (required for ell >= 4)");
    maxk->add_option("file", file, "digraph file")->required();
    SolveFlags maxk_flags;
    maxk_flags.attach(maxk, true);

    CLI::App* two = solve->add_subcommand("two-spindle", "2-spindle searches");
    two->add_option("--total", total, "required total length");
    two->add_option("--l1", l1, "first length bound");
    two->add_option("--l2", l2, "second length bound");
    two->add_option("file", file, "digraph file")->required();
    SolveFlags two_flags;
    two_flags.attach(two);

    CLI::App* dag = solve->add_subcommand("dag", "(k x ell)-spindle on an acyclic digraph");
    dag->add_option("--k", k, "number of paths")->required();
    dag->add_option("--ell", ell, "path length")->required();
    dag->add_option("file", file, "digraph file")->required();

    // oracle
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference search");
    oracle->add_option("--lengths", lengths_csv, "comma-separated lengths")->required();
    oracle->add_flag("--exact", exact, "exact-subgraph semantics");
    oracle->add_option("file", file, "digraph file")->required();
    SolveFlags oracle_flags;
    oracle_flags.attach(oracle, true);

    // validate
    CLI::App* validate = app.add_subcommand("validate", "check a witness against a spec");
    validate->add_option("--spec", lengths_csv, "comma-separated lengths")->required();
    validate->add_flag("--exact", exact, "exact-subgraph semantics");
    validate->add_option("file", file, "digraph file")->required();
    validate->add_option("witness", witness_file, "witness JSON file")->required();

    // gen
    CLI::App* gen = app.add_subcommand("gen", "reduction instance generators");
    gen->require_subcommand(1);
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("-o,--out", out_path, "output digraph path (sidecar at PATH.json)")
            ->required();
    };
    CLI::App* g_lp = gen->add_subcommand("longest-path", "bypass-block reduction");
    g_lp->add_option("--k", k, "number of spindle paths")->required();
    g_lp->add_option("file", file, "source digraph")->required();
    add_out(g_lp);
    CLI::App* g_3dm = gen->add_subcommand("3dm", "per-triple gadget reduction");
    g_3dm->add_option("--ell", ell, "path length (>= 4)")->required();
    g_3dm->add_option("--solution", solution_csv, "triple indices of a known solution");
    g_3dm->add_option("file", file, "3DM instance file: 'n m' then m lines 'a b c'")
        ->required();
    add_out(g_3dm);
    CLI::App* g_ht = gen->add_subcommand("hampath-total", "Hamiltonian path, total-length target");
    g_ht->add_option("--s", s, "path start")->required();
    g_ht->add_option("--t", t, "path end")->required();
    g_ht->add_option("file", file, "source digraph")->required();
    add_out(g_ht);
    CLI::App* g_hf = gen->add_subcommand("hampath-fixed", "Hamiltonian path, fixed lengths");
    g_hf->add_option("--s", s, "path start")->required();
    g_hf->add_option("--t", t, "path end")->required();
    g_hf->add_option("--l1", l1, "length of the added path")->required();
    g_hf->add_option("file", file, "source digraph")->required();
    add_out(g_hf);
    CLI::App* g_tri = gen->add_subcommand("triangles", "tripartite triangle-partition reduction");
    g_tri->add_option("--classes", classes_csv, "class sizes a,b,c over vertex ranges")
        ->required();
    g_tri->add_option("file", file, "undirected edge list: 'n m' then m lines 'u v'")
        ->required();
    add_out(g_tri);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    const auto started = Clock::now();
    sp_effort_reset();

    if (maxk->parsed()) {
        DigraphPtr g = load_digraph(file);
        WitnessPtr w(nullptr, sp_witness_free);
        int answer = 0;
        if (ell >= 1 && ell <= 3 && !use_oracle) {
            sp_witness* raw = nullptr;
            raise(sp_solve_max_k(g.get(), ell, &maxk_flags.opts, &answer, &raw));
            w.reset(raw);
        } else if (use_oracle) {
            raise(sp_oracle_max_k(g.get(), ell, maxk_flags.effective_guard(), &answer));
            if (answer >= 1) {
                std::vector<int> lengths(static_cast<size_t>(answer), ell);
                int found = 0;
                sp_witness* raw = nullptr;
                raise(sp_oracle_find(g.get(), lengths.data(), answer, 0,
                                     maxk_flags.effective_guard(), &found, &raw));
                w.reset(raw);
            }
        } else {
            throw UsageError("ell >= 4 needs --oracle (the polynomial cases are ell <= 3)");
        }
        emit(answer, w.get(), started);
        return 0;
    }
    if (two->parsed()) {
        DigraphPtr g = load_digraph(file);
        const bool have_total = two->count("--total") > 0;
        const bool have_pair = two->count("--l1") > 0 && two->count("--l2") > 0;
        if (have_total == have_pair)
            throw UsageError("pass either --total or both --l1 and --l2");
        int found = 0;
        sp_witness* raw = nullptr;
        if (have_total)
            raise(sp_solve_total_length(g.get(), total, &two_flags.opts, &found, &raw));
        else
            raise(sp_solve_fixed_lengths(g.get(), l1, l2, &two_flags.opts, &found, &raw));
        WitnessPtr w(raw, sp_witness_free);
        emit(found != 0, w.get(), started);
        return 0;
    }
    if (dag->parsed()) {
        DigraphPtr g = load_digraph(file);
        int found = 0;
        sp_witness* raw = nullptr;
        raise(sp_solve_dag(g.get(), k, ell, &found, &raw));
        WitnessPtr w(raw, sp_witness_free);
        emit(found != 0, w.get(), started);
        return 0;
    }
    if (oracle->parsed()) {
        DigraphPtr g = load_digraph(file);
        std::vector<int> lengths = parse_csv_ints(lengths_csv);
        int found = 0;
        sp_witness* raw = nullptr;
        raise(sp_oracle_find(g.get(), lengths.data(), static_cast<int>(lengths.size()),
                             exact ? 1 : 0, oracle_flags.effective_guard(), &found, &raw));
        WitnessPtr w(raw, sp_witness_free);
        emit(found != 0, w.get(), started);
        return 0;
    }
    if (validate->parsed()) {
        DigraphPtr g = load_digraph(file);
        std::vector<int> lengths = parse_csv_ints(lengths_csv);
        json wj;
        try {
            wj = json::parse(read_file(witness_file));
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad witness JSON: ") + e.what());
        }
        WitnessPtr w = witness_from_json(wj);
        int valid = 0;
        raise(sp_validate_witness(g.get(), lengths.data(), static_cast<int>(lengths.size()),
                                  exact ? 1 : 0, w.get(), &valid));
        emit(valid != 0, nullptr, started);
        return 0;
    }

    // gen subcommands
    sp_instance* raw_inst = nullptr;
    if (g_lp->parsed()) {
        DigraphPtr g = load_digraph(file);
        raise(sp_gen_longest_path(g.get(), k, &raw_inst));
    } else if (g_3dm->parsed()) {
        // 3DM file: header "n m", then m lines "a b c".
        std::istringstream in(read_file(file));
        int n = -1, m = -1;
        std::string line;
        std::vector<int> triples;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            if (n < 0) {
                if (!(ls >> n >> m)) throw UsageError("bad 3DM header");
                continue;
            }
            int a, b, c;
            if (!(ls >> a >> b >> c)) throw UsageError("bad 3DM triple line");
            triples.push_back(a);
            triples.push_back(b);
            triples.push_back(c);
        }
        if (n < 0 || static_cast<int>(triples.size()) != 3 * m)
            throw UsageError("3DM file does not match its header");
        std::optional<std::vector<int>> solution;
        if (!solution_csv.empty()) solution = parse_csv_ints(solution_csv);
        raise(sp_gen_3dm(n, triples.data(), m, ell,
                         solution ? solution->data() : nullptr,
                         solution ? static_cast<int>(solution->size()) : 0, &raw_inst));
    } else if (g_ht->parsed()) {
        DigraphPtr g = load_digraph(file);
        raise(sp_gen_hampath_total(g.get(), s, t, &raw_inst));
    } else if (g_hf->parsed()) {
        DigraphPtr g = load_digraph(file);
        raise(sp_gen_hampath_fixed(g.get(), s, t, l1, &raw_inst));
    } else if (g_tri->parsed()) {
        // Undirected edge list in the digraph file syntax.
        std::istringstream in(read_file(file));
        int n = -1, m = -1;
        std::string line;
        std::vector<int> edges;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            if (n < 0) {
                if (!(ls >> n >> m)) throw UsageError("bad edge-list header");
                continue;
            }
            int u, v;
            if (!(ls >> u >> v)) throw UsageError("bad edge line");
            edges.push_back(u);
            edges.push_back(v);
        }
        if (n < 0 || static_cast<int>(edges.size()) != 2 * m)
            throw UsageError("edge list does not match its header");
        std::vector<int> sizes = parse_csv_ints(classes_csv);
        if (sizes.size() != 3 || sizes[0] + sizes[1] + sizes[2] != n)
            throw UsageError("--classes must list three sizes summing to n");
        std::vector<int> classes(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            classes[static_cast<size_t>(v)] = v < sizes[0] ? 0 : (v < sizes[0] + sizes[1] ? 1 : 2);
        raise(sp_gen_triangles(n, edges.data(), m, classes.data(), &raw_inst));
    } else {
        throw UsageError("unknown subcommand");
    }
    InstancePtr inst(raw_inst, sp_instance_free);
    write_instance(inst.get(), out_path);
    emit(true, sp_instance_planted(inst.get()), started);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GuardRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitGuard;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
