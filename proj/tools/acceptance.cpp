#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "kthit/blocking.hpp"
#include "kthit/corpus.hpp"
#include "kthit/decomposition.hpp"
#include "kthit/ekt.hpp"
#include "kthit/errors.hpp"
#include "kthit/io.hpp"
#include "kthit/kernel.hpp"
#include "kthit/oracle.hpp"
#include "kthit/reductions.hpp"

namespace kthit::acceptance {

namespace {

// Independent stream per criterion so that running a subset does not shift the others.
Rng criterion_rng(const Options& opts, int id) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(id)};
    return Rng(seq);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::string set_text(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << '}';
    return out.str();
}

struct Tally {
    long long checked = 0;
    long long failed = 0;
    std::string first_failure;

    void record(bool ok, const std::function<std::string()>& describe) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first_failure = describe();
    }
    std::string summary(const std::string& what) const {
        std::string s = std::to_string(checked - failed) + "/" + std::to_string(checked) + " " + what;
        if (failed) s += "; first failure: " + first_failure;
        return s;
    }
};

// Random (G, X, k) with t = 3 and bed+_3(G - X) <= 1, drawn by rejection.
ModulatorInstance random_modulator_instance(Rng& rng, int max_n, int max_x) {
    for (;;) {
        int n = uniform_int(rng, 3, max_n);
        Graph g = random_graph(n, uniform_real(rng, 0.25, 0.6), rng);
        int xs = uniform_int(rng, 0, std::min(max_x, n));
        std::vector<Vertex> order(all_vertices(g));
        std::shuffle(order.begin(), order.end(), rng);
        VertexSet x = make_set(std::vector<Vertex>(order.begin(), order.begin() + xs));
        if (!bed_at_most(remove_vertices(g, x).graph, 3, 1)) continue;
        return ModulatorInstance{g, x, 0, 3, 1};
    }
}

CriterionResult bed_agreement(const Options& opts) {
    CriterionResult r;
    Tally tally;
    std::vector<Graph> graphs = connected_graphs_up_to(7);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        int fast = bed_value(g, 3, g.num_vertices()).value;
        long long brute = oracle::brute_bed_plus(g, 3).value;
        tally.record(fast == brute, [&] {
            return "connected graph #" + std::to_string(i) + ": bed_value " + std::to_string(fast) + " vs brute " +
                   std::to_string(brute);
        });
    }
    bool corpus_ok = graphs.size() == 996;
    Rng rng = criterion_rng(opts, 1);
    for (int i = 0; i < 500; ++i) {
        int t = 3 + i % 2;
        Graph g = random_graph(uniform_int(rng, 1, 9), uniform_real(rng, 0.2, 0.9), rng);
        int fast = bed_value(g, t, g.num_vertices()).value;
        long long brute = oracle::brute_bed_plus(g, t).value;
        tally.record(fast == brute, [&] {
            return "random graph #" + std::to_string(i) + " (t=" + std::to_string(t) + "): bed_value " +
                   std::to_string(fast) + " vs brute " + std::to_string(brute);
        });
    }
    r.pass = corpus_ok && tally.failed == 0;
    r.detail = std::to_string(graphs.size()) + " connected graphs (expected 996), " + tally.summary("agree");
    return r;
}

CriterionResult solver_agreement(const Options& opts) {
    CriterionResult r;
    Tally optimal, valid;
    Rng rng = criterion_rng(opts, 2);
    for (int i = 0; i < 1000; ++i) {
        int t = 3 + i % 2;
        ExtendedInstance inst;
        inst.t = t;
        inst.graph = random_graph(uniform_int(rng, 1, 9), uniform_real(rng, 0.2, 0.85), rng);
        inst.family = random_family(inst.graph, t, 4, rng);
        int lambda = static_cast<int>(oracle::brute_bed_plus(inst.graph, t).value);
        long long opt_f = oracle::brute_opt_ekt(inst).value;
        long long opt_g = oracle::brute_opt_ekt(ExtendedInstance{inst.graph, {}, t}).value;
        int kappa = static_cast<int>(opt_f - opt_g);
        VertexSet s = solve_ekt(inst, {lambda, kappa});
        bool ok = is_valid_solution(inst.graph, inst.family, t, s) && static_cast<long long>(s.size()) == opt_f;
        optimal.record(ok, [&] {
            return "instance #" + std::to_string(i) + ": |S| = " + std::to_string(s.size()) + ", opt = " +
                   std::to_string(opt_f) + ", S = " + set_text(s);
        });
        // Promises violated on purpose: the answer must stay a solution.
        for (SolveBudget weak : {SolveBudget{0, 0}, SolveBudget{std::max(0, lambda - 1), 0}}) {
            VertexSet w = solve_ekt(inst, weak);
            valid.record(is_valid_solution(inst.graph, inst.family, t, w),
                         [&] { return "instance #" + std::to_string(i) + ": invalid output " + set_text(w); });
        }
    }
    r.pass = optimal.failed == 0 && valid.failed == 0;
    r.detail = optimal.summary("optimal under the promise") + "; " + valid.summary("valid with weakened budgets");
    return r;
}

CriterionResult kernel_safeness(const Options& opts) {
    CriterionResult r;
    Tally tally;
    Rng rng = criterion_rng(opts, 3);
    int decided = 0;
    for (int i = 0; i < 200; ++i) {
        ModulatorInstance inst = random_modulator_instance(rng, 12, 5);
        long long opt = oracle::brute_opt_ekt(ExtendedInstance{inst.graph, {}, 3}).value;
        inst.k = std::max(0LL, opt + (i % 3) - 1);
        bool expected = opt <= inst.k;
        KernelResult out = kernelize(inst);
        bool got;
        if (out.decision != Decision::Undecided) {
            ++decided;
            got = out.decision == Decision::Yes;
        } else {
            got = oracle::decide_kt_hitting(out.instance.graph, 3, out.instance.k);
        }
        tally.record(got == expected, [&] {
            return "instance #" + std::to_string(i) + " (n=" + std::to_string(inst.graph.num_vertices()) +
                   ", X=" + set_text(inst.modulator) + ", k=" + std::to_string(inst.k) + ", opt=" +
                   std::to_string(opt) + "): kernel answers " + (got ? "yes" : "no");
        });
    }
    r.pass = tally.failed == 0;
    r.detail = tally.summary("kernels agree with the input") + " (" + std::to_string(decided) + " decided directly)";
    return r;
}

CriterionResult mmbs_bounds(const Options&) {
    CriterionResult r;
    Tally tally;
    std::vector<Graph> graphs = connected_graphs_up_to(7);
    int inexact = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        BoundsReport b = verify_mmbs_bounds(graphs[i], 3);
        if (!b.mmbs_exact) ++inexact;
        tally.record(b.pass, [&] {
            return "graph #" + std::to_string(i) + ": mmbs " + std::to_string(b.mmbs) + (b.mmbs_exact ? "" : " (bound)") +
                   ", beta " + b.beta_text + ", td bound " + b.td_bound_text;
        });
    }
    r.pass = tally.failed == 0 && graphs.size() == 996;
    r.detail = tally.summary("graphs within both bounds") + ", " + std::to_string(inexact) + " inexact";
    return r;
}

CriterionResult witness_values(const Options&) {
    CriterionResult r;
    std::ostringstream detail;
    bool pass = true;
    for (int t : {3, 4}) {
        oracle::OracleReport rep = oracle::mmbs_instance(ExtendedInstance{complete_graph(t), {}, t});
        bool ok = rep.exact && rep.value == 2;
        pass = pass && ok;
        detail << "mmbs(K_" << t << ", {}) = " << rep.value << (ok ? "" : " (expected 2)") << "; ";
    }
    const int ell = 3;
    Graph chain = triangle_chain(ell);
    CliqueFamily edges;
    for (auto [u, v] : chain.edges()) edges.push_back({u, v});
    ExtendedInstance inst{chain, edges, 4};
    CliqueFamily tops;
    for (Vertex v : triangle_chain_tops(ell)) tops.push_back({v});
    bool blocking = oracle::is_blocking_set(inst, tops);
    bool minimal = true;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        CliqueFamily smaller = tops;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (oracle::is_blocking_set(inst, smaller)) minimal = false;
    }
    bool chain_ok = blocking && minimal && static_cast<int>(tops.size()) == ell;
    pass = pass && chain_ok;
    detail << "chain of " << ell << " triangles: tops blocking " << (blocking ? "yes" : "no") << ", minimal "
           << (minimal ? "yes" : "no");
    r.pass = pass;
    r.detail = detail.str();
    return r;
}

CriterionResult reduction_criterion(bool ved) {
    CriterionResult r;
    Tally equiv, structure, size;
    int unit_only_failures = 0;
    Graph diamond = diamond_graph();
    std::vector<CnfFormula> formulas = small_cnf_formulas(3, 3, 3);
    int satisfiable = 0;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const CnfFormula& phi = formulas[i];
        ReductionOutput out = ved ? reduce_cnf_ved(phi, diamond) : reduce_cnf_td(phi, diamond);
        bool sat = is_satisfiable(phi);
        satisfiable += sat;
        long long opt = oracle::brute_opt_h_hitting(out.graph, diamond, false).value;
        auto label = [&] {
            std::string text = serialize_cnf(phi);
            std::replace(text.begin(), text.end(), '\n', ' ');
            return "formula #" + std::to_string(i) + " [" + text + "] ";
        };
        equiv.record(sat == (opt <= out.budget), [&] {
            return label() + "sat " + std::to_string(sat) + ", opt " + std::to_string(opt) + ", budget " +
                   std::to_string(out.budget);
        });
        size.record(static_cast<long long>(out.modulator.size()) == 4LL * phi.num_vars,
                    [&] { return label() + "|X| = " + std::to_string(out.modulator.size()); });
        Graph rest = remove_vertices(out.graph, out.modulator).graph;
        if (ved) {
            long long v = oracle::brute_ved_plus(rest, diamond, false).value;
            structure.record(v == 1, [&] { return label() + "ved+(G - X) = " + std::to_string(v); });
            bool unit_only = std::all_of(phi.clauses.begin(), phi.clauses.end(),
                                         [](const std::vector<int>& c) { return c.size() == 1; });
            if (v != 1 && unit_only) ++unit_only_failures;
        } else {
            int d = treedepth_exact(rest).depth;
            structure.record(d <= 10, [&] { return label() + "td(G - X) = " + std::to_string(d); });
        }
    }
    r.pass = equiv.failed == 0 && structure.failed == 0 && size.failed == 0 && !formulas.empty();
    r.detail = std::to_string(formulas.size()) + " formulas (" + std::to_string(satisfiable) + " satisfiable): " +
               equiv.summary("SAT equivalences") + "; " +
               structure.summary(ved ? "with ved+(G - X) = 1" : "with td(G - X) <= 10") + "; " +
               size.summary("with |X| = 4n");
    if (structure.failed > 0 && unit_only_failures == structure.failed)
        r.detail += "; every ved+ mismatch is a formula whose clauses are all unit clauses, so no clause-copy exists";
    return r;
}

CriterionResult gadget_optimum(const Options&) {
    CriterionResult r;
    Graph diamond = diamond_graph();
    GadgetRoles roles = gadget_roles(diamond);
    AbGadget gadget = build_ab_gadget(diamond, roles.a_set, roles.b_set, roles.s, roles.t);
    std::vector<VertexSet> found = oracle::all_optimal_h_hitting_sets(gadget.graph, diamond, false);
    std::vector<VertexSet> expected{make_set(gadget.a_vertices), make_set(gadget.b_vertices)};
    std::sort(expected.begin(), expected.end());
    std::sort(found.begin(), found.end());
    r.pass = found == expected;
    std::ostringstream detail;
    detail << "gadget on " << gadget.graph.num_vertices() << " vertices, optimal sets:";
    for (const VertexSet& s : found) detail << ' ' << set_text(s);
    detail << "; expected A = " << set_text(expected.front()) << ", B = " << set_text(expected.back());
    r.detail = detail.str();
    return r;
}

CriterionResult base_kernel_criterion(const Options& opts) {
    CriterionResult r;
    Tally disjoint, bound, safe;
    for (int t : {3, 4}) {
        for (int k = 0; k <= 5; ++k) {
            Graph g;
            for (int i = 0; i <= k; ++i) g = disjoint_union(g, complete_graph(t));
            Decision d = base_kernel(g, k, t).decision;
            disjoint.record(d == Decision::No, [&] {
                return std::to_string(k + 1) + " disjoint K_" + std::to_string(t) + " with k = " + std::to_string(k) +
                       ": " + to_string(d);
            });
        }
    }
    Rng rng = criterion_rng(opts, 9);
    int materialized = 0;
    for (int i = 0; i < 100; ++i) {
        int t = 3 + i % 2;
        Graph g = random_graph(uniform_int(rng, 4, 14), uniform_real(rng, 0.3, 0.8), rng);
        long long k = uniform_int(rng, 1, 4);
        BaseKernelResult res = base_kernel(g, k, t);
        long long limit = base_kernel_hyperedge_bound(k, t);
        // Decided instances have a constant-size output; the bound concerns the fixpoint that is materialized.
        long long output_edges = res.decision == Decision::Undecided ? res.hyperedges : 0;
        bound.record(output_edges <= limit, [&] {
            return "instance #" + std::to_string(i) + ": " + std::to_string(res.hyperedges) + " hyperedges > " +
                   std::to_string(limit);
        });
        bool expected = oracle::decide_kt_hitting(g, t, k);
        bool got = res.decision == Decision::Yes;
        if (res.decision == Decision::Undecided) {
            if (res.graph.num_vertices() > 64) continue;
            ++materialized;
            got = oracle::decide_kt_hitting(res.graph, t, res.k);
        }
        safe.record(got == expected, [&] { return "instance #" + std::to_string(i) + ": kernel answer differs"; });
    }
    r.pass = disjoint.failed == 0 && bound.failed == 0 && safe.failed == 0;
    r.detail = disjoint.summary("disjoint-clique instances decided no") + "; " +
               bound.summary("within k^t t! t hyperedges") + "; " + safe.summary("answers preserved") + " (" +
               std::to_string(materialized) + " kernels re-solved)";
    return r;
}

struct CommandRun {
    std::string out;
    int status = -1;
};

CommandRun run_command(const std::string& cmd) {
    CommandRun run;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw Error("cannot start '" + cmd + "'");
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) run.out.append(buf, got);
    int status = pclose(pipe);
    run.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

std::string self_path() {
    std::error_code ec;
    auto p = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (ec) throw Error("cannot locate the kthit executable");
    return p.string();
}

bool same_kernel(const KernelResult& a, const KernelResult& b) {
    return a.decision == b.decision && a.instance == b.instance && a.origin == b.origin;
}

CriterionResult determinism(const Options& opts) {
    CriterionResult r;
    Tally cli, replay;
    Rng rng = criterion_rng(opts, 10);

    for (int i = 0; i < 60; ++i) {
        ModulatorInstance inst = random_modulator_instance(rng, 12, 5);
        inst.k = uniform_int(rng, 0, 5);
        KernelResult first = kernelize(inst);
        KernelResult second = kernelize(inst);
        KernelResult replayed = replay_kernel_trace(inst, first.trace);
        bool ok = same_kernel(first, second) && same_kernel(first, replayed);
        replay.record(ok, [&] { return "instance #" + std::to_string(i) + ": trace replay differs"; });
    }

    std::string exe = opts.cli_path.empty() ? self_path() : opts.cli_path;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("kthit-determinism-" + std::to_string(::getpid()) + "-" + std::to_string(opts.seed));
    fs::create_directories(dir);
    ModulatorInstance inst = random_modulator_instance(rng, 12, 5);
    std::string graph_file = (dir / "instance.graph").string();
    std::string dense_file = (dir / "dense.graph").string();
    std::string h_file = (dir / "diamond.graph").string();
    std::string cnf_file = (dir / "formula.cnf").string();
    std::string family_file = (dir / "family.json").string();
    write_text_file(graph_file, serialize_graph(inst.graph));
    Graph dense = complete_graph(4);
    dense = disjoint_union(dense, cycle_graph(5));
    dense.add_edge(0, 4);
    dense.add_edge(1, 5);
    dense.add_edge(4, 6);
    write_text_file(dense_file, serialize_graph(dense));
    write_text_file(h_file, serialize_graph(diamond_graph()));
    write_text_file(cnf_file, "p cnf 3 3\n1 -2 0\n2 3 0\n-1 -3 0\n");
    write_text_file(family_file, "[[4,5],[7]]\n");
    std::string modulator = set_text(inst.modulator);
    modulator = modulator.substr(1, modulator.size() - 2);
    if (modulator.empty()) modulator = "\"\"";
    std::string seed = " --seed " + std::to_string(opts.seed);
    std::vector<std::string> commands{
        "bed --json --t 3 --lambda 2 " + dense_file,
        "root --json --t 3 --lambda 2 " + dense_file,
        "solve --json --t 3 --lambda 2 --kappa 1 --family " + family_file + " " + dense_file,
        "conflict --json --t 3 --lambda 2 --s1 0 --s2 1,2,3,4 " + dense_file,
        "kernelize --json --t 3 --lambda 1 --k 2 --modulator " + modulator + " " + graph_file,
        "reduce --json --variant ved --h " + h_file + " " + cnf_file,
        "reduce --json --variant td --h " + h_file + " " + cnf_file,
        "reduce --variant td --dot --h " + h_file + " " + cnf_file,
        "verify-bounds --t 3 --exhaustive 5",
        "verify-bounds --t 3 " + dense_file,
        "oracle opt --json --t 3 " + dense_file,
        "oracle bed --json --t 3 " + dense_file,
        "oracle mmbs --json --t 3 " + dense_file,
        "oracle hhit --json --h " + h_file + " " + dense_file,
        "oracle random --json --t 3 --n 9",
        "selftest --criteria 5,8",
    };
    for (const std::string& c : commands) {
        std::string cmd = exe + seed + " " + c;
        CommandRun a = run_command(cmd);
        CommandRun b = run_command(cmd);
        bool ok = a.out == b.out && a.status == b.status && !a.out.empty() && a.status >= 0 && a.status <= 1;
        cli.record(ok, [&] {
            return "'" + c + "' (exit " + std::to_string(a.status) + "/" + std::to_string(b.status) + ", " +
                   std::to_string(a.out.size()) + "/" + std::to_string(b.out.size()) + " bytes)";
        });
    }
    fs::remove_all(dir);
    r.pass = cli.failed == 0 && replay.failed == 0;
    r.detail = cli.summary("CLI commands bit-identical across two runs") + "; " +
               replay.summary("kernel traces replay exactly");
    return r;
}

}  // namespace

std::string criterion_name(int id) {
    switch (id) {
        case 1: return "bed+ agreement";
        case 2: return "solver agreement";
        case 3: return "kernel safeness";
        case 4: return "mmbs bounds";
        case 5: return "clean-instance witness values";
        case 6: return "ved reduction";
        case 7: return "td reduction";
        case 8: return "gadget optimum";
        case 9: return "base kernel";
        case 10: return "determinism";
        default: return "unknown";
    }
}

CriterionResult run_criterion(int id, const Options& opts) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        switch (id) {
            case 1: r = bed_agreement(opts); break;
            case 2: r = solver_agreement(opts); break;
            case 3: r = kernel_safeness(opts); break;
            case 4: r = mmbs_bounds(opts); break;
            case 5: r = witness_values(opts); break;
            case 6: r = reduction_criterion(true); break;
            case 7: r = reduction_criterion(false); break;
            case 8: r = gadget_optimum(opts); break;
            case 9: r = base_kernel_criterion(opts); break;
            case 10: r = determinism(opts); break;
            default: throw PreconditionViolated("no acceptance criterion " + std::to_string(id));
        }
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.id = id;
    r.name = criterion_name(id);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_all(const std::vector<int>& ids, const Options& opts) {
    std::vector<int> todo = ids;
    if (todo.empty())
        for (int i = 1; i <= kNumCriteria; ++i) todo.push_back(i);
    std::vector<CriterionResult> out;
    for (int id : todo) out.push_back(run_criterion(id, opts));
    return out;
}

}  // namespace kthit::acceptance
