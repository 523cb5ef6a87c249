#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acceptance.hpp"
#include "kthit/blocking.hpp"
#include "kthit/corpus.hpp"
#include "kthit/decomposition.hpp"
#include "kthit/ekt.hpp"
#include "kthit/errors.hpp"
#include "kthit/io.hpp"
#include "kthit/kernel.hpp"
#include "kthit/oracle.hpp"
#include "kthit/reductions.hpp"

using json = nlohmann::ordered_json;
using namespace kthit;

namespace {

enum ExitCode { kYes = 0, kNo = 1, kUsage = 2, kPrecondition = 3 };

struct Globals {
    std::uint64_t seed = 20240601;
    bool json = false;
    bool quiet = false;
    bool timing = false;
};

Globals globals;

std::string read_input(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw CLI::ValidationError("input", "no such file '" + path + "'");
    return read_text_file(path);
}

Graph load_graph(const std::string& path) { return parse_graph(read_input(path)); }

// A pattern is a graph file or one of the names diamond, K<n>, C<n> and P<n>.
Graph load_pattern(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return load_graph(arg);
    if (arg == "diamond") return diamond_graph();
    if (arg.size() >= 2 && std::string("KCP").find(arg[0]) != std::string::npos &&
        arg.find_first_not_of("0123456789", 1) == std::string::npos && arg.size() <= 3) {
        int n = std::stoi(arg.substr(1));
        if (arg[0] == 'K' && n >= 1) return complete_graph(n);
        if (arg[0] == 'C' && n >= 3) return cycle_graph(n);
        if (arg[0] == 'P' && n >= 1) return path_graph(n);
    }
    throw CLI::ValidationError("--h", "no such file or pattern name '" + arg + "'");
}

// Reads a JSON value given either inline or as the path of a file holding it.
json load_json_argument(const std::string& arg) {
    std::string text = std::filesystem::is_regular_file(arg) ? read_text_file(arg) : arg;
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(1, std::string("malformed JSON argument: ") + e.what());
    }
}

CliqueFamily load_family(const std::string& arg, const Graph& g, int t) {
    if (arg.empty()) return {};
    CliqueFamily family;
    try {
        for (const auto& member : load_json_argument(arg)) family.push_back(make_set(member.get<std::vector<int>>()));
    } catch (const json::exception& e) {
        throw ParseError(1, std::string("family must be a list of vertex lists: ") + e.what());
    }
    canonicalize(family);
    validate_family(g, family, t);
    return family;
}

json family_json(const CliqueFamily& family) {
    json out = json::array();
    for (const VertexSet& s : family) out.push_back(s);
    return out;
}

json bed_trace_json(const std::vector<BedStep>& trace) {
    json out = json::array();
    for (const BedStep& s : trace)
        out.push_back({{"parent", s.parent}, {"lambda", s.lambda}, {"kind", s.kind}, {"vertices", s.vertices},
                       {"removed", s.removed}});
    return out;
}

json decomposition_json(const RootDecomposition& dec) {
    json pending = json::object();
    for (const auto& [v, comp] : dec.pending) pending[std::to_string(v)] = comp;
    return {{"host", dec.host}, {"roots", family_json(dec.roots)}, {"pending", pending}};
}

json kernel_trace_json(const std::vector<TraceEntry>& trace) {
    json out = json::array();
    for (const TraceEntry& e : trace) {
        json j = {{"kind", e.kind}, {"lambda", e.lambda}};
        if (e.vertex >= 0) j["vertex"] = e.vertex;
        if (!e.vertices.empty()) j["vertices"] = e.vertices;
        j["value"] = e.value;
        if (!e.note.empty()) j["note"] = e.note;
        out.push_back(j);
    }
    return out;
}

json report_json(const oracle::OracleReport& rep) {
    json j = {{"value", rep.value}, {"exact", rep.exact}, {"witness", rep.witness}};
    if (globals.timing) j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

// Prints j as JSON with --json, otherwise as one "key: value" line per top-level field.
void emit(const json& j) {
    if (globals.quiet) return;
    if (globals.json) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : j.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

// Graph text with the given summary lines as comments, so the output still parses as a graph.
std::string annotated_graph(const Graph& g, const std::vector<std::string>& comments) {
    std::string out;
    for (const std::string& c : comments) out += "c " + c + "\n";
    return out + serialize_graph(g);
}

std::string join_ids(const VertexSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out;
}

int cmd_bed(int t, int lambda, const std::string& path) {
    Graph g = load_graph(path);
    json j = {{"t", t}, {"lambda", lambda}};
    bool yes = true;
    try {
        BedResult r = bed_value(g, t, lambda);
        j["decision"] = "yes";
        j["value"] = r.value;
        j["trace"] = bed_trace_json(r.trace);
    } catch (const CapExceeded&) {
        yes = false;
        j["decision"] = "no";
        j["value"] = nullptr;
        j["trace"] = json::array();
    }
    emit(j);
    return yes ? kYes : kNo;
}

int cmd_root(int t, int lambda, const std::string& path) {
    Graph g = load_graph(path);
    VertexSet n_set = non_kt_vertices(g, t);
    RootDecomposition dec = modulator_root(g, all_vertices(g), {}, n_set, t, lambda);
    json j = {{"t", t}, {"lambda", lambda}, {"non_kt", n_set}};
    json parts = decomposition_json(dec);
    for (const auto& [key, value] : parts.items()) j[key] = value;
    emit(j);
    return kYes;
}

int cmd_solve(int t, int lambda, int kappa, const std::string& family_arg, const std::string& path) {
    ExtendedInstance inst;
    inst.graph = load_graph(path);
    inst.t = t;
    inst.family = load_family(family_arg, inst.graph, t);
    VertexSet s = solve_ekt(inst, {lambda, kappa});
    emit({{"t", t},
          {"lambda", lambda},
          {"kappa", kappa},
          {"solution", s},
          {"size", s.size()},
          {"valid", is_valid_solution(inst.graph, inst.family, t, s)}});
    return kYes;
}

int cmd_conflict(int t, int lambda, const std::string& s1, const std::string& s2, const std::string& path) {
    Graph g = load_graph(path);
    VertexSet a = parse_vertex_list(s1), b = parse_vertex_list(s2);
    for (Vertex v : set_union(a, b))
        if (v >= g.num_vertices()) throw PreconditionViolated("vertex " + std::to_string(v) + " out of range");
    bool positive = conflict_positive(g, a, b, t, lambda);
    emit({{"t", t}, {"lambda", lambda}, {"s1", a}, {"s2", b}, {"positive", positive}});
    return positive ? kYes : kNo;
}

struct KernelArgs {
    int t = 3;
    int lambda = 1;
    long long k = 0;
    std::string modulator;
    int chunk_cap = kDefaultChunkCap;
    std::string out;
};

int cmd_kernelize(const KernelArgs& a, const std::string& path) {
    ModulatorInstance inst{load_graph(path), parse_vertex_list(a.modulator), a.k, a.t, a.lambda};
    KernelResult res = kernelize(inst, KernelCaps{a.chunk_cap});
    InstanceDocument doc;
    doc.t = a.t;
    doc.lambda = 0;
    if (res.decision == Decision::Undecided) {
        doc.graph = res.instance.graph;
        doc.x = res.instance.modulator;
        doc.k = res.instance.k;
    } else if (res.decision == Decision::No) {
        // Trivial no-instance: one t-clique and no budget.
        doc.graph = complete_graph(a.t);
        doc.x = all_vertices(doc.graph);
    }
    json meta = {{"decision", to_string(res.decision)},
                 {"guarantee", res.capped ? "capped" : "theoretical"},
                 {"chunk_cap", a.chunk_cap},
                 {"input", {{"n", inst.graph.num_vertices()}, {"x", inst.modulator}, {"k", a.k}, {"lambda", a.lambda}}},
                 {"hyperedges", res.hyperedges},
                 {"origin", res.origin},
                 {"trace", kernel_trace_json(res.trace)}};
    doc.metadata_json = meta.dump();
    std::string sidecar = serialize_instance(doc);
    std::vector<std::string> comments{"decision " + to_string(res.decision), "k " + std::to_string(doc.k),
                                      "modulator " + join_ids(doc.x),
                                      std::string("guarantee ") + (res.capped ? "capped" : "theoretical")};
    if (!a.out.empty()) {
        write_text_file(a.out + ".graph", annotated_graph(doc.graph, comments));
        write_text_file(a.out + ".json", sidecar);
    }
    if (!globals.quiet || a.out.empty()) std::cout << (globals.json ? sidecar : annotated_graph(doc.graph, comments));
    return res.decision == Decision::No ? kNo : kYes;
}

int cmd_reduce(const std::string& variant, const std::string& h_path, const std::string& cnf_path, bool dot,
               const std::string& out_prefix) {
    Graph h = load_pattern(h_path);
    CnfFormula phi = parse_cnf(read_input(cnf_path));
    ReductionOutput out;
    if (variant == "ved") out = reduce_cnf_ved(phi, h);
    else if (variant == "td") out = reduce_cnf_td(phi, h);
    else throw CLI::ValidationError("--variant", "must be ved or td");
    json tags = json::object();
    std::vector<std::string> labels(out.graph.num_vertices());
    for (const auto& [v, tag] : out.role_tags) {
        tags[std::to_string(v)] = tag;
        labels[v] = tag;
    }
    json copies = json::array();
    for (const TaggedCopy& c : out.copies) copies.push_back({{"tag", c.tag}, {"embedding", c.embedding}});
    json edges = json::array();
    for (auto [u, v] : out.graph.edges()) edges.push_back({u, v});
    json sidecar = {{"variant", variant},
                    {"graph", {{"n", out.graph.num_vertices()}, {"edges", edges}}},
                    {"x", out.modulator},
                    {"budget", out.budget},
                    {"role_tags", tags},
                    {"copies", copies}};
    std::vector<std::string> comments{"variant " + variant, "budget " + std::to_string(out.budget),
                                      "modulator " + join_ids(out.modulator)};
    if (!out_prefix.empty()) {
        write_text_file(out_prefix + ".graph", annotated_graph(out.graph, comments));
        write_text_file(out_prefix + ".json", sidecar.dump(2) + "\n");
        if (dot) write_text_file(out_prefix + ".dot", to_dot(out.graph, labels));
    }
    if (globals.quiet && !out_prefix.empty()) return kYes;
    if (dot) std::cout << to_dot(out.graph, labels);
    else if (globals.json) std::cout << sidecar.dump(2) << '\n';
    else std::cout << annotated_graph(out.graph, comments);
    return kYes;
}

int cmd_verify_bounds(int t, int exhaustive, int random_count, int max_n, const std::string& path) {
    std::vector<std::pair<std::string, Graph>> graphs;
    if (!path.empty()) {
        graphs.emplace_back(std::filesystem::path(path).filename().string(), load_graph(path));
    } else if (exhaustive > 0) {
        if (exhaustive > 8) throw CapExceeded("--exhaustive is capped at 8 vertices");
        std::vector<Graph> all = connected_graphs_up_to(exhaustive);
        for (std::size_t i = 0; i < all.size(); ++i)
            graphs.emplace_back("n" + std::to_string(all[i].num_vertices()) + "-" + std::to_string(i), all[i]);
    } else if (random_count > 0) {
        Rng rng(globals.seed);
        for (int i = 0; i < random_count; ++i) {
            int n = std::uniform_int_distribution<int>(1, max_n)(rng);
            double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
            graphs.emplace_back("r" + std::to_string(i), random_graph(n, p, rng));
        }
    } else {
        throw CLI::ValidationError("verify-bounds", "give a graph file, --exhaustive <n> or --random <count>");
    }
    bool all_pass = true;
    std::ostringstream csv;
    csv << "graph-id,bed+,td,mmbs,beta,td-bound,pass\n";
    for (const auto& [id, g] : graphs) {
        BoundsReport b = verify_mmbs_bounds(g, t);
        all_pass = all_pass && b.pass;
        csv << id << ',' << b.bed << ',' << b.td << ',' << (b.mmbs_exact ? "" : ">=") << b.mmbs << ',' << b.beta_text
            << ',' << b.td_bound_text << ',' << (b.pass ? "true" : "false") << '\n';
    }
    if (!globals.quiet) std::cout << csv.str();
    return all_pass ? kYes : kNo;
}

struct OracleArgs {
    std::string sub;
    int t = 3;
    std::string family;
    std::string blocking;
    std::string h;
    bool induced = false;
    std::string s1, s2;
    int n = 8;
    double p = 0.5;
    long long budget = oracle::kDefaultMmbsNodeBudget;
    std::string path;
};

int cmd_oracle(const OracleArgs& a) {
    if (a.sub == "random") {
        Rng rng(globals.seed);
        Graph g = random_graph(a.n, a.p, rng);
        oracle::OracleReport opt = oracle::brute_opt_ekt({g, {}, a.t});
        oracle::OracleReport bed = oracle::brute_bed_plus(g, a.t);
        json edges = json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        emit({{"seed", globals.seed},
              {"graph", {{"n", g.num_vertices()}, {"edges", edges}}},
              {"opt", report_json(opt)},
              {"bed", report_json(bed)}});
        return kYes;
    }
    Graph g = load_graph(a.path);
    if (a.sub == "opt") {
        ExtendedInstance inst{g, load_family(a.family, g, a.t), a.t};
        emit(report_json(oracle::brute_opt_ekt(inst)));
    } else if (a.sub == "bed") {
        emit(report_json(oracle::brute_bed_plus(g, a.t)));
    } else if (a.sub == "ved") {
        emit(report_json(oracle::brute_ved_plus(g, load_pattern(a.h), a.induced)));
    } else if (a.sub == "hhit") {
        emit(report_json(oracle::brute_opt_h_hitting(g, load_pattern(a.h), a.induced)));
    } else if (a.sub == "mmbs") {
        if (a.family.empty()) {
            oracle::MmbsResult r = oracle::mmbs_graph(g, a.t, a.budget);
            emit({{"value", r.value},
                  {"exact", r.exact},
                  {"nodes", r.nodes},
                  {"family", family_json(r.family)},
                  {"blocking", family_json(r.blocking)}});
        } else {
            emit(report_json(oracle::mmbs_instance({g, load_family(a.family, g, a.t), a.t})));
        }
    } else if (a.sub == "blocking") {
        ExtendedInstance inst{g, load_family(a.family, g, a.t), a.t};
        CliqueFamily b = load_family(a.blocking, g, a.t);
        bool blocking = oracle::is_blocking_set(inst, b);
        emit({{"blocking", blocking}});
        return blocking ? kYes : kNo;
    } else if (a.sub == "conflict") {
        int value = oracle::brute_conflict_value(g, parse_vertex_list(a.s1), parse_vertex_list(a.s2), a.t);
        emit({{"value", value}});
    } else if (a.sub == "project") {
        emit({{"projection", family_json(oracle::brute_project(g, parse_vertex_list(a.s1), parse_vertex_list(a.s2), a.t))}});
    } else {
        throw CLI::ValidationError("oracle", "unknown oracle '" + a.sub + "'");
    }
    return kYes;
}

int cmd_selftest(const std::string& criteria, const std::string& cli_path) {
    std::vector<int> ids;
    for (Vertex v : parse_vertex_list(criteria)) {
        if (v < 1 || v > acceptance::kNumCriteria) throw CLI::ValidationError("--criteria", "ids are 1..10");
        ids.push_back(v);
    }
    acceptance::Options opts;
    opts.seed = globals.seed;
    opts.cli_path = cli_path;
    bool all = true;
    for (const acceptance::CriterionResult& r : acceptance::run_all(ids, opts)) {
        all = all && r.pass;
        if (globals.quiet) continue;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << " (" << r.name << "): " << r.detail;
        if (globals.timing) std::cout << " [" << r.seconds << " s]";
        std::cout << '\n';
    }
    return all ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kthit: K_t-subgraph hitting kernels, solvers, oracles and reductions"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--seed", globals.seed, "Seed for every randomized corpus");
    app.add_flag("--json", globals.json, "Print JSON");
    app.add_flag("--quiet", globals.quiet, "Suppress summaries on stdout");
    app.add_flag("--timing", globals.timing, "Include wall-clock timings (not reproducible)");

    int t = 3, lambda = 1, kappa = 0;
    std::string graph_path;

    auto* bed = app.add_subcommand("bed", "Decide bed+_t(G) <= lambda and print the derivation");
    bed->add_option("--t", t)->required();
    bed->add_option("--lambda", lambda)->required();
    bed->add_option("graph", graph_path)->required();

    auto* root = app.add_subcommand("root", "Compute a bed+-root of G - N^t(G) with its pending components");
    root->add_option("--t", t)->required();
    root->add_option("--lambda", lambda)->required();
    root->add_option("graph", graph_path)->required();

    std::string family;
    auto* solve = app.add_subcommand("solve", "Solve Extended K_t-Subgraph Hitting");
    solve->add_option("--t", t)->required();
    solve->add_option("--lambda", lambda)->required();
    solve->add_option("--kappa", kappa)->default_val(0);
    solve->add_option("--family", family, "JSON list of cliques, inline or as a file");
    solve->add_option("graph", graph_path)->required();

    std::string s1, s2;
    auto* conflict = app.add_subcommand("conflict", "Decide conf^t_{S1}(S2) > 0");
    conflict->add_option("--t", t)->required();
    conflict->add_option("--lambda", lambda)->required();
    conflict->add_option("--s1", s1)->required();
    conflict->add_option("--s2", s2)->required();
    conflict->add_option("graph", graph_path)->required();

    KernelArgs kargs;
    auto* kern = app.add_subcommand("kernelize", "Kernelize (G, X, k) with bed+_t(G - X) <= lambda");
    kern->add_option("--t", kargs.t)->required();
    kern->add_option("--lambda", kargs.lambda)->required();
    kern->add_option("--k", kargs.k)->required();
    kern->add_option("--modulator", kargs.modulator, "Comma separated vertex ids of X")->required();
    kern->add_option("--chunk-cap", kargs.chunk_cap)->default_val(kDefaultChunkCap);
    kern->add_option("--out", kargs.out, "Write <out>.graph and <out>.json");
    kern->add_option("graph", graph_path)->required();

    std::string variant, h_path, cnf_path, out_prefix;
    bool dot = false;
    auto* reduce = app.add_subcommand("reduce", "Build an H-subgraph hitting instance from a CNF formula");
    reduce->add_option("--variant", variant)->required()->check(CLI::IsMember({"ved", "td"}));
    reduce->add_option("--h", h_path, "Pattern graph file, or diamond, K<n>, C<n>, P<n>")->required();
    reduce->add_flag("--dot", dot, "Print a DOT rendering");
    reduce->add_option("--out", out_prefix, "Write <out>.graph, <out>.json and with --dot <out>.dot");
    reduce->add_option("cnf", cnf_path)->required();

    int exhaustive = 0, random_count = 0, max_n = 7;
    auto* bounds = app.add_subcommand("verify-bounds", "Check both upper bounds on mmbs_t as CSV");
    bounds->add_option("--t", t)->required();
    auto* ex = bounds->add_option("--exhaustive", exhaustive, "All connected graphs with at most n vertices");
    auto* rnd = bounds->add_option("--random", random_count, "Seeded random graphs");
    bounds->add_option("--max-n", max_n, "Largest random graph")->default_val(7);
    auto* gopt = bounds->add_option("graph", graph_path);
    ex->excludes(gopt)->excludes(rnd);
    rnd->excludes(gopt);

    OracleArgs oargs;
    auto* orc = app.add_subcommand("oracle", "Brute-force reference values");
    orc->add_option("name", oargs.sub, "opt, bed, ved, hhit, mmbs, blocking, conflict, project or random")
        ->required()
        ->check(CLI::IsMember({"opt", "bed", "ved", "hhit", "mmbs", "blocking", "conflict", "project", "random"}));
    orc->add_option("--t", oargs.t)->default_val(3);
    orc->add_option("--family", oargs.family);
    orc->add_option("--blocking", oargs.blocking);
    orc->add_option("--h", oargs.h, "Pattern graph file, or diamond, K<n>, C<n>, P<n>");
    orc->add_flag("--induced", oargs.induced);
    orc->add_option("--s1,--a", oargs.s1);
    orc->add_option("--s2,--b", oargs.s2);
    orc->add_option("--n", oargs.n)->default_val(8);
    orc->add_option("--p", oargs.p)->default_val(0.5);
    orc->add_option("--node-budget", oargs.budget);
    orc->add_option("graph", oargs.path);

    std::string criteria, cli_path;
    auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
    self->add_option("--criteria", criteria, "Comma separated criterion ids (default: all)");
    self->add_option("--cli", cli_path, "kthit executable for the determinism check")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*bed) return cmd_bed(t, lambda, graph_path);
        if (*root) return cmd_root(t, lambda, graph_path);
        if (*solve) return cmd_solve(t, lambda, kappa, family, graph_path);
        if (*conflict) return cmd_conflict(t, lambda, s1, s2, graph_path);
        if (*kern) return cmd_kernelize(kargs, graph_path);
        if (*reduce) return cmd_reduce(variant, h_path, cnf_path, dot, out_prefix);
        if (*bounds) return cmd_verify_bounds(t, exhaustive, random_count, max_n, graph_path);
        if (*orc) {
            if (oargs.sub != "random" && oargs.path.empty())
                throw CLI::ValidationError("oracle", "a graph file is required");
            return cmd_oracle(oargs);
        }
        if (*self) return cmd_selftest(criteria, cli_path);
    } catch (const CLI::Error& e) {
        std::cerr << "kthit: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "kthit: parse error, " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "kthit: cap exceeded: " << e.what() << '\n';
        return kPrecondition;
    } catch (const Error& e) {
        std::cerr << "kthit: " << e.what() << '\n';
        return kPrecondition;
    }
    return kUsage;
}
