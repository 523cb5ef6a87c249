#include "kthit/kernel.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "kthit/blocking.hpp"
#include "kthit/ekt.hpp"
#include "kthit/errors.hpp"

namespace kthit {

void validate_instance(const ModulatorInstance& inst) {
    if (inst.t < 2) throw PreconditionViolated("t must be at least 2");
    if (inst.lambda < 0) throw PreconditionViolated("lambda must be non-negative");
    if (inst.k < 0) throw PreconditionViolated("k must be non-negative");
    if (make_set(inst.modulator) != inst.modulator) throw PreconditionViolated("modulator is not a sorted set");
    for (Vertex v : inst.modulator)
        if (v < 0 || v >= inst.graph.num_vertices()) throw PreconditionViolated("modulator vertex out of range");
    if (!bed_at_most(remove_vertices(inst.graph, inst.modulator).graph, inst.t, inst.lambda))
        throw PreconditionViolated("bed+ of G - X exceeds lambda = " + std::to_string(inst.lambda));
}

int effective_chunk_bound(int lambda, int t, int cap) {
    try {
        return static_cast<int>(saturate(chunk_bound(lambda, t), cap));
    } catch (const Overflow&) {
        return cap;
    }
}

namespace {

bool chunk_bound_capped(int lambda, int t, int cap) {
    try {
        return chunk_bound(lambda, t) > cap;
    } catch (const Overflow&) {
        return true;
    }
}

// Calls f on every subset of `ground` with exactly `size` elements, in lexicographic order.
// Stops early when f returns true.
template <class F>
bool for_each_subset(const VertexSet& ground, int size, F&& f) {
    int n = static_cast<int>(ground.size());
    if (size > n) return false;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s.push_back(ground[i]);
        if (f(s)) return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<VertexSet> chunks_of(const Graph& g, const VertexSet& x, int t, int bound) {
    std::vector<VertexSet> out;
    for (int size = 1; size <= std::min<int>(bound, static_cast<int>(x.size())); ++size)
        for_each_subset(x, size, [&](const VertexSet& s) {
            if (!has_t_clique_within(g, s, t)) out.push_back(s);
            return false;
        });
    return out;
}

using ConflictCache = std::map<std::pair<VertexSet, VertexSet>, bool>;

// Shared state of the mark recursion for one root decomposition.
struct MarkContext {
    const Graph& g;
    const RootDecomposition& dec;
    const VertexSet& n_set;
    int t;
    int lambda;
    int c_top;
    std::size_t x_size;
    ConflictCache& conflicts;
    std::vector<std::vector<Part>>* packings = nullptr;
    std::vector<VertexSet> root_cliques;  // nonempty cliques of V(T) with at most t-1 vertices, size-then-lex
    std::map<std::tuple<VertexSet, VertexSet, VertexSet>, VertexSet> memo;

    MarkContext(const Graph& graph, const RootDecomposition& d, const VertexSet& n, int t_, int lambda_, int c,
                std::size_t xs, ConflictCache& cache)
        : g(graph), dec(d), n_set(n), t(t_), lambda(lambda_), c_top(c), x_size(xs), conflicts(cache) {
        VertexSet tv = dec.root_vertices();
        Subgraph sub = induced_subgraph(g, tv);
        for (const VertexSet& q : enumerate_cliques(sub.graph, 1, t - 1)) root_cliques.push_back(sub.to_old(q));
        std::stable_sort(root_cliques.begin(), root_cliques.end(),
                         [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    }

    bool conf(const VertexSet& s1, const VertexSet& s2) {
        auto key = std::make_pair(s1, s2);
        auto it = conflicts.find(key);
        if (it != conflicts.end()) return it->second;
        bool value = conflict_positive(g, s1, s2, t, lambda);
        conflicts.emplace(std::move(key), value);
        return value;
    }

    VertexSet run(const VertexSet& x_chunk, int c, const VertexSet& n_prime, const VertexSet& m_prime) {
        if (c == -1) return {};
        auto key = std::make_tuple(x_chunk, n_prime, m_prime);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        std::vector<Part> packing;
        VertexSet used_v, used_n;
        VertexSet free_n = set_difference(n_set, n_prime);
        VertexSet xn = set_union(x_chunk, n_prime);
        for (const VertexSet& v_i : root_cliques) {
            if (packing.size() == x_size + 1) break;
            if (intersects(v_i, used_v)) continue;
            VertexSet vm = set_union(v_i, m_prime);
            if (static_cast<int>(vm.size()) > t - 1 || !is_clique(g, vm)) continue;
            VertexSet base = set_union(set_union(m_prime, dec.pending_of(v_i)), n_prime);
            VertexSet avail = set_difference(free_n, used_n);
            // Adding vertices of N never lowers the conflict, so the largest choice decides existence.
            if (!conf(x_chunk, set_union(base, avail))) continue;
            std::optional<VertexSet> chosen;
            for (int size = 0; size <= std::min<int>(c, static_cast<int>(avail.size())) && !chosen; ++size)
                for_each_subset(avail, size, [&](const VertexSet& n_i) {
                    if (has_t_clique_within(g, set_union(xn, n_i), t)) return false;
                    if (!conf(x_chunk, set_union(base, n_i))) return false;
                    chosen = n_i;
                    return true;
                });
            if (!chosen) continue;
            packing.push_back({v_i, *chosen});
            used_v = set_union(used_v, v_i);
            used_n = set_union(used_n, *chosen);
        }
        VertexSet result = used_v;
        if (packing.size() == x_size + 1) {
            if (packings) packings->push_back(packing);
        } else {
            for (Vertex gv : used_n) result = set_union(result, run(x_chunk, c - 1, set_union(n_prime, {gv}), m_prime));
        }
        memo.emplace(std::move(key), result);
        return result;
    }
};

MarkState step1_impl(MarkContext& ctx, const std::vector<VertexSet>& chunk_list) {
    MarkState state;
    VertexSet earlier;
    for (int level = 1; level <= ctx.t - 1; ++level) {
        std::vector<VertexSet> family{VertexSet{}};
        if (level >= 2)
            for (const VertexSet& q : ctx.root_cliques) {
                if (static_cast<int>(q.size()) > ctx.t - 2) continue;
                bool meets_all = true;
                for (const VertexSet& r : state.rounds)
                    if (!intersects(q, r)) meets_all = false;
                if (meets_all) family.push_back(q);
            }
        VertexSet round;
        for (const VertexSet& xc : chunk_list)
            for (const VertexSet& mp : family) round = set_union(round, ctx.run(xc, ctx.c_top, {}, mp));
        round = set_difference(round, earlier);
        earlier = set_union(earlier, round);
        state.rounds.push_back(round);
    }
    state.marked = earlier;
    return state;
}

RootDecomposition map_decomposition(const RootDecomposition& local, const Subgraph& sub) {
    RootDecomposition out;
    out.host = sub.to_old(local.host);
    for (const VertexSet& r : local.roots) out.roots.push_back(sub.to_old(r));
    for (const auto& [v, c] : local.pending) out.pending[sub.new_to_old[v]] = sub.to_old(c);
    return out;
}

}  // namespace

std::vector<VertexSet> chunks(const ModulatorInstance& inst, int cap) {
    if (cap < 1) throw PreconditionViolated("chunk cap must be at least 1");
    return chunks_of(inst.graph, inst.modulator, inst.t, effective_chunk_bound(inst.lambda, inst.t, cap));
}

RootDecomposition modulator_root(const Graph& g, const VertexSet& alive, const VertexSet& x, const VertexSet& n_set,
                                 int t, int lambda, const std::optional<std::vector<VertexSet>>& roots) {
    VertexSet host = set_difference(set_difference(alive, x), n_set);
    if (host.empty()) return {};
    Subgraph sub = induced_subgraph(g, host);
    RootDecomposition local;
    if (!roots) {
        local = compute_bed_root(sub.graph, t, lambda);
    } else {
        // Align the given roots with the components of the host.
        std::vector<VertexSet> ordered;
        for (const VertexSet& comp : connected_components(sub.graph)) {
            std::vector<VertexSet> inside;
            for (const VertexSet& r : *roots)
                if (intersects(sub.to_new(r), comp)) inside.push_back(sub.to_new(r));
            if (inside.size() != 1) throw InvalidRoot("component of the host does not contain exactly one root");
            ordered.push_back(inside.front());
        }
        local = pending_partition(sub.graph, t, {}, ordered);
    }
    return map_decomposition(local, sub);
}

VertexSet mark(const RootDecomposition& dec, const VertexSet& n_set, const VertexSet& x_chunk, int c,
               const VertexSet& n_prime, const VertexSet& m_prime, const ModulatorInstance& inst, const KernelCaps& caps) {
    int c_top = effective_chunk_bound(inst.lambda, inst.t, caps.chunk_cap);
    if (c < -1 || c > c_top) throw PreconditionViolated("c out of range");
    if (!is_subset(x_chunk, inst.modulator) || x_chunk.empty() || has_t_clique_within(inst.graph, x_chunk, inst.t))
        throw PreconditionViolated("x_chunk is not a chunk");
    if (!is_subset(n_prime, n_set)) throw PreconditionViolated("N' is not a subset of N");
    if (static_cast<int>(n_prime.size()) > c_top - c) throw PreconditionViolated("|N'| exceeds c(lambda,t) - c");
    if (has_t_clique_within(inst.graph, set_union(x_chunk, n_prime), inst.t))
        throw PreconditionViolated("X' + N' contains a t-clique");
    if (!is_subset(m_prime, dec.root_vertices()) || static_cast<int>(m_prime.size()) > inst.t - 2 ||
        !is_clique(inst.graph, m_prime))
        throw PreconditionViolated("M' must be a clique of at most t-2 root vertices");
    ConflictCache cache;
    MarkContext ctx(inst.graph, dec, n_set, inst.t, inst.lambda, c_top, inst.modulator.size(), cache);
    return ctx.run(x_chunk, c, n_prime, m_prime);
}

MarkState step1_mark(const RootDecomposition& dec, const VertexSet& n_set, const ModulatorInstance& inst,
                     const KernelCaps& caps) {
    int c_top = effective_chunk_bound(inst.lambda, inst.t, caps.chunk_cap);
    ConflictCache cache;
    MarkContext ctx(inst.graph, dec, n_set, inst.t, inst.lambda, c_top, inst.modulator.size(), cache);
    std::vector<std::vector<Part>> packings;
    ctx.packings = &packings;
    MarkState state = step1_impl(ctx, chunks_of(inst.graph, inst.modulator, inst.t, c_top));
    state.packings = std::move(packings);
    return state;
}

namespace {

long long component_opt(const Graph& g, const VertexSet& comp, int t, int lambda) {
    Subgraph sub = induced_subgraph(g, comp);
    return static_cast<long long>(solve_ekt({sub.graph, {}, t}, {lambda, 0}).size());
}

}  // namespace

std::optional<Step2Result> step2_remove(const ModulatorInstance& inst, const RootDecomposition& dec,
                                        const VertexSet& n_set, const MarkState& marks) {
    (void)n_set;
    VertexSet unmarked = set_difference(dec.root_vertices(), marks.marked);
    if (unmarked.empty()) return std::nullopt;
    Step2Result r;
    r.v = unmarked.front();
    r.removed = dec.pending.at(r.v);
    r.opt = component_opt(inst.graph, r.removed, inst.t, inst.lambda);
    r.graph = remove_vertices(inst.graph, r.removed).graph;
    r.k = inst.k - r.opt;
    return r;
}

std::string to_string(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        default: return "undecided";
    }
}

namespace {

struct Sunflower {
    VertexSet core;
    std::vector<std::size_t> petals;  // indices into the family
};

// Searches a sunflower with `need` petals in a family of equal-size sets. Branching on every
// element of a maximal disjoint subfamily makes the search succeed whenever the Erdos-Rado
// bound |F| > s! (need-1)^s applies.
std::optional<Sunflower> find_sunflower(const std::vector<VertexSet>& family, std::size_t need) {
    struct Item {
        VertexSet rest;
        std::size_t index;
    };
    std::function<std::optional<Sunflower>(const std::vector<Item>&, const VertexSet&)> rec =
        [&](const std::vector<Item>& items, const VertexSet& core) -> std::optional<Sunflower> {
        if (items.size() < need) return std::nullopt;
        VertexSet used;
        std::vector<std::size_t> picked;
        for (const Item& it : items) {
            if (intersects(it.rest, used)) continue;
            picked.push_back(it.index);
            used = set_union(used, it.rest);
            if (picked.size() == need) return Sunflower{core, picked};
        }
        std::vector<std::pair<std::size_t, Vertex>> order;
        for (Vertex x : used) {
            std::size_t freq = 0;
            for (const Item& it : items)
                if (contains(it.rest, x)) ++freq;
            order.push_back({freq, x});
        }
        std::sort(order.begin(), order.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
        for (auto [freq, x] : order) {
            if (freq < need) break;
            std::vector<Item> sub;
            for (const Item& it : items)
                if (contains(it.rest, x)) sub.push_back({set_difference(it.rest, {x}), it.index});
            auto r = rec(sub, set_union(core, {x}));
            if (r) return r;
        }
        return std::nullopt;
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < family.size(); ++i) items.push_back({family[i], i});
    return rec(items, {});
}

// Graph on `kept` (relabeled in increasing id order) plus `copies` completions of each core to a t-clique.
Graph build_kernel_graph(const Graph& g, const VertexSet& kept, const CliqueFamily& cores, long long copies, int t,
                         std::vector<Vertex>& origin) {
    Subgraph sub = induced_subgraph(g, kept);
    Graph out = sub.graph;
    origin = sub.new_to_old;
    for (const VertexSet& core : cores) {
        VertexSet local = sub.to_new(core);
        for (long long c = 0; c < copies; ++c) {
            VertexSet fresh;
            for (int i = 0; i < t - static_cast<int>(core.size()); ++i) {
                fresh.push_back(out.add_vertex());
                origin.push_back(-1);
            }
            for (std::size_t i = 0; i < fresh.size(); ++i) {
                for (Vertex y : local) out.add_edge(fresh[i], y);
                for (std::size_t j = i + 1; j < fresh.size(); ++j) out.add_edge(fresh[i], fresh[j]);
            }
        }
    }
    return out;
}

}  // namespace

BaseKernelResult base_kernel(const Graph& g, long long k, int t) {
    BaseKernelResult res;
    if (k < 0) {
        res.decision = Decision::No;
        return res;
    }
    std::set<VertexSet> edges;
    for (const VertexSet& q : enumerate_t_cliques(g, t)) edges.insert(q);
    bool changed = true;
    while (changed && res.decision == Decision::Undecided) {
        changed = false;
        for (int s = t; s >= 1 && !changed; --s) {
            std::vector<VertexSet> fam;
            for (const VertexSet& e : edges)
                if (static_cast<int>(e.size()) == s) fam.push_back(e);
            auto sf = find_sunflower(fam, static_cast<std::size_t>(k + 1));
            if (!sf) continue;
            changed = true;
            if (sf->core.empty()) {
                res.decision = Decision::No;
                break;
            }
            for (std::size_t i : sf->petals) edges.erase(fam[i]);
            if (sf->core.size() == 1) {
                Vertex y = sf->core.front();
                for (auto it = edges.begin(); it != edges.end();) it = contains(*it, y) ? edges.erase(it) : std::next(it);
                res.deleted = set_union(res.deleted, {y});
                if (--k < 0) res.decision = Decision::No;
            } else {
                for (auto it = edges.begin(); it != edges.end();)
                    it = (it->size() > sf->core.size() && is_subset(sf->core, *it)) ? edges.erase(it) : std::next(it);
                edges.insert(sf->core);
            }
        }
    }
    res.k = k;
    res.hyperedges = static_cast<long long>(edges.size());
    if (res.decision != Decision::Undecided) return res;
    if (edges.empty()) {
        res.decision = Decision::Yes;
        return res;
    }
    if (k == 0) {
        res.decision = Decision::No;
        return res;
    }
    for (const VertexSet& e : edges) {
        res.kept = set_union(res.kept, e);
        if (static_cast<int>(e.size()) < t) res.cores.push_back(e);
    }
    res.graph = build_kernel_graph(g, res.kept, res.cores, k + 1, t, res.origin);
    return res;
}

long long base_kernel_hyperedge_bound(long long k, int t, long long limit) {
    BigInt b = 1;
    for (int i = 0; i < t; ++i) b *= k;
    for (int i = 2; i <= t; ++i) b *= i;
    b *= t;
    return saturate(b, limit);
}

namespace {

// Replaces the root containing v by the connected pieces of the root without v.
std::vector<VertexSet> shrink_roots(const Graph& g, const std::vector<VertexSet>& roots, Vertex v) {
    std::vector<VertexSet> out;
    for (const VertexSet& r : roots) {
        if (!contains(r, v)) {
            out.push_back(r);
            continue;
        }
        VertexSet rest = set_difference(r, {v});
        if (rest.empty()) continue;
        Subgraph sub = induced_subgraph(g, rest);
        for (const VertexSet& piece : connected_components(sub.graph)) out.push_back(sub.to_old(piece));
    }
    return out;
}

KernelResult decided(KernelResult res, Decision d, int lambda, const std::string& note) {
    res.decision = d;
    res.trace.push_back({"decision", lambda, -1, {}, 0, to_string(d) + ": " + note});
    return res;
}

}  // namespace

KernelResult kernelize(const ModulatorInstance& inst, const KernelCaps& caps) {
    validate_instance(inst);
    if (caps.chunk_cap < 1) throw PreconditionViolated("chunk cap must be at least 1");
    const Graph& g = inst.graph;
    const int t = inst.t;
    KernelResult res;
    res.capped = inst.lambda >= 1 && chunk_bound_capped(inst.lambda, t, caps.chunk_cap);
    VertexSet alive = all_vertices(g);
    VertexSet x = inst.modulator;
    long long k = inst.k;
    ConflictCache conflicts;

    for (int lambda = inst.lambda; lambda >= 1; --lambda) {
        Subgraph gx = induced_subgraph(g, set_difference(alive, x));
        VertexSet n_set = gx.to_old(non_kt_vertices(gx.graph, t));
        RootDecomposition dec = modulator_root(g, alive, x, n_set, t, lambda);
        std::vector<VertexSet> roots = dec.roots;
        int c_top = effective_chunk_bound(lambda, t, caps.chunk_cap);
        std::vector<VertexSet> chunk_list = chunks_of(g, x, t, c_top);
        while (!roots.empty()) {
            dec = modulator_root(g, alive, x, n_set, t, lambda, roots);
            MarkContext ctx(g, dec, n_set, t, lambda, c_top, x.size(), conflicts);
            MarkState marks = step1_impl(ctx, chunk_list);
            VertexSet unmarked = set_difference(dec.root_vertices(), marks.marked);
            if (unmarked.empty()) break;
            Vertex v = unmarked.front();
            VertexSet removed = dec.pending.at(v);
            long long opt = component_opt(g, removed, t, lambda);
            alive = set_difference(alive, removed);
            k -= opt;
            res.trace.push_back({"removal", lambda, v, removed, opt, ""});
            if (k < 0) return decided(std::move(res), Decision::No, lambda, "budget exhausted by removed components");
            roots = shrink_roots(g, roots, v);
        }
        VertexSet added;
        for (const VertexSet& r : roots) added = set_union(added, r);
        x = set_union(x, added);
        res.trace.push_back({"level", lambda, -1, added, static_cast<long long>(x.size()), ""});
        if (!bed_at_most(induced_subgraph(g, set_difference(alive, x)).graph, t, lambda - 1))
            throw InvariantBroken("bed+ of G' - X' exceeds " + std::to_string(lambda - 1));
    }

    if (k >= static_cast<long long>(x.size()))
        return decided(std::move(res), Decision::Yes, 0, "the modulator itself is a solution");
    Subgraph sub = induced_subgraph(g, alive);
    BaseKernelResult base = base_kernel(sub.graph, k, t);
    for (Vertex v : base.deleted) res.trace.push_back({"base_delete", 0, sub.new_to_old[v], {}, 1, ""});
    res.hyperedges = base.hyperedges;
    if (base.decision != Decision::Undecided)
        return decided(std::move(res), base.decision, 0, "base kernel");
    res.trace.push_back({"base_keep", 0, -1, sub.to_old(base.kept), 0, ""});
    for (const VertexSet& core : base.cores) res.trace.push_back({"completion", 0, -1, sub.to_old(core), base.k + 1, ""});

    res.instance.graph = base.graph;
    res.instance.k = base.k;
    res.instance.t = t;
    res.instance.lambda = 0;
    std::vector<Vertex> origin;
    for (std::size_t i = 0; i < base.origin.size(); ++i) {
        Vertex o = base.origin[i] < 0 ? -1 : sub.new_to_old[base.origin[i]];
        origin.push_back(o);
        if (o < 0 || contains(x, o)) res.instance.modulator.push_back(static_cast<Vertex>(i));
    }
    res.origin = origin;
    return res;
}

KernelResult replay_kernel_trace(const ModulatorInstance& inst, const std::vector<TraceEntry>& trace) {
    const Graph& g = inst.graph;
    KernelResult res;
    res.trace = trace;
    VertexSet alive = all_vertices(g);
    VertexSet x = inst.modulator;
    long long k = inst.k;
    VertexSet kept;
    bool has_keep = false;
    CliqueFamily cores;
    long long copies = 0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const TraceEntry& e = trace[i];
        auto fail = [&](const std::string& why) {
            throw PreconditionViolated("trace entry " + std::to_string(i) + " (" + e.kind + "): " + why);
        };
        if (e.kind == "removal") {
            if (!is_subset(e.vertices, alive) || !contains(e.vertices, e.vertex)) fail("component is not present");
            alive = set_difference(alive, e.vertices);
            k -= e.value;
        } else if (e.kind == "level") {
            x = set_union(x, e.vertices);
        } else if (e.kind == "base_delete") {
            if (!contains(alive, e.vertex)) fail("vertex is not present");
            alive = set_difference(alive, {e.vertex});
            k -= 1;
        } else if (e.kind == "base_keep") {
            if (!is_subset(e.vertices, alive)) fail("kept vertex is not present");
            kept = e.vertices;
            has_keep = true;
        } else if (e.kind == "completion") {
            if (!has_keep || !is_subset(e.vertices, kept)) fail("core outside the kept vertices");
            cores.push_back(e.vertices);
            copies = e.value;
        } else if (e.kind == "decision") {
            res.decision = e.note.rfind("yes", 0) == 0 ? Decision::Yes : Decision::No;
            return res;
        } else {
            fail("unknown kind");
        }
    }
    if (!has_keep) throw PreconditionViolated("trace ends without a decision or a kernel");
    std::vector<Vertex> local_origin;
    Graph out = build_kernel_graph(g, kept, cores, copies, inst.t, local_origin);
    res.instance.graph = out;
    res.instance.k = k;
    res.instance.t = inst.t;
    res.instance.lambda = 0;
    for (std::size_t i = 0; i < local_origin.size(); ++i)
        if (local_origin[i] < 0 || contains(x, local_origin[i])) res.instance.modulator.push_back(static_cast<Vertex>(i));
    res.origin = local_origin;
    return res;
}

}  // namespace kthit
