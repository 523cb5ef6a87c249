#include "kthit/decomposition.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "kthit/errors.hpp"

namespace kthit {

VertexSet non_kt_vertices(const Graph& g, int t) {
    std::vector<char> in_clique(g.num_vertices(), 0);
    for (const VertexSet& k : enumerate_t_cliques(g, t))
        for (Vertex v : k) in_clique[v] = 1;
    VertexSet out;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!in_clique[v]) out.push_back(v);
    return out;
}

VertexSet RootDecomposition::root_vertices() const {
    VertexSet out;
    for (const auto& r : roots) out = set_union(out, r);
    return out;
}

VertexSet RootDecomposition::pending_of(const VertexSet& z) const {
    VertexSet out;
    for (Vertex v : z) {
        auto it = pending.find(v);
        if (it != pending.end()) out = set_union(out, it->second);
    }
    return out;
}

RootCheck validate_single_root(const Graph& g, int t, const VertexSet& t_set) {
    RootCheck res;
    if (t_set.empty()) {
        res.diagnostic = "root is empty";
        return res;
    }
    for (Vertex v : t_set)
        if (v < 0 || v >= g.num_vertices()) {
            res.diagnostic = "root vertex " + std::to_string(v) + " is not in the graph";
            return res;
        }
    if (!is_connected_subset(g, t_set)) {
        res.diagnostic = "root does not induce a connected subgraph";
        return res;
    }
    if (has_t_clique_within(g, t_set, t)) {
        res.diagnostic = "root contains a " + std::to_string(t) + "-clique";
        return res;
    }
    Subgraph rest = remove_vertices(g, t_set);
    for (const VertexSet& comp : connected_components(rest.graph)) {
        VertexSet seen;
        for (Vertex v : rest.to_old(comp))
            for (Vertex w : g.neighbors(v))
                if (contains(t_set, w)) seen.push_back(w);
        seen = make_set(std::move(seen));
        if (seen.size() != 1) {
            res.diagnostic = "component of G-T containing vertex " + std::to_string(rest.new_to_old[comp.front()]) +
                             " has " + std::to_string(seen.size()) + " neighbors in the root";
            return res;
        }
    }
    res.ok = true;
    return res;
}

RootCheck validate_root(const Graph& g, int t, const std::vector<VertexSet>& roots) {
    auto comps = connected_components(g);
    if (comps.size() != roots.size())
        throw ComponentMismatch("root list has " + std::to_string(roots.size()) + " entries but the graph has " +
                                std::to_string(comps.size()) + " components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!is_subset(roots[i], comps[i]))
            throw ComponentMismatch("root " + std::to_string(i) + " is not contained in component " + std::to_string(i));
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        Subgraph sub = induced_subgraph(g, comps[i]);
        RootCheck c = validate_single_root(sub.graph, t, sub.to_new(roots[i]));
        if (!c.ok) {
            c.diagnostic = "component " + std::to_string(i) + ": " + c.diagnostic;
            return c;
        }
    }
    return {true, ""};
}

RootDecomposition pending_partition(const Graph& g, int t, const VertexSet& n_set, const std::vector<VertexSet>& roots) {
    RootDecomposition dec;
    dec.host = set_difference(all_vertices(g), n_set);
    Subgraph host = induced_subgraph(g, dec.host);
    std::vector<VertexSet> local_roots;
    for (const auto& r : roots) {
        if (!is_subset(r, dec.host)) throw InvalidRoot("root vertex outside the host graph");
        local_roots.push_back(host.to_new(r));
    }
    RootCheck check;
    try {
        check = validate_root(host.graph, t, local_roots);
    } catch (const ComponentMismatch& e) {
        throw InvalidRoot(e.what());
    }
    if (!check.ok) throw InvalidRoot(check.diagnostic);
    dec.roots = roots;

    // Delete the edges inside the roots; the remaining components are the pending components.
    int n = host.graph.num_vertices();
    std::vector<int> root_id(n, -1);
    for (std::size_t i = 0; i < local_roots.size(); ++i)
        for (Vertex v : local_roots[i]) root_id[v] = static_cast<int>(i);
    Graph cut(n);
    for (auto [u, v] : host.graph.edges())
        if (root_id[u] < 0 || root_id[u] != root_id[v]) cut.add_edge(u, v);
    for (const VertexSet& comp : connected_components(cut)) {
        Vertex anchor = -1;
        for (Vertex v : comp)
            if (root_id[v] >= 0) anchor = v;
        if (anchor < 0) throw InvalidRoot("pending component without a root vertex");
        dec.pending[host.new_to_old[anchor]] = host.to_old(comp);
    }
    return dec;
}

std::vector<VertexSet> root_candidates(const Graph& g, int t) {
    BlockDecomposition bd = biconnected_components(g);
    Graph u(g.num_vertices());
    std::vector<char> touched(g.num_vertices(), 0);
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        if (has_t_clique_within(g, bd.blocks[i], t)) continue;
        for (auto [a, b] : bd.block_edges[i]) {
            u.add_edge(a, b);
            touched[a] = touched[b] = 1;
        }
    }
    std::vector<VertexSet> out;
    for (const VertexSet& comp : connected_components(u))
        if (touched[comp.front()]) out.push_back(comp);
    return out;
}

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const { return boost::hash_range(k.begin(), k.end()); }
};

// Memoized bed+ decision over vertex subsets of a fixed graph.
class BedEngine {
public:
    BedEngine(const Graph& g, int t) : g_(g), t_(t) {}

    bool at_most(const VertexSet& s, int lambda) {
        if (s.empty()) return true;
        if (lambda < 0) return false;
        std::vector<int> key = s;
        key.push_back(-1 - lambda);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool r = compute(s, lambda);
        memo_.emplace(std::move(key), r);
        return r;
    }

    void explain(const VertexSet& s, int lambda, int parent, std::vector<BedStep>& out) {
        int id = static_cast<int>(out.size());
        out.push_back({parent, lambda, "", s, {}});
        if (s.empty()) {
            out[id].kind = "empty";
            return;
        }
        Subgraph sub = induced_subgraph(g_, s);
        if (lambda == 0) {
            out[id].kind = "kt_free";
            return;
        }
        VertexSet free = sub.to_old(non_kt_vertices(sub.graph, t_));
        if (!free.empty()) {
            out[id].kind = "free";
            out[id].removed = free;
            explain(set_difference(s, free), lambda, id, out);
            return;
        }
        auto comps = connected_components(sub.graph);
        if (comps.size() > 1) {
            out[id].kind = "split";
            for (const auto& c : comps) {
                VertexSet cs = sub.to_old(c);
                explain(cs, minimal(cs, lambda), id, out);
            }
            return;
        }
        VertexSet root = find_root(sub, s, lambda);
        out[id].kind = "root";
        out[id].removed = root;
        VertexSet rest = set_difference(s, root);
        explain(rest, minimal(rest, lambda - 1), id, out);
    }

    int minimal(const VertexSet& s, int upper) {
        for (int l = 0; l <= upper; ++l)
            if (at_most(s, l)) return l;
        return upper + 1;
    }

    // A root T of the connected graph G[s] with bed+(G[s] - T) <= lambda - 1, in tie-break order.
    VertexSet find_root(const Subgraph& sub, const VertexSet& s, int lambda) {
        for (Vertex v : s)
            if (at_most(set_difference(s, {v}), lambda - 1)) return {v};
        for (const VertexSet& cand : root_candidates(sub.graph, t_)) {
            VertexSet old = sub.to_old(cand);
            if (at_most(set_difference(s, old), lambda - 1)) return old;
        }
        return {};
    }

private:
    bool compute(const VertexSet& s, int lambda) {
        Subgraph sub = induced_subgraph(g_, s);
        if (lambda == 0) return !has_t_clique(sub.graph, t_);
        VertexSet free = non_kt_vertices(sub.graph, t_);
        if (!free.empty()) return at_most(set_difference(s, sub.to_old(free)), lambda);
        auto comps = connected_components(sub.graph);
        if (comps.size() > 1) {
            for (const auto& c : comps)
                if (!at_most(sub.to_old(c), lambda)) return false;
            return true;
        }
        return !find_root(sub, s, lambda).empty();
    }

    const Graph& g_;
    int t_;
    std::unordered_map<std::vector<int>, bool, KeyHash> memo_;
};

}  // namespace

bool bed_at_most(const Graph& g, int t, int lambda) {
    if (lambda < 0) return false;
    BedEngine engine(g, t);
    return engine.at_most(all_vertices(g), lambda);
}

BedResult bed_value(const Graph& g, int t, int lambda_cap) {
    BedEngine engine(g, t);
    VertexSet all = all_vertices(g);
    BedResult res;
    res.value = engine.minimal(all, lambda_cap);
    if (res.value > lambda_cap)
        throw CapExceeded("bed+ exceeds the cap " + std::to_string(lambda_cap));
    engine.explain(all, res.value, -1, res.trace);
    return res;
}

int replay_bed_trace(const Graph& g, int t, const std::vector<BedStep>& trace) {
    if (trace.empty()) throw PreconditionViolated("empty trace");
    if (trace[0].parent != -1 || trace[0].vertices != all_vertices(g))
        throw PreconditionViolated("trace step 0 does not cover the whole graph");
    int n = static_cast<int>(trace.size());
    std::vector<std::vector<int>> children(n);
    for (int i = 1; i < n; ++i) {
        if (trace[i].parent < 0 || trace[i].parent >= i)
            throw PreconditionViolated("trace step " + std::to_string(i) + " has an invalid parent");
        children[trace[i].parent].push_back(i);
    }
    std::vector<int> value(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        const BedStep& st = trace[i];
        auto fail = [&](const std::string& why) {
            throw PreconditionViolated("trace step " + std::to_string(i) + " (" + st.kind + "): " + why);
        };
        Subgraph sub = induced_subgraph(g, st.vertices);
        if (st.kind == "empty") {
            if (!st.vertices.empty() || !children[i].empty()) fail("not an empty leaf");
            value[i] = 0;
        } else if (st.kind == "kt_free") {
            if (has_t_clique(sub.graph, t) || !children[i].empty()) fail("graph is not K_t-free");
            value[i] = 0;
        } else if (st.kind == "free") {
            VertexSet allowed = sub.to_old(non_kt_vertices(sub.graph, t));
            if (st.removed.empty() || !is_subset(st.removed, allowed)) fail("removed vertices are not free");
            if (children[i].size() != 1 || trace[children[i][0]].vertices != set_difference(st.vertices, st.removed))
                fail("child does not match the remainder");
            value[i] = value[children[i][0]];
        } else if (st.kind == "split") {
            std::vector<VertexSet> comps;
            for (const auto& c : connected_components(sub.graph)) comps.push_back(sub.to_old(c));
            if (comps.size() < 2 || comps.size() != children[i].size()) fail("children are not the components");
            int best = 0;
            for (std::size_t c = 0; c < comps.size(); ++c) {
                if (trace[children[i][c]].vertices != comps[c]) fail("child does not match a component");
                best = std::max(best, value[children[i][c]]);
            }
            value[i] = best;
        } else if (st.kind == "root") {
            if (!is_connected(sub.graph)) fail("graph is not connected");
            if (!non_kt_vertices(sub.graph, t).empty()) fail("free vertices remain");
            if (!is_subset(st.removed, st.vertices)) fail("root outside the graph");
            RootCheck rc = validate_single_root(sub.graph, t, sub.to_new(st.removed));
            if (!rc.ok) fail(rc.diagnostic);
            if (children[i].size() != 1 || trace[children[i][0]].vertices != set_difference(st.vertices, st.removed))
                fail("child does not match the remainder");
            value[i] = 1 + value[children[i][0]];
        } else {
            fail("unknown step kind");
        }
    }
    return value[0];
}

RootDecomposition compute_bed_root(const Graph& g, int t, int lambda) {
    if (g.num_vertices() == 0) throw PreconditionViolated("compute_bed_root on the empty graph");
    if (!non_kt_vertices(g, t).empty()) throw PreconditionViolated("compute_bed_root requires N^t(G) to be empty");
    BedEngine engine(g, t);
    VertexSet all = all_vertices(g);
    int global = engine.minimal(all, lambda);
    if (global > lambda) throw PreconditionViolated("bed+ exceeds lambda = " + std::to_string(lambda));
    if (global == 0) throw PreconditionViolated("compute_bed_root requires bed+ >= 1");
    std::vector<VertexSet> roots;
    for (const VertexSet& comp : connected_components(g)) {
        int local = engine.minimal(comp, global);
        if (local < global) {
            roots.push_back({comp.front()});
            continue;
        }
        Subgraph sub = induced_subgraph(g, comp);
        VertexSet r = engine.find_root(sub, comp, local);
        if (r.empty()) throw InvariantBroken("no bed+-root among the candidate roots");
        roots.push_back(r);
    }
    return pending_partition(g, t, {}, roots);
}

}  // namespace kthit
