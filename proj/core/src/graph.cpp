#include "kthit/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "kthit/errors.hpp"

namespace kthit {

VertexSet make_set(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void canonicalize(CliqueFamily& family) {
    for (auto& s : family) s = make_set(std::move(s));
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

Graph::Graph(int n) : n_(n), adj_(n) { grow_rows(); }

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (!add_edge(u, v))
            throw PreconditionViolated("parallel edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
}

void Graph::grow_rows() {
    std::size_t words = (static_cast<std::size_t>(n_) + 63) / 64;
    rows_.resize(n_);
    for (auto& r : rows_) r.resize(words, 0);
}

Vertex Graph::add_vertex() {
    adj_.emplace_back();
    ++n_;
    grow_rows();
    return n_ - 1;
}

bool Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw PreconditionViolated("vertex id out of range in edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u == v) throw PreconditionViolated("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return false;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    rows_[u][static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    rows_[v][static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
    ++m_;
    return true;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Subgraph::to_old(const VertexSet& s) const {
    VertexSet out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(new_to_old[v]);
    return make_set(std::move(out));
}

VertexSet Subgraph::to_new(const VertexSet& s) const {
    VertexSet out;
    for (Vertex v : s)
        if (v >= 0 && v < static_cast<Vertex>(old_to_new.size()) && old_to_new[v] >= 0) out.push_back(old_to_new[v]);
    return make_set(std::move(out));
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    Subgraph sub;
    sub.old_to_new.assign(g.num_vertices(), -1);
    sub.new_to_old = keep;
    for (std::size_t i = 0; i < keep.size(); ++i) sub.old_to_new[keep[i]] = static_cast<Vertex>(i);
    sub.graph = Graph(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : g.neighbors(keep[i])) {
            Vertex j = sub.old_to_new[w];
            if (j > static_cast<Vertex>(i)) sub.graph.add_edge(static_cast<Vertex>(i), j);
        }
    return sub;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& drop) {
    return induced_subgraph(g, set_difference(all_vertices(g), drop));
}

VertexSet all_vertices(const Graph& g) {
    VertexSet out(g.num_vertices());
    std::iota(out.begin(), out.end(), 0);
    return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

namespace {

// Extends `current` by larger neighbors; reports cliques with size in [lo, hi].
void grow_cliques(const Graph& g, VertexSet& current, const std::vector<Vertex>& cands, int lo, int hi,
                  const std::function<bool(const VertexSet&)>& emit, bool& stop) {
    if (stop) return;
    int sz = static_cast<int>(current.size());
    if (sz >= lo && sz >= 1) {
        if (!emit(current)) { stop = true; return; }
    }
    if (sz == hi) return;
    for (std::size_t i = 0; i < cands.size() && !stop; ++i) {
        Vertex v = cands[i];
        std::vector<Vertex> next;
        for (std::size_t j = i + 1; j < cands.size(); ++j)
            if (g.adjacent(v, cands[j])) next.push_back(cands[j]);
        if (sz + 1 + static_cast<int>(next.size()) < lo) continue;
        current.push_back(v);
        grow_cliques(g, current, next, lo, hi, emit, stop);
        current.pop_back();
    }
}

void for_each_clique(const Graph& g, const VertexSet& within, int lo, int hi,
                     const std::function<bool(const VertexSet&)>& emit) {
    VertexSet cur;
    bool stop = false;
    grow_cliques(g, cur, within, lo, hi, emit, stop);
}

}  // namespace

std::vector<VertexSet> enumerate_cliques(const Graph& g, int min_size, int max_size) {
    std::vector<VertexSet> out;
    if (max_size < 1 || min_size > max_size) return out;
    for_each_clique(g, all_vertices(g), std::max(min_size, 1), max_size, [&](const VertexSet& c) {
        if (static_cast<int>(c.size()) >= min_size) out.push_back(c);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> enumerate_t_cliques(const Graph& g, int t) {
    if (t < 1) return {};
    return enumerate_cliques(g, t, t);
}

bool has_t_clique_within(const Graph& g, const VertexSet& s, int t) {
    if (t <= 0) return true;
    if (static_cast<int>(s.size()) < t) return false;
    bool found = false;
    for_each_clique(g, s, t, t, [&](const VertexSet&) {
        found = true;
        return false;
    });
    return found;
}

bool has_t_clique(const Graph& g, int t) { return has_t_clique_within(g, all_vertices(g), t); }

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.num_vertices(), 0);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        if (seen[s]) continue;
        VertexSet comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        comps.push_back(make_set(std::move(comp)));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    if (s.empty()) return true;
    std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
    for (Vertex v : s) in[v] = 1;
    std::vector<Vertex> stack{s.front()};
    seen[s.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == s.size();
}

bool verify_embedding(const Graph& h, const Graph& g, const std::vector<Vertex>& map, bool induced) {
    if (static_cast<int>(map.size()) != h.num_vertices()) return false;
    std::vector<Vertex> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex x : map)
        if (x < 0 || x >= g.num_vertices()) return false;
    for (Vertex p = 0; p < h.num_vertices(); ++p)
        for (Vertex q = p + 1; q < h.num_vertices(); ++q) {
            bool he = h.adjacent(p, q);
            bool ge = g.adjacent(map[p], map[q]);
            if (he && !ge) return false;
            if (induced && !he && ge) return false;
        }
    return true;
}

OccurrenceResult occurrences_of(const Graph& h, const Graph& g, bool induced, int cap) {
    if (h.num_vertices() > cap)
        throw CapExceeded("pattern has " + std::to_string(h.num_vertices()) + " vertices, cap is " + std::to_string(cap));
    OccurrenceResult res;
    int k = h.num_vertices();
    if (k == 0) {
        res.found = true;
        return res;
    }
    if (k > g.num_vertices()) return res;

    // Pattern order: highest degree first, then the vertex with most already-ordered neighbors.
    std::vector<Vertex> order;
    std::vector<char> placed(k, 0);
    while (static_cast<int>(order.size()) < k) {
        Vertex best = -1;
        int best_links = -1, best_deg = -1;
        for (Vertex p = 0; p < k; ++p) {
            if (placed[p]) continue;
            int links = 0;
            for (Vertex q : h.neighbors(p)) links += placed[q];
            if (links > best_links || (links == best_links && h.degree(p) > best_deg)) {
                best = p;
                best_links = links;
                best_deg = h.degree(p);
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }

    std::vector<Vertex> map(k, -1);
    std::vector<char> used(g.num_vertices(), 0);
    std::function<bool(int)> extend = [&](int depth) -> bool {
        if (depth == k) return true;
        Vertex p = order[depth];
        for (Vertex x = 0; x < g.num_vertices(); ++x) {
            if (used[x] || g.degree(x) < h.degree(p)) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                Vertex q = order[d];
                bool he = h.adjacent(p, q);
                bool ge = g.adjacent(x, map[q]);
                if (he && !ge) ok = false;
                if (induced && !he && ge) ok = false;
            }
            if (!ok) continue;
            map[p] = x;
            used[x] = 1;
            if (extend(depth + 1)) return true;
            used[x] = 0;
            map[p] = -1;
        }
        return false;
    };
    if (extend(0)) {
        res.found = true;
        res.witness = map;
    }
    return res;
}

BlockDecomposition biconnected_components(const Graph& g) {
    int n = g.num_vertices();
    BlockDecomposition out;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
        int children;
    };
    std::vector<std::pair<VertexSet, std::vector<std::pair<Vertex, Vertex>>>> found;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        disc[root] = low[root] = timer++;
        std::vector<Frame> stack{{root, -1, 0, 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            Vertex v = f.v;
            if (f.next < g.neighbors(v).size()) {
                Vertex w = g.neighbors(v)[f.next++];
                if (disc[w] == -1) {
                    edge_stack.emplace_back(std::min(v, w), std::max(v, w));
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    stack.push_back({w, v, 0, 0});
                } else if (w != f.parent && disc[w] < disc[v]) {
                    edge_stack.emplace_back(std::min(v, w), std::max(v, w));
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children > 1) is_cut[done.v] = 1;
                continue;
            }
            Vertex u = stack.back().v;
            low[u] = std::min(low[u], low[done.v]);
            if (low[done.v] >= disc[u]) {
                if (stack.back().parent != -1) is_cut[u] = 1;
                std::vector<std::pair<Vertex, Vertex>> block_edges;
                std::pair<Vertex, Vertex> stop{std::min(u, done.v), std::max(u, done.v)};
                while (true) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    block_edges.push_back(e);
                    if (e == stop) break;
                }
                std::vector<Vertex> vs;
                for (auto [a, b] : block_edges) {
                    vs.push_back(a);
                    vs.push_back(b);
                }
                std::sort(block_edges.begin(), block_edges.end());
                found.emplace_back(make_set(std::move(vs)), std::move(block_edges));
            }
        }
    }
    std::sort(found.begin(), found.end());
    for (auto& [vs, es] : found) {
        out.blocks.push_back(vs);
        out.block_edges.push_back(es);
    }
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

namespace {

using Mask = std::uint32_t;

struct TdSolver {
    std::vector<Mask> adj;
    std::unordered_map<Mask, std::pair<int, int>> memo;  // mask -> (depth, chosen local vertex)

    std::vector<Mask> components(Mask m) const {
        std::vector<Mask> out;
        while (m) {
            Mask start = m & (~m + 1);
            Mask comp = start, frontier = start;
            while (frontier) {
                int v = __builtin_ctz(frontier);
                frontier &= frontier - 1;
                Mask add = adj[v] & m & ~comp;
                comp |= add;
                frontier |= add;
            }
            out.push_back(comp);
            m &= ~comp;
        }
        return out;
    }

    // Treedepth of a connected vertex mask.
    int connected(Mask m) {
        if (__builtin_popcount(m) <= 1) return __builtin_popcount(m);
        auto it = memo.find(m);
        if (it != memo.end()) return it->second.first;
        int best = 1 << 30, best_v = -1;
        for (Mask rest = m; rest; rest &= rest - 1) {
            int v = __builtin_ctz(rest);
            int d = 0;
            for (Mask c : components(m & ~(Mask{1} << v))) {
                d = std::max(d, connected(c));
                if (1 + d >= best) break;
            }
            if (1 + d < best) {
                best = 1 + d;
                best_v = v;
            }
        }
        memo[m] = {best, best_v};
        return best;
    }

    void build(Mask m, int parent, const std::vector<Vertex>& labels, std::vector<Vertex>& out) {
        for (Mask c : components(m)) {
            int v;
            if (__builtin_popcount(c) == 1) {
                v = __builtin_ctz(c);
            } else {
                connected(c);
                v = memo[c].second;
            }
            out[labels[v]] = parent < 0 ? -1 : labels[parent];
            build(c & ~(Mask{1} << v), v, labels, out);
        }
    }
};

}  // namespace

TreedepthResult treedepth_exact(const Graph& g, int cap) {
    TreedepthResult res;
    res.parent.assign(g.num_vertices(), -1);
    for (const VertexSet& comp : connected_components(g)) {
        if (static_cast<int>(comp.size()) > cap || comp.size() > 31)
            throw CapExceeded("treedepth component has " + std::to_string(comp.size()) + " vertices, cap is " +
                              std::to_string(cap));
        Subgraph sub = induced_subgraph(g, comp);
        TdSolver solver;
        int k = sub.graph.num_vertices();
        solver.adj.assign(k, 0);
        for (Vertex v = 0; v < k; ++v)
            for (Vertex w : sub.graph.neighbors(v)) solver.adj[v] |= Mask{1} << w;
        Mask full = k == 32 ? ~Mask{0} : ((Mask{1} << k) - 1);
        res.depth = std::max(res.depth, solver.connected(full));
        solver.build(full, -1, sub.new_to_old, res.parent);
    }
    return res;
}

int elimination_forest_depth(const Graph& g, const std::vector<Vertex>& parent) {
    int n = g.num_vertices();
    if (static_cast<int>(parent.size()) != n) return -1;
    std::vector<int> depth(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        int d = 0;
        Vertex x = v;
        while (x != -1) {
            if (x < -1 || x >= n || ++d > n) return -1;
            x = parent[x];
        }
        depth[v] = d;
    }
    auto is_ancestor = [&](Vertex a, Vertex b) {
        for (Vertex x = parent[b]; x != -1; x = parent[x])
            if (x == a) return true;
        return false;
    };
    for (auto [u, v] : g.edges())
        if (!is_ancestor(u, v) && !is_ancestor(v, u)) return -1;
    int best = 0;
    for (int d : depth) best = std::max(best, d);
    return best;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph diamond_graph() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.num_vertices() + b.num_vertices());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.num_vertices(), v + a.num_vertices());
    return g;
}

}  // namespace kthit
