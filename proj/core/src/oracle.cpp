#include "kthit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "kthit/errors.hpp"

namespace kthit::oracle {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s) m |= bit(v);
    return m;
}

VertexSet from_mask(Mask m) {
    VertexSet s;
    while (m) {
        s.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

int popcount(Mask m) { return std::popcount(m); }

Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

// Vertices with an id larger than v.
Mask above(int v) { return v >= 63 ? 0 : ~(bit(v + 1) - 1); }

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.num_vertices(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    return adj;
}

// All cliques with exactly `size` vertices, as masks.
std::vector<Mask> cliques_of_size(const std::vector<Mask>& adj, int size) {
    std::vector<Mask> out;
    int n = static_cast<int>(adj.size());
    std::function<void(Mask, Mask, int)> grow = [&](Mask chosen, Mask cand, int left) {
        if (left == 0) {
            out.push_back(chosen);
            return;
        }
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            grow(chosen | bit(v), cand & adj[v], left - 1);
        }
    };
    if (size == 0) return {0};
    grow(0, full_mask(n), size);
    return out;
}

void check_cap(int n, int cap, const char* what) {
    if (n > cap) throw CapExceeded(std::string(what) + ": " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
}

// Component masks of the graph induced by `within`.
std::vector<Mask> components_of(const std::vector<Mask>& adj, Mask within) {
    std::vector<Mask> out;
    Mask left = within;
    while (left) {
        Mask comp = left & (~left + 1);
        Mask frontier = comp;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            Mask fresh = adj[v] & within & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

// Minimum set meeting every constraint, searched with branching on the first open constraint.
// Vertices excluded on earlier sibling branches are forbidden, so each set is explored once.
// Returns false when no set smaller than `bound` exists.
bool min_hitting(const std::vector<Mask>& constraints, int bound, Mask& best_out) {
    int best = bound;
    bool found = false;
    Mask best_mask = 0;
    std::function<void(Mask, Mask, int)> rec = [&](Mask chosen, Mask forbidden, int count) {
        // Lower bound: a greedy packing of pairwise disjoint open constraints.
        const Mask* open = nullptr;
        int packing = 0;
        Mask used = 0;
        for (const Mask& c : constraints) {
            if (c & chosen) continue;
            Mask avail = c & ~forbidden;
            if (!avail) return;
            if (!open || popcount(avail) < popcount(*open & ~forbidden)) open = &c;
            if (!(avail & used)) {
                ++packing;
                used |= avail;
            }
        }
        if (!open) {
            if (count < best) {
                best = count;
                best_mask = chosen;
                found = true;
            }
            return;
        }
        if (count + packing >= best) return;
        Mask avail = *open & ~forbidden;
        Mask excluded = 0;
        while (avail) {
            int v = std::countr_zero(avail);
            avail &= avail - 1;
            rec(chosen | bit(v), forbidden | excluded, count + 1);
            excluded |= bit(v);
        }
    };
    rec(0, 0, 0);
    if (found) best_out = best_mask;
    return found;
}

std::vector<Mask> ekt_constraints(const ExtendedInstance& inst) {
    auto adj = adjacency_masks(inst.graph);
    std::vector<Mask> cons = cliques_of_size(adj, inst.t);
    for (const VertexSet& z : inst.family) {
        if (z.empty()) throw PreconditionViolated("family member is empty");
        for (Vertex v : z)
            if (v < 0 || v >= inst.graph.num_vertices()) throw PreconditionViolated("family member out of range");
        cons.push_back(to_mask(z));
    }
    return cons;
}

bool hits_all(const std::vector<Mask>& cons, Mask s) {
    for (Mask c : cons)
        if (!(c & s)) return false;
    return true;
}

// All masks over n bits with exactly k bits set, in increasing numeric order.
template <class F>
void for_each_combination(int n, int k, F&& f) {
    if (k == 0) {
        f(Mask{0});
        return;
    }
    if (k > n) return;
    Mask m = bit(k) - 1;
    Mask limit = bit(n);
    while (m < limit) {
        f(m);
        Mask c = m & (~m + 1);
        Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

std::vector<Mask> optimal_masks(const ExtendedInstance& inst) {
    check_cap(inst.graph.num_vertices(), kBruteOptCap, "brute_opt_ekt");
    auto cons = ekt_constraints(inst);
    int n = inst.graph.num_vertices();
    Mask witness = full_mask(n);
    int opt = n;
    if (min_hitting(cons, n + 1, witness)) opt = popcount(witness);
    std::vector<Mask> out;
    for_each_combination(n, opt, [&](Mask m) {
        if (hits_all(cons, m)) out.push_back(m);
    });
    return out;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

OracleReport brute_opt_ekt(const ExtendedInstance& inst) {
    auto start = std::chrono::steady_clock::now();
    check_cap(inst.graph.num_vertices(), kBruteOptCap, "brute_opt_ekt");
    auto cons = ekt_constraints(inst);
    int n = inst.graph.num_vertices();
    Mask witness = full_mask(n);
    min_hitting(cons, n + 1, witness);
    OracleReport r;
    r.value = popcount(witness);
    r.witness = from_mask(witness);
    r.elapsed_ms = elapsed_since(start);
    return r;
}

std::vector<VertexSet> all_optimal_solutions(const ExtendedInstance& inst) {
    std::vector<VertexSet> out;
    for (Mask m : optimal_masks(inst)) out.push_back(from_mask(m));
    std::sort(out.begin(), out.end());
    return out;
}

bool decide_kt_hitting(const Graph& g, int t, long long k) {
    check_cap(g.num_vertices(), kCopyHittingCap, "decide_kt_hitting");
    if (k < 0) return false;
    auto cons = cliques_of_size(adjacency_masks(g), t);
    if (cons.empty()) return true;
    if (k >= g.num_vertices()) return true;
    Mask witness = 0;
    return min_hitting(cons, static_cast<int>(k) + 1, witness);
}

OracleReport brute_bed_plus(const Graph& g, int t) {
    auto start = std::chrono::steady_clock::now();
    check_cap(g.num_vertices(), kBruteBedCap, "brute_bed_plus");
    auto adj = adjacency_masks(g);
    auto cliques = cliques_of_size(adj, t);
    std::unordered_map<Mask, int> memo;

    auto is_connected_mask = [&](Mask s) { return s && components_of(adj, s).size() == 1; };
    auto kt_free_mask = [&](Mask s) {
        for (Mask c : cliques)
            if ((c & s) == c) return false;
        return true;
    };
    // Def. of root: connected, K_t-free, and every component of the rest has exactly one neighbor in it.
    auto is_root = [&](Mask whole, Mask root) {
        if (!is_connected_mask(root) || !kt_free_mask(root)) return false;
        for (Mask comp : components_of(adj, whole & ~root)) {
            Mask nb = 0;
            for (Mask rest = comp; rest; rest &= rest - 1) nb |= adj[std::countr_zero(rest)];
            if (popcount(nb & root) != 1) return false;
        }
        return true;
    };

    std::function<int(Mask)> rec = [&](Mask s) -> int {
        if (!s) return 0;
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        Mask covered = 0;
        for (Mask c : cliques)
            if ((c & s) == c) covered |= c;
        int value;
        if (covered != s) {
            value = rec(covered);
        } else {
            auto comps = components_of(adj, s);
            if (comps.size() > 1) {
                value = 0;
                for (Mask c : comps) value = std::max(value, rec(c));
            } else {
                value = popcount(s) + 1;
                for (Mask root = (s - 1) & s;; root = (root - 1) & s) {
                    if (root && is_root(s, root)) value = std::min(value, 1 + rec(s & ~root));
                    if (!root) break;
                }
                // The whole graph is never K_t-free here, so it is not a root of itself.
            }
        }
        memo[s] = value;
        return value;
    };
    OracleReport r;
    r.value = rec(full_mask(g.num_vertices()));
    r.elapsed_ms = elapsed_since(start);
    return r;
}

std::vector<VertexSet> copy_vertex_sets(const Graph& h, const Graph& g, bool induced) {
    check_cap(g.num_vertices(), kCopyHittingCap, "copy_vertex_sets");
    int k = h.num_vertices();
    if (k > 8) throw CapExceeded("copy_vertex_sets: pattern has more than 8 vertices");
    if (k == 0) return {VertexSet{}};
    auto gadj = adjacency_masks(g);
    auto hedges = h.edges();
    int n = g.num_vertices();

    // Does g[set] contain h on exactly these vertices?
    auto spans_copy = [&](const VertexSet& s) {
        int g_edges = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.adjacent(s[i], s[j])) ++g_edges;
        if (g_edges < h.num_edges() || (induced && g_edges != h.num_edges())) return false;
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (auto [a, b] : hedges)
                if (!g.adjacent(s[perm[a]], s[perm[b]])) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };

    std::vector<VertexSet> out;
    bool connected_pattern = is_connected(h);
    if (connected_pattern) {
        // Connected vertex subsets of size k, each generated once (ESU enumeration).
        std::function<void(Mask, Mask, int, Mask)> extend = [&](Mask sub, Mask ext, int root, Mask closed) {
            if (popcount(sub) == k) {
                VertexSet s = from_mask(sub);
                if (spans_copy(s)) out.push_back(s);
                return;
            }
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                Mask fresh = gadj[w] & ~closed & ~sub & ~ext & above(root);
                extend(sub | bit(w), ext | fresh, root, closed | fresh | bit(w));
            }
        };
        for (int v = 0; v < n; ++v) {
            Mask ext = gadj[v] & above(v);
            extend(bit(v), ext, v, bit(v) | gadj[v]);
        }
    } else {
        for_each_combination(n, k, [&](Mask m) {
            VertexSet s = from_mask(m);
            if (spans_copy(s)) out.push_back(s);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

OracleReport brute_ved_plus(const Graph& g, const Graph& h, bool induced) {
    auto start = std::chrono::steady_clock::now();
    if (h.num_vertices() > kBruteVedPatternCap) throw CapExceeded("brute_ved_plus: pattern exceeds 6 vertices");
    auto adj = adjacency_masks(g);
    std::vector<Mask> copies;
    for (const VertexSet& c : copy_vertex_sets(h, g, induced)) copies.push_back(to_mask(c));
    std::unordered_map<Mask, int> memo;
    std::function<int(Mask)> rec = [&](Mask s) -> int {
        if (!s) return 0;
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        Mask covered = 0;
        for (Mask c : copies)
            if ((c & s) == c) covered |= c;
        int value;
        if (covered != s) {
            value = rec(covered);
        } else {
            auto comps = components_of(adj, s);
            if (comps.size() > 1) {
                value = 0;
                for (Mask c : comps) value = std::max(value, rec(c));
            } else {
                check_cap(popcount(s), kBruteVedCap, "brute_ved_plus branching component");
                value = popcount(s);
                for (Mask rest = s; rest; rest &= rest - 1) value = std::min(value, 1 + rec(s & ~(rest & (~rest + 1))));
            }
        }
        memo[s] = value;
        return value;
    };
    OracleReport r;
    r.value = rec(full_mask(g.num_vertices()));
    r.elapsed_ms = elapsed_since(start);
    return r;
}

OracleReport brute_opt_h_hitting(const Graph& g, const Graph& h, bool induced) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Mask> copies;
    for (const VertexSet& c : copy_vertex_sets(h, g, induced)) copies.push_back(to_mask(c));
    int n = g.num_vertices();
    Mask witness = full_mask(n);
    min_hitting(copies, n + 1, witness);
    OracleReport r;
    r.value = popcount(witness);
    r.witness = from_mask(witness);
    r.elapsed_ms = elapsed_since(start);
    return r;
}

std::vector<VertexSet> all_optimal_h_hitting_sets(const Graph& g, const Graph& h, bool induced) {
    check_cap(g.num_vertices(), kBruteOptCap, "all_optimal_h_hitting_sets");
    std::vector<Mask> copies;
    for (const VertexSet& c : copy_vertex_sets(h, g, induced)) copies.push_back(to_mask(c));
    int n = g.num_vertices();
    std::vector<VertexSet> out;
    for (int size = 0; size <= n && out.empty(); ++size)
        for_each_combination(n, size, [&](Mask m) {
            if (hits_all(copies, m)) out.push_back(from_mask(m));
        });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_blocking_set(const ExtendedInstance& inst, const CliqueFamily& b) {
    for (const VertexSet& z : b) {
        if (z.empty() || static_cast<int>(z.size()) > inst.t - 1) return false;
        for (Vertex v : z)
            if (v < 0 || v >= inst.graph.num_vertices()) return false;
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = i + 1; j < z.size(); ++j)
                if (!inst.graph.adjacent(z[i], z[j])) return false;
    }
    ExtendedInstance with = inst;
    with.family.insert(with.family.end(), b.begin(), b.end());
    return brute_opt_ekt(with).value > brute_opt_ekt(inst).value;
}

namespace {

struct BlockingGround {
    std::vector<Mask> opt;      // optimal solutions of the instance
    std::vector<Mask> cliques;  // candidate blocking members
    std::vector<Mask> hit;      // hit[q]: bit i set when opt[i] meets cliques[q]
};

BlockingGround blocking_ground(const ExtendedInstance& inst) {
    BlockingGround gr;
    gr.opt = optimal_masks(inst);
    if (gr.opt.size() > 64) throw CapExceeded("more than 64 optimal solutions");
    auto adj = adjacency_masks(inst.graph);
    for (int s = 1; s <= inst.t - 1; ++s)
        for (Mask q : cliques_of_size(adj, s)) gr.cliques.push_back(q);
    for (Mask q : gr.cliques) {
        Mask h = 0;
        for (std::size_t i = 0; i < gr.opt.size(); ++i)
            if (gr.opt[i] & q) h |= bit(static_cast<int>(i));
        gr.hit.push_back(h);
    }
    return gr;
}

// A set of members is blocking exactly when no optimal solution meets all of them.
Mask common_hits(const BlockingGround& gr, const std::vector<int>& chosen) {
    Mask all = full_mask(static_cast<int>(gr.opt.size()));
    for (int q : chosen) all &= gr.hit[q];
    return all;
}

}  // namespace

std::vector<CliqueFamily> minimal_blocking_sets(const ExtendedInstance& inst, int size_cap) {
    BlockingGround gr = blocking_ground(inst);
    int nq = static_cast<int>(gr.cliques.size());
    if (nq > kBlockingGroundCap) throw CapExceeded("minimal_blocking_sets: more than 18 candidate cliques");
    std::vector<CliqueFamily> out;
    for (int size = 1; size <= std::min(size_cap, nq); ++size)
        for_each_combination(nq, size, [&](Mask m) {
            std::vector<int> chosen;
            for (Mask r = m; r; r &= r - 1) chosen.push_back(std::countr_zero(r));
            if (common_hits(gr, chosen)) return;
            for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
                std::vector<int> rest = chosen;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!common_hits(gr, rest)) return;
            }
            CliqueFamily fam;
            for (int q : chosen) fam.push_back(from_mask(gr.cliques[q]));
            canonicalize(fam);
            out.push_back(fam);
        });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Search for the largest minimal blocking set. With `closure`, the family is the set of all
// cliques met by every chosen solution (the largest clean family keeping them optimal); without
// it, the family is fixed and every optimal solution must be blocked.
struct WitnessSearch {
    const BlockingGround& gr;
    bool closure;
    long long budget;
    long long nodes = 0;
    bool exhausted = false;
    int best = 0;
    std::vector<int> best_sigma;
    std::vector<int> best_choice;

    Mask all_opt() const { return full_mask(static_cast<int>(gr.opt.size())); }

    // Choose B_j from cand[j] so that every solution in `rest` misses one of them.
    bool assign(const std::vector<std::vector<int>>& cand, std::vector<int>& choice, Mask rest) {
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        Mask open = rest;
        for (std::size_t j = 0; j < choice.size(); ++j)
            if (choice[j] >= 0) open &= gr.hit[choice[j]];
        if (!open) {
            for (std::size_t j = 0; j < choice.size(); ++j)
                if (choice[j] < 0) choice[j] = cand[j].front();
            return true;
        }
        int s = std::countr_zero(open);
        for (std::size_t j = 0; j < choice.size(); ++j) {
            if (choice[j] >= 0) continue;
            for (int q : cand[j]) {
                if (gr.hit[q] & bit(s)) continue;
                choice[j] = q;
                std::vector<int> saved = choice;
                if (assign(cand, choice, rest)) return true;
                choice = saved;
                choice[j] = -1;
                if (exhausted) return false;
            }
        }
        return false;
    }

    void evaluate(const std::vector<int>& sigma, const std::vector<std::vector<int>>& cand) {
        Mask sig = 0;
        for (int i : sigma) sig |= bit(i);
        Mask cl = all_opt();
        if (closure)
            for (std::size_t q = 0; q < gr.cliques.size(); ++q)
                if ((gr.hit[q] & sig) == sig) cl &= gr.hit[q];
        std::vector<int> choice(sigma.size(), -1);
        if (assign(cand, choice, cl & ~sig)) {
            best = static_cast<int>(sigma.size());
            best_sigma = sigma;
            best_choice = choice;
        }
    }

    void dfs(std::vector<int>& sigma, std::vector<std::vector<int>>& cand, int next) {
        if (exhausted) return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (static_cast<int>(sigma.size()) > best) evaluate(sigma, cand);
        int total = static_cast<int>(gr.opt.size());
        if (static_cast<int>(sigma.size()) + (total - next) <= best) return;
        for (int s = next; s < total; ++s) {
            if (static_cast<int>(sigma.size()) + (total - s) <= best) return;
            std::vector<std::vector<int>> grown;
            bool ok = true;
            for (std::size_t j = 0; j < cand.size() && ok; ++j) {
                std::vector<int> keep;
                for (int q : cand[j])
                    if (gr.hit[q] & bit(s)) keep.push_back(q);
                if (keep.empty()) ok = false;
                grown.push_back(std::move(keep));
            }
            if (!ok) continue;
            std::vector<int> mine;
            for (std::size_t q = 0; q < gr.cliques.size(); ++q) {
                if (gr.opt[s] & gr.cliques[q]) continue;
                bool all = true;
                for (int i : sigma)
                    if (!(gr.hit[q] & bit(i))) all = false;
                if (all) mine.push_back(static_cast<int>(q));
            }
            if (mine.empty()) continue;
            grown.push_back(std::move(mine));
            sigma.push_back(s);
            dfs(sigma, grown, s + 1);
            sigma.pop_back();
            if (exhausted) return;
        }
    }
};

}  // namespace

OracleReport mmbs_instance(const ExtendedInstance& inst) {
    auto start = std::chrono::steady_clock::now();
    check_cap(inst.graph.num_vertices(), kBruteOptCap, "mmbs_instance");
    BlockingGround gr = blocking_ground(inst);
    WitnessSearch search{gr, false, kDefaultMmbsNodeBudget, 0, false, 0, {}, {}};
    std::vector<int> sigma;
    std::vector<std::vector<int>> cand;
    search.dfs(sigma, cand, 0);
    OracleReport r;
    r.value = search.best;
    r.exact = !search.exhausted;
    r.elapsed_ms = elapsed_since(start);
    return r;
}

MmbsResult mmbs_graph(const Graph& g, int t, long long node_budget) {
    check_cap(g.num_vertices(), kMmbsVertexCap, "mmbs_graph");
    MmbsResult res;
    if (g.num_vertices() == 0) return res;
    ExtendedInstance inst{g, {}, t};
    BlockingGround gr = blocking_ground(inst);
    WitnessSearch search{gr, true, node_budget, 0, false, 0, {}, {}};
    std::vector<int> sigma;
    std::vector<std::vector<int>> cand;
    search.dfs(sigma, cand, 0);
    res.value = search.best;
    res.exact = !search.exhausted;
    res.nodes = search.nodes;
    if (search.best > 0) {
        Mask sig = 0;
        for (int i : search.best_sigma) sig |= bit(i);
        for (std::size_t q = 0; q < gr.cliques.size(); ++q)
            if ((gr.hit[q] & sig) == sig) res.family.push_back(from_mask(gr.cliques[q]));
        for (int q : search.best_choice) res.blocking.push_back(from_mask(gr.cliques[q]));
        canonicalize(res.family);
        canonicalize(res.blocking);
    }
    return res;
}

int mmbs_graph_literal(const Graph& g, int t) {
    check_cap(g.num_vertices(), kMmbsVertexCap, "mmbs_graph_literal");
    auto adj = adjacency_masks(g);
    std::vector<Mask> small;
    for (int s = 1; s <= t - 1; ++s)
        for (Mask q : cliques_of_size(adj, s)) small.push_back(q);
    int nq = static_cast<int>(small.size());
    if (nq > 12) throw CapExceeded("mmbs_graph_literal: more than 12 candidate cliques");
    auto tcl = cliques_of_size(adj, t);
    int n = g.num_vertices();
    auto opt_of = [&](Mask fam) {
        std::vector<Mask> cons = tcl;
        for (Mask r = fam; r; r &= r - 1) cons.push_back(small[std::countr_zero(r)]);
        for (int size = 0; size <= n; ++size) {
            bool found = false;
            for_each_combination(n, size, [&](Mask m) {
                if (!found && hits_all(cons, m)) found = true;
            });
            if (found) return size;
        }
        return n + 1;
    };
    std::vector<int> opt(std::size_t{1} << nq);
    for (Mask f = 0; f < (Mask{1} << nq); ++f) opt[f] = opt_of(f);
    int best = 0;
    for (Mask f = 0; f < (Mask{1} << nq); ++f) {
        if (opt[f] != opt[0]) continue;  // not clean
        for (Mask b = 1; b < (Mask{1} << nq); ++b) {
            if (popcount(b) <= best) continue;
            if (opt[f | b] <= opt[f]) continue;
            bool minimal = true;
            for (Mask r = b; r && minimal; r &= r - 1)
                if (opt[f | (b & ~(r & (~r + 1)))] > opt[f]) minimal = false;
            if (minimal) best = popcount(b);
        }
    }
    return best;
}

CliqueFamily brute_project(const Graph& g, const VertexSet& a, const VertexSet& b, int t) {
    auto adj = adjacency_masks(g);
    Mask am = to_mask(a), bm = to_mask(b);
    CliqueFamily out;
    for (Mask k : cliques_of_size(adj, t)) {
        if ((k & ~(am | bm)) != 0) continue;
        if (!(k & am) || !(k & bm)) continue;
        out.push_back(from_mask(k & bm));
    }
    canonicalize(out);
    return out;
}

int brute_conflict_value(const Graph& g, const VertexSet& s1, const VertexSet& s2, int t) {
    CliqueFamily pr = brute_project(g, s1, s2, t);
    Subgraph sub = induced_subgraph(g, s2);
    CliqueFamily local;
    for (const VertexSet& z : pr) local.push_back(sub.to_new(z));
    long long base = brute_opt_ekt({sub.graph, {}, t}).value;
    long long with = brute_opt_ekt({sub.graph, local, t}).value;
    return static_cast<int>(with - base);
}

}  // namespace kthit::oracle
