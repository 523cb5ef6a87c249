#include "kthit/ekt.hpp"

#include <functional>

#include "kthit/decomposition.hpp"
#include "kthit/errors.hpp"

namespace kthit {

void validate_family(const Graph& g, const CliqueFamily& family, int t) {
    for (const VertexSet& z : family) {
        if (z.empty() || static_cast<int>(z.size()) > t - 1)
            throw PreconditionViolated("family member size must be in [1, t-1]");
        if (make_set(z) != z) throw PreconditionViolated("family member is not a sorted set");
        for (Vertex v : z)
            if (v < 0 || v >= g.num_vertices()) throw PreconditionViolated("family member references a missing vertex");
        if (!is_clique(g, z)) throw PreconditionViolated("family member is not a clique");
    }
}

bool is_valid_solution(const Graph& g, const CliqueFamily& family, int t, const VertexSet& s) {
    for (const VertexSet& z : family)
        if (!intersects(z, s)) return false;
    return !has_t_clique(remove_vertices(g, s).graph, t);
}

CliqueFamily project(const Graph& g, const VertexSet& a, const VertexSet& b, int t) {
    if (intersects(a, b)) throw PreconditionViolated("project requires disjoint sets");
    Subgraph sub = induced_subgraph(g, set_union(a, b));
    CliqueFamily out;
    for (const VertexSet& k : enumerate_t_cliques(sub.graph, t)) {
        VertexSet ko = sub.to_old(k);
        VertexSet kb = set_intersection(ko, b);
        if (kb.empty() || kb.size() == ko.size()) continue;
        out.push_back(kb);
    }
    canonicalize(out);
    return out;
}

namespace {

// Family members lying inside `keep`, relabeled into the subgraph.
CliqueFamily restrict_family(const CliqueFamily& f, const Subgraph& sub) {
    CliqueFamily out;
    for (const VertexSet& z : f) {
        bool inside = true;
        for (Vertex v : z)
            if (sub.old_to_new[v] < 0) inside = false;
        if (inside) out.push_back(sub.to_new(z));
    }
    canonicalize(out);
    return out;
}

// Minimum vertex set of size <= budget meeting every member. Returns false when none exists.
bool min_hitting_within(const CliqueFamily& members, int budget, VertexSet& best) {
    for (int limit = 0; limit <= budget; ++limit) {
        VertexSet chosen;
        std::function<bool(int)> search = [&](int left) -> bool {
            const VertexSet* open = nullptr;
            for (const VertexSet& z : members)
                if (!intersects(z, chosen)) {
                    open = &z;
                    break;
                }
            if (!open) return true;
            if (left == 0) return false;
            for (Vertex v : *open) {
                VertexSet saved = chosen;
                chosen = set_union(chosen, {v});
                if (search(left - 1)) return true;
                chosen = saved;
            }
            return false;
        };
        if (search(limit)) {
            best = chosen;
            return true;
        }
    }
    return false;
}

VertexSet solve_rec(const Graph& g, const CliqueFamily& f, int t, int lambda, int kappa);

VertexSet solve_lambda0(const Graph& g, const CliqueFamily& f, int t, int kappa) {
    if (has_t_clique(g, t)) return all_vertices(g);
    if (f.empty()) return {};
    if (kappa == 0) return all_vertices(g);
    VertexSet best = all_vertices(g);
    for (Vertex v : f.front()) {
        CliqueFamily rest;
        for (const VertexSet& z : f)
            if (!contains(z, v)) rest.push_back(z);
        Subgraph sub = remove_vertices(g, {v});
        VertexSet s = sub.to_old(solve_lambda0(sub.graph, restrict_family(rest, sub), t, kappa - 1));
        s = set_union(s, {v});
        if (s.size() < best.size()) best = s;
    }
    return best;
}

VertexSet solve_with_free_vertices(const Graph& g, const CliqueFamily& f, int t, int lambda, int kappa,
                                   const VertexSet& z) {
    VertexSet rest = set_difference(all_vertices(g), z);
    Subgraph sub = induced_subgraph(g, rest);
    VertexSet best;
    bool found = false;
    int max_size = std::min<int>(kappa, static_cast<int>(z.size()));
    for (int size = 0; size <= max_size; ++size) {
        // Guesses of the given size in lexicographic order.
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            VertexSet guess;
            for (int i : idx) guess.push_back(z[i]);
            CliqueFamily projected;
            bool valid = true;
            for (const VertexSet& m : f) {
                if (intersects(m, guess)) continue;
                VertexSet trace = set_difference(m, z);
                if (trace.empty()) {
                    valid = false;
                    break;
                }
                projected.push_back(sub.to_new(trace));
            }
            if (valid) {
                canonicalize(projected);
                VertexSet s = set_union(guess, sub.to_old(solve_rec(sub.graph, projected, t, lambda, kappa - size)));
                if (!found || s.size() < best.size()) {
                    best = s;
                    found = true;
                }
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == static_cast<int>(z.size()) - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return found ? best : all_vertices(g);
}

VertexSet solve_with_root(const Graph& g, const CliqueFamily& f, int t, int lambda, int kappa) {
    RootDecomposition dec;
    try {
        dec = compute_bed_root(g, t, lambda);
    } catch (const PreconditionViolated&) {
        return all_vertices(g);
    }
    const VertexSet& root = dec.roots.front();
    auto cliques = enumerate_t_cliques(g, t);
    VertexSet result;
    VertexSet t_prime;
    for (Vertex v : root) {
        const VertexSet& c = dec.pending.at(v);
        VertexSet d = set_difference(c, {v});
        Subgraph dsub = induced_subgraph(g, d);

        VertexSet plus = set_union({v}, dsub.to_old(solve_rec(dsub.graph, restrict_family(f, dsub), t, lambda - 1, kappa)));

        CliqueFamily h_prime;
        bool has_empty = false;
        for (const VertexSet& z : f) {
            if (!is_subset(z, c)) continue;
            VertexSet r = set_difference(z, {v});
            if (r.empty()) has_empty = true;
            else h_prime.push_back(dsub.to_new(r));
        }
        for (const VertexSet& k : cliques)
            if (contains(k, v) && is_subset(k, c)) h_prime.push_back(dsub.to_new(set_difference(k, {v})));
        VertexSet minus;
        if (has_empty) {
            minus = d;
        } else {
            canonicalize(h_prime);
            minus = dsub.to_old(solve_rec(dsub.graph, h_prime, t, lambda - 1, kappa + 1));
        }
        if (plus.size() <= minus.size()) {
            result = set_union(result, plus);
        } else {
            result = set_union(result, minus);
            t_prime.push_back(v);
        }
    }
    // Root-internal members not hit by the vertices of T outside T'.
    CliqueFamily leftover;
    for (const VertexSet& z : f)
        if (is_subset(z, t_prime)) leftover.push_back(z);
    VertexSet s_t;
    if (!min_hitting_within(leftover, kappa, s_t)) return all_vertices(g);
    return set_union(result, s_t);
}

VertexSet solve_rec(const Graph& g, const CliqueFamily& f, int t, int lambda, int kappa) {
    if (g.num_vertices() == 0) return {};
    if (lambda <= 0) return solve_lambda0(g, f, t, kappa);
    auto comps = connected_components(g);
    if (comps.size() > 1) {
        VertexSet out;
        for (const VertexSet& c : comps) {
            Subgraph sub = induced_subgraph(g, c);
            out = set_union(out, sub.to_old(solve_rec(sub.graph, restrict_family(f, sub), t, lambda, kappa)));
        }
        return out;
    }
    VertexSet z = non_kt_vertices(g, t);
    if (!z.empty()) return solve_with_free_vertices(g, f, t, lambda, kappa, z);
    return solve_with_root(g, f, t, lambda, kappa);
}

}  // namespace

VertexSet solve_ekt(const ExtendedInstance& inst, SolveBudget budget) {
    validate_family(inst.graph, inst.family, inst.t);
    if (budget.lambda < 0 || budget.kappa < 0) throw PreconditionViolated("negative solve budget");
    if (!bed_at_most(inst.graph, inst.t, budget.lambda)) return all_vertices(inst.graph);
    CliqueFamily f = inst.family;
    canonicalize(f);
    return solve_rec(inst.graph, f, inst.t, budget.lambda, budget.kappa);
}

OptClean opt_and_clean(const ExtendedInstance& inst, int lambda) {
    OptClean r;
    r.opt_g = static_cast<int>(solve_ekt({inst.graph, {}, inst.t}, {lambda, 0}).size());
    r.clean = static_cast<int>(solve_ekt(inst, {lambda, 0}).size()) == r.opt_g;
    return r;
}

bool conflict_positive(const Graph& g, const VertexSet& s1, const VertexSet& s2, int t, int lambda) {
    if (intersects(s1, s2)) throw PreconditionViolated("conflict requires disjoint sets");
    if (has_t_clique_within(g, s1, t)) throw PreconditionViolated("conflict source contains a t-clique");
    if (s1.empty() || s2.empty()) return false;
    CliqueFamily pr = project(g, s1, s2, t);
    if (pr.empty()) return false;
    Subgraph sub = induced_subgraph(g, s2);
    CliqueFamily local;
    for (const VertexSet& z : pr) local.push_back(sub.to_new(z));
    canonicalize(local);
    std::size_t base = solve_ekt({sub.graph, {}, t}, {lambda, 0}).size();
    std::size_t with = solve_ekt({sub.graph, local, t}, {lambda, 1}).size();
    return with > base;
}

}  // namespace kthit
