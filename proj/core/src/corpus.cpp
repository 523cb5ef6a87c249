#include "kthit/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "kthit/errors.hpp"

namespace kthit {

std::uint64_t canonical_code(const Graph& g) {
    int n = g.num_vertices();
    if (n > 11) throw CapExceeded("canonical_code: more than 11 vertices");
    // Vertices are ordered by degree; only orders inside a degree class are searched.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
        classes.push_back({i, j});
        i = j;
    }
    auto code_of = [&](const std::vector<Vertex>& ord) {
        std::uint64_t code = 0;
        int bitpos = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bitpos)
                if (g.adjacent(ord[i], ord[j])) code |= std::uint64_t{1} << bitpos;
        return code;
    };
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == classes.size()) {
            best = std::min(best, code_of(order));
            return;
        }
        auto [lo, hi] = classes[c];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            rec(c + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    return best;
}

std::vector<Graph> graphs_up_to_isomorphism(int n) {
    if (n > 8) throw CapExceeded("graphs_up_to_isomorphism: more than 8 vertices");
    if (n <= 0) return {Graph(0)};
    std::vector<Graph> prev = graphs_up_to_isomorphism(n - 1);
    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> found;
    for (const Graph& base : prev) {
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            Graph g = base;
            Vertex v = g.add_vertex();
            for (int u = 0; u < n - 1; ++u)
                if (mask & (1u << u)) g.add_edge(u, v);
            std::uint64_t code = canonical_code(g);
            if (seen.insert(code).second) found.push_back({code, g});
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : graphs_up_to_isomorphism(n))
            if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

CliqueFamily random_family(const Graph& g, int t, int max_members, Rng& rng) {
    std::vector<VertexSet> pool = enumerate_cliques(g, 1, t - 1);
    CliqueFamily out;
    if (pool.empty() || max_members <= 0) return out;
    std::uniform_int_distribution<int> count(0, max_members);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int m = count(rng);
    for (int i = 0; i < m; ++i) out.push_back(pool[pick(rng)]);
    canonicalize(out);
    return out;
}

std::vector<CnfFormula> small_cnf_formulas(int max_vars, int max_clauses, int max_width) {
    std::vector<CnfFormula> out;
    for (int n = 1; n <= max_vars; ++n) {
        // Every clause: each variable absent, positive or negative.
        std::vector<std::vector<int>> clauses;
        int total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (int code = 1; code < total; ++code) {
            std::vector<int> clause;
            int c = code;
            for (int i = 1; i <= n; ++i, c /= 3) {
                if (c % 3 == 1) clause.push_back(i);
                if (c % 3 == 2) clause.push_back(-i);
            }
            if (static_cast<int>(clause.size()) <= max_width) clauses.push_back(clause);
        }
        std::sort(clauses.begin(), clauses.end());
        int nc = static_cast<int>(clauses.size());
        std::function<void(int, std::vector<int>&)> rec = [&](int next, std::vector<int>& chosen) {
            if (!chosen.empty()) {
                CnfFormula phi;
                phi.num_vars = n;
                for (int i : chosen) phi.clauses.push_back(clauses[i]);
                out.push_back(phi);
            }
            if (static_cast<int>(chosen.size()) == max_clauses) return;
            for (int i = next; i < nc; ++i) {
                chosen.push_back(i);
                rec(i + 1, chosen);
                chosen.pop_back();
            }
        };
        std::vector<int> chosen;
        rec(0, chosen);
    }
    return out;
}

Graph triangle_chain(int ell) {
    if (ell < 1) throw PreconditionViolated("chain length must be positive");
    Graph g(3 * ell + 2);
    for (int i = 0; i < ell; ++i) {
        int a = 3 * i, b = 3 * i + 1, top = 3 * i + 2;
        g.add_edge(a, b);
        g.add_edge(a, top);
        g.add_edge(b, top);
        if (i + 1 < ell) g.add_edge(b, 3 * (i + 1));
    }
    g.add_edge(3 * ell, 0);
    g.add_edge(3 * ell + 1, 3 * (ell - 1) + 1);
    return g;
}

VertexSet triangle_chain_tops(int ell) {
    VertexSet out;
    for (int i = 0; i < ell; ++i) out.push_back(3 * i + 2);
    return out;
}

}  // namespace kthit
