#pragma once

#include "kthit/graph.hpp"

namespace kthit {

// Extended K_t-Subgraph Hitting input: hit every t-clique and every member of the family.
struct ExtendedInstance {
    Graph graph;
    CliqueFamily family;
    int t = 3;
};

// lambda bounds bed+_t(G); kappa bounds opt(G, F) - opt(G).
struct SolveBudget {
    int lambda = 0;
    int kappa = 0;
};

// Throws PreconditionViolated unless every member is a clique of size 1..t-1 with ids in range.
void validate_family(const Graph& g, const CliqueFamily& family, int t);

bool is_valid_solution(const Graph& g, const CliqueFamily& family, int t, const VertexSet& s);

// pr^t_A(B): traces on b of the t-cliques of G[a + b] meeting both a and b.
CliqueFamily project(const Graph& g, const VertexSet& a, const VertexSet& b, int t);

// Always returns a valid solution. Under bed+_t(G) <= lambda and opt(G,F) <= opt(G) + kappa it is optimal.
VertexSet solve_ekt(const ExtendedInstance& inst, SolveBudget budget);

struct OptClean {
    int opt_g = 0;
    bool clean = false;
};

// opt(G) and whether opt(G, F) = opt(G), by two solver runs with kappa = 0. Requires bed+_t(G) <= lambda.
OptClean opt_and_clean(const ExtendedInstance& inst, int lambda);

// conf^t_{s1}(s2) > 0, decided with solver runs at kappa = 0 and kappa = 1.
// Throws PreconditionViolated when s1 contains a t-clique or s1 and s2 intersect.
bool conflict_positive(const Graph& g, const VertexSet& s1, const VertexSet& s2, int t, int lambda);

}  // namespace kthit
