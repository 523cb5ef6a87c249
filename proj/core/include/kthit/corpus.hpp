#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kthit/ekt.hpp"
#include "kthit/graph.hpp"
#include "kthit/io.hpp"

namespace kthit {

using Rng = std::mt19937_64;

// Canonical edge code of g (minimum over vertex orders compatible with the degree ordering).
// Two graphs on at most 11 vertices are isomorphic exactly when their codes and orders agree.
std::uint64_t canonical_code(const Graph& g);

// All graphs on exactly n vertices up to isomorphism (n <= 8), by canonical vertex extension.
std::vector<Graph> graphs_up_to_isomorphism(int n);

// All connected graphs with 1..max_n vertices up to isomorphism, ordered by vertex count then code.
std::vector<Graph> connected_graphs_up_to(int max_n);

// G(n, p).
Graph random_graph(int n, double p, Rng& rng);

// Random family of cliques of size 1..t-1 with at most max_members members.
CliqueFamily random_family(const Graph& g, int t, int max_members, Rng& rng);

// Every formula over exactly num_vars variables for num_vars in 1..max_vars with 1..max_clauses
// distinct clauses, each clause a nonempty set of at most max_width literals. Clauses and formulas
// are kept in a canonical sorted form, so the list is duplicate-free.
std::vector<CnfFormula> small_cnf_formulas(int max_vars, int max_clauses, int max_width);

// Chain of ell triangles {a_i, b_i, top_i} joined by the edges b_i a_(i+1), with a pendant vertex on
// a_1 and one on b_ell. Vertex 3i+2 is the top of triangle i.
Graph triangle_chain(int ell);
VertexSet triangle_chain_tops(int ell);

}  // namespace kthit
