#pragma once

#include <string>
#include <vector>

#include "kthit/ekt.hpp"
#include "kthit/graph.hpp"

// Brute-force reference implementations. They follow the definitions directly and share no
// algorithmic code with the modules they validate; only the Graph container is common.
namespace kthit::oracle {

struct OracleReport {
    long long value = 0;
    bool exact = true;  // false when a search budget stopped the enumeration (value is then a lower bound)
    VertexSet witness;
    double elapsed_ms = 0.0;
};

constexpr int kBruteOptCap = 20;
constexpr int kBruteBedCap = 10;
constexpr int kBruteVedCap = 14;
constexpr int kBruteVedPatternCap = 6;
constexpr int kCopyHittingCap = 64;
constexpr int kBlockingGroundCap = 18;
constexpr int kMmbsVertexCap = 10;
constexpr long long kDefaultMmbsNodeBudget = 20'000'000;

// opt(G, F) with a minimum witness, by exhaustive branching on unhit t-cliques and members (|V| <= 20).
OracleReport brute_opt_ekt(const ExtendedInstance& inst);

// Every minimum solution of (G, F) (|V| <= 20).
std::vector<VertexSet> all_optimal_solutions(const ExtendedInstance& inst);

// Whether G has a vertex set of size <= k meeting every t-clique (|V| <= 64).
bool decide_kt_hitting(const Graph& g, int t, long long k);

// bed+_t(G) by the definitional recursion over all roots (|V| <= 10).
OracleReport brute_bed_plus(const Graph& g, int t);

// ved+ for the pattern h by the definitional recursion. The cap applies to the connected graphs on which
// the 1 + min branching step runs, after free vertices have been removed.
OracleReport brute_ved_plus(const Graph& g, const Graph& h, bool induced);

// Vertex sets of all (induced) copies of h in g (|V(g)| <= 64, |V(h)| <= 8).
std::vector<VertexSet> copy_vertex_sets(const Graph& h, const Graph& g, bool induced);

// Minimum vertex set meeting every (induced) copy of h (|V(g)| <= 64), by branch and bound.
OracleReport brute_opt_h_hitting(const Graph& g, const Graph& h, bool induced);

// Every minimum vertex set meeting all (induced) copies of h, by exhaustive subset scan (|V(g)| <= 20).
std::vector<VertexSet> all_optimal_h_hitting_sets(const Graph& g, const Graph& h, bool induced);

// opt(G, F + B) > opt(G, F) with every member of B a clique of size 1..t-1.
bool is_blocking_set(const ExtendedInstance& inst, const CliqueFamily& b);

// All inclusion-minimal blocking sets of size <= size_cap over the cliques of size <= t-1.
std::vector<CliqueFamily> minimal_blocking_sets(const ExtendedInstance& inst, int size_cap);

// mmbs_t(G, F) for the given family (maximum size of an inclusion-minimal blocking set).
OracleReport mmbs_instance(const ExtendedInstance& inst);

struct MmbsResult {
    int value = 0;
    bool exact = true;
    long long nodes = 0;
    CliqueFamily family;    // a clean family attaining the value
    CliqueFamily blocking;  // a minimal blocking set of that size
};

// mmbs_t(G): maximum over clean families. Uses the witness characterization: m optimal solutions
// S_1..S_m and cliques B_1..B_m with S_i meeting B_j exactly when i != j, such that every optimal
// solution meeting all cliques met by every S_i misses some B_j.
MmbsResult mmbs_graph(const Graph& g, int t, long long node_budget = kDefaultMmbsNodeBudget);

// mmbs_t(G) by literal enumeration of all clean families and all blocking sets (at most 12 small cliques).
int mmbs_graph_literal(const Graph& g, int t);

// conf^t_{s1}(s2) = opt(G[s2], pr) - opt(G[s2]) with the projection computed from its definition.
int brute_conflict_value(const Graph& g, const VertexSet& s1, const VertexSet& s2, int t);

// pr^t_A(B) from its definition.
CliqueFamily brute_project(const Graph& g, const VertexSet& a, const VertexSet& b, int t);

}  // namespace kthit::oracle
