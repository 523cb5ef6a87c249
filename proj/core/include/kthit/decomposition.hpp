#pragma once

#include <map>
#include <string>
#include <vector>

#include "kthit/graph.hpp"

namespace kthit {

// N^t(G): vertices contained in no t-clique.
VertexSet non_kt_vertices(const Graph& g, int t);

// A root of the host graph g - N together with its pending components. All ids refer to g.
struct RootDecomposition {
    VertexSet host;                       // V(g) minus the removed non-K_t set
    std::vector<VertexSet> roots;         // one root per connected component of the host, component order
    std::map<Vertex, VertexSet> pending;  // v in V(T) -> C(v)

    VertexSet root_vertices() const;
    VertexSet pending_of(const VertexSet& z) const;  // C(Z), the union of C(v) over v in z
};

struct RootCheck {
    bool ok = false;
    std::string diagnostic;
};

// Checks that roots[i] is a root of the i-th connected component of g (components ordered by smallest vertex).
// Throws ComponentMismatch when the list does not align one-to-one with the components.
RootCheck validate_root(const Graph& g, int t, const std::vector<VertexSet>& roots);

// Checks that t_set is a root of the connected graph g (Def. of root, single component form).
RootCheck validate_single_root(const Graph& g, int t, const VertexSet& t_set);

// Pending components of a root of g - n_set. Throws InvalidRoot when the root is not valid.
RootDecomposition pending_partition(const Graph& g, int t, const VertexSet& n_set, const std::vector<VertexSet>& roots);

// Connected components of the union of the K_t-free blocks of a connected graph, ordered by smallest vertex.
std::vector<VertexSet> root_candidates(const Graph& g, int t);

// Decides bed+_t(g) <= lambda with the XP recursion over single vertices and block-union candidates.
bool bed_at_most(const Graph& g, int t, int lambda);

// One node of a bed+ derivation. Node 0 is the whole graph; children refer to their parent index.
struct BedStep {
    int parent = -1;
    int lambda = 0;    // budget available at this node
    std::string kind;  // "empty", "kt_free", "free", "split" or "root"
    VertexSet vertices;
    VertexSet removed;  // non-K_t set for "free", root for "root"
};

struct BedResult {
    int value = 0;
    std::vector<BedStep> trace;
};

// Smallest lambda <= lambda_cap with bed_at_most true, with a derivation trace.
// Throws CapExceeded when bed+_t(g) > lambda_cap.
BedResult bed_value(const Graph& g, int t, int lambda_cap);

// Re-checks every step of a trace against g and returns the value it certifies.
// Throws PreconditionViolated naming the first invalid step.
int replay_bed_trace(const Graph& g, int t, const std::vector<BedStep>& trace);

// A bed+-root: removing it lowers bed+_t by one. Requires N^t(g) empty and 1 <= bed+_t(g) <= lambda.
RootDecomposition compute_bed_root(const Graph& g, int t, int lambda);

}  // namespace kthit
