#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kthit/graph.hpp"
#include "kthit/io.hpp"

namespace kthit {

// A copy of h placed in the output graph: embedding[p] is the image of pattern vertex p.
struct TaggedCopy {
    std::string tag;  // "variable-copy", "clause-copy", "gadget-copy" or "transversal"
    std::vector<Vertex> embedding;
};

struct ReductionOutput {
    Graph graph;
    VertexSet modulator;
    long long budget = 0;
    std::map<Vertex, std::string> role_tags;
    std::vector<TaggedCopy> copies;
    Graph h;
};

// Disjoint nonempty anticomplete A, B maximizing |A| + |B| (ties: lexicographically least (A, B)),
// swapped afterwards so that |A| >= |B|. Throws IsClique for complete graphs.
std::pair<VertexSet, VertexSet> find_anticomplete_pair(const Graph& h);

// Whether some nonempty independent set disconnects h (|V(h)| <= 12).
bool has_stable_cutset(const Graph& h);

// Roles used by the constructions, each the lexicographically least valid choice.
struct VedRoles {
    Vertex u = -1, v = -1, w = -1;  // u, v non-adjacent; w distinct from both
    Vertex z_plus = -1, z_minus = -1;
};
VedRoles ved_roles(const Graph& h);

struct GadgetRoles {
    VertexSet a_set, b_set;
    Vertex w = -1;  // outside A and B
    Vertex s = -1, t = -1;
    Vertex z_plus = -1, z_minus = -1;
};
GadgetRoles gadget_roles(const Graph& h);

struct AbGadget {
    Graph graph;
    std::vector<Vertex> attachments;  // y_1 .. y_2a
    std::vector<Vertex> a_vertices;   // odd attachments; position p plays a_set[p]
    std::vector<Vertex> b_vertices;   // even attachments; the first |b_set| carry H[B], position p plays b_set[p]
    std::vector<std::vector<Vertex>> copies;  // embeddings of the 2a glued copies
};

// 2a copies of h glued circularly (s of copy i identified with t of copy i+1), with H[A] on the
// odd attachments and H[B] on the lexicographically least |B| even attachments.
AbGadget build_ab_gadget(const Graph& h, const VertexSet& a_set, const VertexSet& b_set, Vertex s, Vertex t_vertex);

// Reduction parameterized by ved+(G - X) <= 1. Budget n - m + sum c_j, |X| = |V(h)| n.
ReductionOutput reduce_cnf_ved(const CnfFormula& phi, const Graph& h);

// Reduction parameterized by td(G - X). Budget n + sum a (c_j - 1), |X| = |V(h)| n.
ReductionOutput reduce_cnf_td(const CnfFormula& phi, const Graph& h);

// Size of a greedy family of pairwise disjoint tagged copies whose tag is not "transversal".
int count_disjoint_copies(const ReductionOutput& out);

}  // namespace kthit
