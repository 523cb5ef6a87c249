#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kthit/decomposition.hpp"
#include "kthit/graph.hpp"

namespace kthit {

// (G, X, k) with bed+_t(G - X) <= lambda.
struct ModulatorInstance {
    Graph graph;
    VertexSet modulator;
    long long k = 0;
    int t = 3;
    int lambda = 0;

    bool operator==(const ModulatorInstance&) const = default;
};

// Throws PreconditionViolated unless k >= 0, X is a valid vertex set and bed+_t(G - X) <= lambda.
void validate_instance(const ModulatorInstance& inst);

constexpr int kDefaultChunkCap = 16;

struct KernelCaps {
    int chunk_cap = kDefaultChunkCap;  // caps both the chunk size and the mark recursion depth
};

// min(c(lambda,t), cap).
int effective_chunk_bound(int lambda, int t, int cap);

// Nonempty subsets of X of size <= min(c(lambda,t), cap) without a t-clique, in size-then-lex order.
std::vector<VertexSet> chunks(const ModulatorInstance& inst, int cap);

struct Part {
    VertexSet v_set;
    VertexSet n_set;
};

struct MarkState {
    std::vector<VertexSet> rounds;           // M^1 .. M^(t-1), pairwise disjoint
    VertexSet marked;                        // union of the rounds
    std::vector<std::vector<Part>> packings;  // every packing that reached |X| + 1 parts
};

// Root decomposition of G - X - N expressed in the vertex ids of G.
// Computes a bed+-root of the host (or uses `roots` when given).
RootDecomposition modulator_root(const Graph& g, const VertexSet& alive, const VertexSet& x, const VertexSet& n_set,
                                 int t, int lambda, const std::optional<std::vector<VertexSet>>& roots = std::nullopt);

// mark(T, N, X', c, N', M') of the marking procedure. dec and all sets use the ids of inst.graph.
VertexSet mark(const RootDecomposition& dec, const VertexSet& n_set, const VertexSet& x_chunk, int c,
               const VertexSet& n_prime, const VertexSet& m_prime, const ModulatorInstance& inst, const KernelCaps& caps);

// Step 1: marking rounds 1..t-1.
MarkState step1_mark(const RootDecomposition& dec, const VertexSet& n_set, const ModulatorInstance& inst,
                     const KernelCaps& caps);

struct Step2Result {
    Vertex v = -1;
    VertexSet removed;  // C(v) in the ids of inst.graph
    long long opt = 0;  // opt(G[C(v)])
    Graph graph;        // G - C(v), relabeled densely in increasing id order
    long long k = 0;    // k - opt
};

// Step 2: remove the pending component of the lowest unmarked root vertex, if any.
std::optional<Step2Result> step2_remove(const ModulatorInstance& inst, const RootDecomposition& dec,
                                        const VertexSet& n_set, const MarkState& marks);

enum class Decision { Undecided, Yes, No };

std::string to_string(Decision d);

struct BaseKernelResult {
    Decision decision = Decision::Undecided;
    Graph graph;                    // kernel graph when undecided
    long long k = 0;
    std::vector<Vertex> origin;     // origin[i]: id in the input graph, or -1 for a completion vertex
    VertexSet deleted;              // vertices forced into every small solution (ids of the input graph)
    VertexSet kept;                 // input vertices kept in the kernel
    CliqueFamily cores;             // cores of size < t materialized by completions, in creation order
    long long hyperedges = 0;       // hyperedges after reduction
};

// Sunflower-based solution-size kernel for hitting the t-cliques of g with at most k vertices.
BaseKernelResult base_kernel(const Graph& g, long long k, int t);

// hyperedge bound k^t * t! * t of the base kernel, saturated at limit.
long long base_kernel_hyperedge_bound(long long k, int t, long long limit = (1LL << 62));

struct TraceEntry {
    std::string kind;  // "removal", "level", "base_delete", "base_keep", "completion", "decision"
    int lambda = 0;
    Vertex vertex = -1;
    VertexSet vertices;
    long long value = 0;  // opt of the removed component, number of completion copies, ...
    std::string note;
};

struct KernelResult {
    Decision decision = Decision::Undecided;
    ModulatorInstance instance;     // output instance when undecided (lambda = 0)
    std::vector<Vertex> origin;     // origin[i]: id in the input graph, or -1 for a completion vertex
    std::vector<TraceEntry> trace;
    bool capped = false;            // true when the chunk cap is below c(lambda, t)
    long long hyperedges = 0;
};

KernelResult kernelize(const ModulatorInstance& inst, const KernelCaps& caps = {});

// Re-applies a kernel trace to the input instance and returns the output it describes.
// Throws PreconditionViolated when an entry does not apply.
KernelResult replay_kernel_trace(const ModulatorInstance& inst, const std::vector<TraceEntry>& trace);

}  // namespace kthit
