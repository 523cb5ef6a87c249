#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace kthit {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids. All set-valued results use this form.
using VertexSet = std::vector<Vertex>;

// A family of vertex sets in canonical (lexicographic, duplicate-free) order.
using CliqueFamily = std::vector<VertexSet>;

VertexSet make_set(std::vector<Vertex> members);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);
bool is_subset(const VertexSet& a, const VertexSet& b);
void canonicalize(CliqueFamily& family);

// Undirected simple graph on the dense ids 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Throws PreconditionViolated on loops, parallel edges or out-of-range ids.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    // Returns false when the edge is already present. Throws on loops and bad ids.
    bool add_edge(Vertex u, Vertex v);
    // Appends an isolated vertex and returns its id.
    Vertex add_vertex();

    bool adjacent(Vertex u, Vertex v) const {
        return (rows_[u][static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    // Edges as (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    void grow_rows();

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

// Induced subgraph together with the relabeling maps in both directions.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> new_to_old;
    std::vector<Vertex> old_to_new;  // -1 for vertices outside the subgraph

    VertexSet to_old(const VertexSet& s) const;
    VertexSet to_new(const VertexSet& s) const;  // ids outside the subgraph are dropped
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph remove_vertices(const Graph& g, const VertexSet& drop);
VertexSet all_vertices(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);

// All t-cliques in lexicographic order.
std::vector<VertexSet> enumerate_t_cliques(const Graph& g, int t);
// All cliques with min_size <= |K| <= max_size, canonical lexicographic order.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int min_size, int max_size);
bool has_t_clique(const Graph& g, int t);
bool has_t_clique_within(const Graph& g, const VertexSet& s, int t);

// Connected components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, const VertexSet& s);

struct OccurrenceResult {
    bool found = false;
    std::vector<Vertex> witness;  // witness[p] is the image of pattern vertex p
};

constexpr int kDefaultPatternCap = 10;

// Subgraph (induced = false) or induced subgraph (induced = true) containment of h in g.
OccurrenceResult occurrences_of(const Graph& h, const Graph& g, bool induced, int cap = kDefaultPatternCap);
bool verify_embedding(const Graph& h, const Graph& g, const std::vector<Vertex>& map, bool induced);

struct BlockDecomposition {
    std::vector<VertexSet> blocks;  // lexicographic order
    std::vector<std::vector<std::pair<Vertex, Vertex>>> block_edges;
    VertexSet cut_vertices;
};

// Biconnected components (blocks). Every edge lies in exactly one block; isolated vertices form no block.
BlockDecomposition biconnected_components(const Graph& g);

struct TreedepthResult {
    int depth = 0;
    std::vector<Vertex> parent;  // elimination forest, -1 marks a root
};

constexpr int kDefaultTreedepthCap = 16;

// Exact treedepth by memoized recursion over vertex subsets. The cap bounds each connected component.
TreedepthResult treedepth_exact(const Graph& g, int cap = kDefaultTreedepthCap);
// Depth of a forest given by parent pointers, or -1 when it is not an elimination forest of g.
int elimination_forest_depth(const Graph& g, const std::vector<Vertex>& parent);

// Small named graphs used by fixtures and the CLI.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph diamond_graph();  // K_4 minus the edge {0,3}
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace kthit
