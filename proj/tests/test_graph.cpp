#include <gtest/gtest.h>

#include <random>

#include "kthit/corpus.hpp"
#include "kthit/errors.hpp"
#include "kthit/graph.hpp"

namespace kthit {
namespace {

Graph two_triangles_sharing_vertex() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

// Every t-subset that is a clique, by plain subset filtering.
std::vector<VertexSet> filtered_cliques(const Graph& g, int t) {
    std::vector<VertexSet> out;
    int n = g.num_vertices();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != t) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) s.push_back(v);
        if (is_clique(g, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TEST(Graph, RejectsLoopsParallelEdgesAndBadIds) {
    EXPECT_THROW(Graph(2, {{0, 0}}), PreconditionViolated);
    EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), PreconditionViolated);
    EXPECT_THROW(Graph(2, {{0, 2}}), PreconditionViolated);
    Graph g(3);
    EXPECT_TRUE(g.add_edge(0, 1));
    EXPECT_FALSE(g.add_edge(1, 0));
    EXPECT_EQ(g.num_edges(), 1);
}

TEST(Graph, SetOperations) {
    VertexSet a{1, 3, 5}, b{3, 4};
    EXPECT_EQ(set_union(a, b), (VertexSet{1, 3, 4, 5}));
    EXPECT_EQ(set_difference(a, b), (VertexSet{1, 5}));
    EXPECT_EQ(set_intersection(a, b), (VertexSet{3}));
    EXPECT_TRUE(intersects(a, b));
    EXPECT_TRUE(is_subset({3}, a));
    EXPECT_EQ(make_set({5, 1, 5}), (VertexSet{1, 5}));
}

TEST(Graph, TCliquesOfSmallGraphs) {
    EXPECT_EQ(enumerate_t_cliques(complete_graph(4), 3).size(), 4u);
    EXPECT_TRUE(enumerate_t_cliques(cycle_graph(5), 3).empty());
    EXPECT_EQ(enumerate_t_cliques(disjoint_union(complete_graph(3), complete_graph(3)), 3),
              (std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(Graph, TCliquesMatchSubsetFilterOnAllSmallGraphs) {
    for (int n = 1; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<std::pair<Vertex, Vertex>> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph g(n);
            for (int i = 0; i < pairs; ++i)
                if (mask >> i & 1u) g.add_edge(all[i].first, all[i].second);
            for (int t = 2; t <= 4; ++t) ASSERT_EQ(enumerate_t_cliques(g, t), filtered_cliques(g, t));
        }
    }
}

TEST(Graph, TCliquesMatchSubsetFilterOnRandomLargerGraphs) {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(7 + i % 2, 0.6, rng);
        for (int t = 3; t <= 5; ++t) ASSERT_EQ(enumerate_t_cliques(g, t), filtered_cliques(g, t));
    }
}

TEST(Graph, Occurrences) {
    EXPECT_TRUE(occurrences_of(complete_graph(3), complete_graph(4), false).found);
    EXPECT_FALSE(occurrences_of(path_graph(3), complete_graph(3), true).found);
    Graph host = disjoint_union(diamond_graph(), Graph(1));
    OccurrenceResult r = occurrences_of(diamond_graph(), host, true);
    ASSERT_TRUE(r.found);
    EXPECT_TRUE(verify_embedding(diamond_graph(), host, r.witness, true));
    EXPECT_TRUE(occurrences_of(path_graph(3), complete_graph(3), false).found);
}

TEST(Graph, BiconnectedComponents) {
    BlockDecomposition k4 = biconnected_components(complete_graph(4));
    EXPECT_EQ(k4.blocks, (std::vector<VertexSet>{{0, 1, 2, 3}}));
    EXPECT_TRUE(k4.cut_vertices.empty());

    BlockDecomposition bowtie = biconnected_components(two_triangles_sharing_vertex());
    EXPECT_EQ(bowtie.blocks, (std::vector<VertexSet>{{0, 1, 2}, {0, 3, 4}}));
    EXPECT_EQ(bowtie.cut_vertices, (VertexSet{0}));

    BlockDecomposition p3 = biconnected_components(path_graph(3));
    EXPECT_EQ(p3.blocks, (std::vector<VertexSet>{{0, 1}, {1, 2}}));
    EXPECT_EQ(p3.cut_vertices, (VertexSet{1}));
}

TEST(Graph, Treedepth) {
    EXPECT_EQ(treedepth_exact(Graph(1)).depth, 1);
    EXPECT_EQ(treedepth_exact(path_graph(4)).depth, 3);
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(treedepth_exact(complete_graph(n)).depth, n);
    EXPECT_EQ(treedepth_exact(path_graph(7)).depth, 3);
    EXPECT_EQ(treedepth_exact(Graph()).depth, 0);
}

TEST(Graph, TreedepthWitnessIsAnEliminationForest) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(1 + i % 9, 0.4, rng);
        TreedepthResult r = treedepth_exact(g);
        EXPECT_EQ(elimination_forest_depth(g, r.parent), r.depth);
    }
}

TEST(Graph, ComponentsAndInducedSubgraphs) {
    Graph g = disjoint_union(path_graph(2), complete_graph(3));
    EXPECT_EQ(connected_components(g), (std::vector<VertexSet>{{0, 1}, {2, 3, 4}}));
    EXPECT_FALSE(is_connected(g));
    Subgraph sub = remove_vertices(g, {0, 3});
    EXPECT_EQ(sub.graph.num_vertices(), 3);
    EXPECT_EQ(sub.new_to_old, (std::vector<Vertex>{1, 2, 4}));
    EXPECT_EQ(sub.to_old({1, 2}), (VertexSet{2, 4}));
    EXPECT_TRUE(sub.graph.adjacent(1, 2));
}

}  // namespace
}  // namespace kthit
