#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kthit/corpus.hpp"
#include "kthit/decomposition.hpp"
#include "kthit/errors.hpp"

namespace kthit {
namespace {

using fixtures::RootFigure;

TEST(Decomposition, NonKtVertices) {
    Graph pendant(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    EXPECT_EQ(non_kt_vertices(pendant, 3), (VertexSet{3}));
    EXPECT_TRUE(non_kt_vertices(complete_graph(4), 4).empty());
    EXPECT_EQ(non_kt_vertices(path_graph(5), 3), all_vertices(path_graph(5)));
}

TEST(Decomposition, ValidatesTheTwoComponentRoot) {
    Graph g = RootFigure::graph();
    std::vector<VertexSet> roots{{RootFigure::v1, RootFigure::v2, RootFigure::v3, RootFigure::v4},
                                 {RootFigure::u1, RootFigure::u2}};
    EXPECT_TRUE(validate_root(g, 4, roots).ok);

    std::vector<VertexSet> widened = roots;
    widened[0].push_back(RootFigure::w1);
    widened[0] = make_set(widened[0]);
    RootCheck bad = validate_root(g, 4, widened);
    EXPECT_FALSE(bad.ok);
    EXPECT_FALSE(bad.diagnostic.empty());

    EXPECT_THROW(validate_root(g, 4, {roots[0]}), ComponentMismatch);
}

TEST(Decomposition, SingleVertexIsAlwaysARoot) {
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_graph(6, 0.6, rng);
        if (!is_connected(g)) continue;
        for (Vertex v = 0; v < g.num_vertices(); ++v) EXPECT_TRUE(validate_single_root(g, 3, {v}).ok);
    }
}

TEST(Decomposition, PendingComponents) {
    Graph g = RootFigure::graph();
    RootDecomposition dec = pending_partition(
        g, 4, {}, {{RootFigure::v1, RootFigure::v2, RootFigure::v3, RootFigure::v4}, {RootFigure::u1, RootFigure::u2}});
    EXPECT_EQ(dec.pending.at(RootFigure::v1), (VertexSet{RootFigure::v1}));
    EXPECT_EQ(dec.pending.at(RootFigure::v2), (VertexSet{RootFigure::v2, RootFigure::w1, RootFigure::w2, RootFigure::w3}));
    EXPECT_EQ(dec.pending.at(RootFigure::u1), (VertexSet{RootFigure::u1, RootFigure::p1, RootFigure::p2, RootFigure::p3}));

    Graph bowtie = fixtures::bowtie();
    EXPECT_EQ(pending_partition(bowtie, 3, {}, {{0}}).pending.at(0), all_vertices(bowtie));
    Graph p = path_graph(4);
    EXPECT_EQ(pending_partition(p, 3, {}, {{2}}).pending.at(2), all_vertices(p));
    EXPECT_THROW(pending_partition(bowtie, 3, {}, {{1, 3}}), InvalidRoot);
}

TEST(Decomposition, BedAtMost) {
    EXPECT_TRUE(bed_at_most(cycle_graph(5), 3, 0));
    EXPECT_TRUE(bed_at_most(complete_graph(3), 3, 1));
    EXPECT_FALSE(bed_at_most(complete_graph(3), 3, 0));
    EXPECT_TRUE(bed_at_most(complete_graph(4), 4, 1));
    EXPECT_TRUE(bed_at_most(fixtures::bowtie(), 3, 1));
}

TEST(Decomposition, BedValues) {
    EXPECT_EQ(bed_value(Graph(), 3, 0).value, 0);
    // Every root of K_4 for t = 3 is a single vertex, which leaves a triangle behind.
    EXPECT_EQ(bed_value(complete_graph(4), 3, 4).value, 2);
    EXPECT_EQ(bed_value(fixtures::joined_triangles(), 3, 4).value, 1);
    EXPECT_EQ(bed_value(fixtures::k4_pair_sharing_vertex(), 4, 4).value, 1);
    EXPECT_THROW(bed_value(complete_graph(4), 3, 1), CapExceeded);
}

TEST(Decomposition, TracesReplayToTheValue) {
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        int t = 3 + i % 2;
        Graph g = random_graph(1 + i % 9, 0.6, rng);
        BedResult r = bed_value(g, t, g.num_vertices());
        EXPECT_EQ(replay_bed_trace(g, t, r.trace), r.value);
    }
}

TEST(Decomposition, RejectsForgedTraces) {
    Graph g = complete_graph(4);
    BedResult r = bed_value(g, 3, 4);
    std::vector<BedStep> forged = r.trace;
    forged[0].removed = {0, 1};
    EXPECT_THROW(replay_bed_trace(g, 3, forged), PreconditionViolated);
}

TEST(Decomposition, BedRoots) {
    RootDecomposition kt = compute_bed_root(complete_graph(3), 3, 1);
    EXPECT_EQ(kt.roots, (std::vector<VertexSet>{{0}}));

    Graph bowtie = fixtures::bowtie();
    RootDecomposition b = compute_bed_root(bowtie, 3, 1);
    ASSERT_EQ(b.roots.size(), 1u);
    EXPECT_EQ(bed_value(remove_vertices(bowtie, b.roots[0]).graph, 3, 5).value, 0);

    Graph two_k4 = disjoint_union(complete_graph(4), complete_graph(4));
    RootDecomposition d = compute_bed_root(two_k4, 4, 1);
    ASSERT_EQ(d.roots.size(), 2u);
    EXPECT_EQ(d.roots[0].size(), 1u);
    EXPECT_EQ(d.roots[1].size(), 1u);

    EXPECT_THROW(compute_bed_root(path_graph(3), 3, 1), PreconditionViolated);
}

TEST(Decomposition, BedRootsLowerTheParameterAndContainEveryClique) {
    Rng rng(4);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        int t = 3 + i % 2;
        Graph g0 = random_graph(4 + i % 6, 0.65, rng);
        Graph g = remove_vertices(g0, non_kt_vertices(g0, t)).graph;
        if (g.num_vertices() == 0) continue;
        int value = bed_value(g, t, g.num_vertices()).value;
        RootDecomposition dec = compute_bed_root(g, t, value);
        ASSERT_TRUE(validate_root(g, t, dec.roots).ok);
        EXPECT_EQ(bed_value(remove_vertices(g, dec.root_vertices()).graph, t, g.num_vertices()).value, value - 1);
        for (const VertexSet& q : enumerate_t_cliques(g, t)) {
            int owners = 0;
            for (const auto& [v, comp] : dec.pending) owners += is_subset(q, comp);
            EXPECT_EQ(owners, 1);
        }
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(Decomposition, RootCandidatesAreKtFreeAndConnected) {
    Rng rng(6);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(7, 0.5, rng);
        if (!is_connected(g)) continue;
        for (const VertexSet& c : root_candidates(g, 3)) {
            EXPECT_TRUE(is_connected_subset(g, c));
            EXPECT_FALSE(has_t_clique_within(g, c, 3));
        }
    }
}

}  // namespace
}  // namespace kthit
