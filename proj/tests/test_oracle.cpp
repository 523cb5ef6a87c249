#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "kthit/corpus.hpp"
#include "kthit/errors.hpp"
#include "kthit/oracle.hpp"

namespace kthit {
namespace {

CliqueFamily all_edges(const Graph& g) {
    CliqueFamily f;
    for (auto [u, v] : g.edges()) f.push_back({u, v});
    return f;
}

TEST(Oracle, OptimumValues) {
    EXPECT_EQ(oracle::brute_opt_ekt({complete_graph(4), {}, 3}).value, 2);
    for (int t = 3; t <= 5; ++t) EXPECT_EQ(oracle::brute_opt_ekt({complete_graph(t), {}, t}).value, 1);
    oracle::OracleReport two = oracle::brute_opt_ekt({complete_graph(3), {{0}, {1}}, 3});
    EXPECT_EQ(two.value, 2);
    EXPECT_EQ(two.witness, (VertexSet{0, 1}));
}

TEST(Oracle, AllOptimalSolutions) {
    EXPECT_EQ(oracle::all_optimal_solutions({complete_graph(3), {}, 3}), (std::vector<VertexSet>{{0}, {1}, {2}}));
    EXPECT_EQ(oracle::all_optimal_solutions({complete_graph(3), {{1}}, 3}), (std::vector<VertexSet>{{1}}));
}

TEST(Oracle, DecidesHittingWithABudget) {
    Graph g = disjoint_union(complete_graph(3), complete_graph(3));
    EXPECT_FALSE(oracle::decide_kt_hitting(g, 3, 1));
    EXPECT_TRUE(oracle::decide_kt_hitting(g, 3, 2));
    EXPECT_TRUE(oracle::decide_kt_hitting(cycle_graph(6), 3, 0));
}

TEST(Oracle, BedValues) {
    EXPECT_EQ(oracle::brute_bed_plus(cycle_graph(6), 3).value, 0);
    EXPECT_EQ(oracle::brute_bed_plus(complete_graph(4), 4).value, 1);
    EXPECT_EQ(oracle::brute_bed_plus(fixtures::k4_pair_sharing_vertex(), 4).value, 1);
    EXPECT_EQ(oracle::brute_bed_plus(complete_graph(4), 3).value, 2);
    EXPECT_THROW(oracle::brute_bed_plus(complete_graph(11), 3), CapExceeded);
}

TEST(Oracle, VedValues) {
    Graph d = diamond_graph();
    EXPECT_EQ(oracle::brute_ved_plus(cycle_graph(6), d, false).value, 0);
    EXPECT_EQ(oracle::brute_ved_plus(d, d, false).value, 1);
    EXPECT_EQ(oracle::brute_ved_plus(disjoint_union(d, d), d, false).value, 1);
    // K_4 contains the diamond as a subgraph but not as an induced subgraph.
    EXPECT_EQ(oracle::brute_ved_plus(complete_graph(4), d, false).value, 1);
    EXPECT_EQ(oracle::brute_ved_plus(complete_graph(4), d, true).value, 0);
}

TEST(Oracle, CopiesOfAPattern) {
    Graph d = diamond_graph();
    EXPECT_EQ(oracle::copy_vertex_sets(d, complete_graph(4), false), (std::vector<VertexSet>{{0, 1, 2, 3}}));
    EXPECT_TRUE(oracle::copy_vertex_sets(d, complete_graph(4), true).empty());
    EXPECT_EQ(oracle::copy_vertex_sets(path_graph(3), cycle_graph(4), true).size(), 4u);
}

TEST(Oracle, HHittingSets) {
    Graph d = diamond_graph();
    EXPECT_EQ(oracle::brute_opt_h_hitting(disjoint_union(d, d), d, false).value, 2);
    std::vector<VertexSet> opt = oracle::all_optimal_h_hitting_sets(complete_graph(4), complete_graph(3), false);
    EXPECT_EQ(opt.size(), 6u);
    for (const VertexSet& s : opt) EXPECT_EQ(s.size(), 2u);
}

TEST(Oracle, BlockingSets) {
    ExtendedInstance k3{complete_graph(3), {}, 3};
    EXPECT_TRUE(oracle::is_blocking_set(k3, {{0}, {1}}));
    EXPECT_FALSE(oracle::is_blocking_set(k3, {{0}}));
    EXPECT_FALSE(oracle::is_blocking_set(k3, {{0, 1}}));
    EXPECT_TRUE(oracle::is_blocking_set(k3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Oracle, MinimalBlockingSets) {
    std::vector<CliqueFamily> k3 = oracle::minimal_blocking_sets({complete_graph(3), {}, 3}, 3);
    EXPECT_NE(std::find(k3.begin(), k3.end(), CliqueFamily{{0}, {1}}), k3.end());
    EXPECT_NE(std::find(k3.begin(), k3.end(), CliqueFamily{{0, 1}, {0, 2}, {1, 2}}), k3.end());
    for (const CliqueFamily& b : k3) EXPECT_GE(b.size(), 2u);

    std::vector<CliqueFamily> edge = oracle::minimal_blocking_sets({path_graph(2), {}, 3}, 3);
    EXPECT_NE(std::find(edge.begin(), edge.end(), CliqueFamily{{0}}), edge.end());
    EXPECT_NE(std::find(edge.begin(), edge.end(), CliqueFamily{{1}}), edge.end());

    EXPECT_TRUE(oracle::minimal_blocking_sets({Graph(), {}, 3}, 3).empty());
}

// For K_t the singletons {v} are the optimal solutions and the (t-1)-cliques K_t - v block them pairwise,
// which gives a minimal blocking set of size t.
TEST(Oracle, CompleteGraphMmbsEqualsT) {
    EXPECT_EQ(oracle::mmbs_instance({complete_graph(3), {}, 3}).value, 3);
    EXPECT_EQ(oracle::mmbs_instance({complete_graph(4), {}, 4}).value, 4);
    EXPECT_EQ(oracle::mmbs_graph(complete_graph(3), 3).value, 3);
    EXPECT_EQ(oracle::mmbs_graph(complete_graph(4), 4).value, 4);
}

TEST(Oracle, MmbsOfKtFreeGraphsIsAtMostOne) {
    Rng rng(14);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_graph(6, 0.3, rng);
        if (has_t_clique(g, 3)) continue;
        EXPECT_LE(oracle::mmbs_graph(g, 3).value, 1);
    }
}

TEST(Oracle, WitnessSearchMatchesLiteralEnumeration) {
    for (const Graph& g : connected_graphs_up_to(4)) {
        oracle::MmbsResult fast = oracle::mmbs_graph(g, 3);
        ASSERT_TRUE(fast.exact);
        EXPECT_EQ(fast.value, oracle::mmbs_graph_literal(g, 3));
        if (fast.value > 0) {
            EXPECT_EQ(static_cast<int>(fast.blocking.size()), fast.value);
        }
    }
    for (const Graph& g : connected_graphs_up_to(5)) {
        if (g.num_vertices() + g.num_edges() > 12) continue;
        EXPECT_EQ(oracle::mmbs_graph(g, 3).value, oracle::mmbs_graph_literal(g, 3));
    }
}

TEST(Oracle, ReportedMmbsWitnessIsAMinimalBlockingSetOfACleanFamily) {
    for (const Graph& g : connected_graphs_up_to(5)) {
        oracle::MmbsResult r = oracle::mmbs_graph(g, 3);
        if (r.value == 0) continue;
        ExtendedInstance inst{g, r.family, 3};
        ASSERT_EQ(oracle::brute_opt_ekt(inst).value, oracle::brute_opt_ekt({g, {}, 3}).value);
        ASSERT_TRUE(oracle::is_blocking_set(inst, r.blocking));
        for (std::size_t i = 0; i < r.blocking.size(); ++i) {
            CliqueFamily smaller = r.blocking;
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
            EXPECT_FALSE(oracle::is_blocking_set(inst, smaller));
        }
    }
}

TEST(Oracle, TriangleChainTopsFormAMinimalBlockingSet) {
    for (int ell = 1; ell <= 3; ++ell) {
        Graph g = triangle_chain(ell);
        ExtendedInstance inst{g, all_edges(g), 4};
        CliqueFamily tops;
        for (Vertex v : triangle_chain_tops(ell)) tops.push_back({v});
        EXPECT_TRUE(oracle::is_blocking_set(inst, tops)) << "ell = " << ell;
        for (std::size_t i = 0; i < tops.size(); ++i) {
            CliqueFamily smaller = tops;
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
            EXPECT_FALSE(oracle::is_blocking_set(inst, smaller)) << "ell = " << ell;
        }
    }
}

TEST(Oracle, ConflictValues) {
    Graph g(3, {{0, 1}, {2, 0}, {2, 1}});
    EXPECT_EQ(oracle::brute_conflict_value(g, {2}, {0, 1}, 3), 1);
    EXPECT_EQ(oracle::brute_conflict_value(fixtures::triangle_with_ear(), {3}, {0, 1, 2}, 3), 0);
    EXPECT_EQ(oracle::brute_project(fixtures::triangle_with_ear(), {3}, {0, 1, 2}, 3), (CliqueFamily{{0, 1}}));
}

}  // namespace
}  // namespace kthit
