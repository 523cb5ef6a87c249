#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kthit/corpus.hpp"
#include "kthit/decomposition.hpp"
#include "kthit/ekt.hpp"
#include "kthit/errors.hpp"
#include "kthit/oracle.hpp"

namespace kthit {
namespace {

TEST(Ekt, Projection) {
    Graph ear = fixtures::triangle_with_ear();
    EXPECT_EQ(project(ear, {3}, {0, 1, 2}, 3), (CliqueFamily{{0, 1}}));
    EXPECT_TRUE(project(disjoint_union(complete_graph(3), complete_graph(3)), {0, 1, 2}, {3, 4, 5}, 3).empty());
    EXPECT_EQ(project(complete_graph(3), {0}, {1, 2}, 3), (CliqueFamily{{1, 2}}));
}

TEST(Ekt, ProjectionMatchesTheDefinition) {
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(8, 0.6, rng);
        VertexSet a, b;
        for (Vertex v = 0; v < 8; ++v) (rng() % 2 ? a : b).push_back(v);
        int t = 3 + i % 2;
        EXPECT_EQ(project(g, a, b, t), oracle::brute_project(g, a, b, t));
    }
}

TEST(Ekt, SolvesSmallInstances) {
    Graph k3 = complete_graph(3);
    EXPECT_EQ(solve_ekt({k3, {}, 3}, {1, 0}).size(), 1u);
    EXPECT_EQ(solve_ekt({k3, {{0}}, 3}, {1, 0}), (VertexSet{0}));
    VertexSet two = solve_ekt({k3, {{0}, {1}}, 3}, {1, 1});
    EXPECT_EQ(two.size(), 2u);
    EXPECT_TRUE(is_valid_solution(k3, {{0}, {1}}, 3, two));
    EXPECT_TRUE(solve_ekt({Graph(), {}, 3}, {0, 0}).empty());
}

TEST(Ekt, RejectsBadFamilies) {
    Graph p = path_graph(3);
    EXPECT_THROW(validate_family(p, {{0, 2}}, 3), PreconditionViolated);
    EXPECT_THROW(validate_family(complete_graph(3), {{0, 1, 2}}, 3), PreconditionViolated);
    EXPECT_THROW(validate_family(p, {{5}}, 3), PreconditionViolated);
}

TEST(Ekt, OptAndClean) {
    Graph k3 = complete_graph(3);
    OptClean a = opt_and_clean({k3, {{0}}, 3}, 1);
    EXPECT_EQ(a.opt_g, 1);
    EXPECT_TRUE(a.clean);
    OptClean b = opt_and_clean({k3, {{0}, {1}}, 3}, 1);
    EXPECT_EQ(b.opt_g, 1);
    EXPECT_FALSE(b.clean);
    OptClean c = opt_and_clean({cycle_graph(5), {}, 3}, 0);
    EXPECT_EQ(c.opt_g, 0);
    EXPECT_TRUE(c.clean);
}

TEST(Ekt, ConflictPositivity) {
    Graph g(3, {{0, 1}, {2, 0}, {2, 1}});
    EXPECT_TRUE(conflict_positive(g, {2}, {0, 1}, 3, 1));
    EXPECT_FALSE(conflict_positive(g, {}, {0, 1}, 3, 1));
    EXPECT_FALSE(conflict_positive(fixtures::triangle_with_ear(), {3}, {0, 1, 2}, 3, 1));
    EXPECT_THROW(conflict_positive(complete_graph(4), {0, 1, 2}, {3}, 3, 1), PreconditionViolated);
    EXPECT_THROW(conflict_positive(g, {0}, {0, 1}, 3, 1), PreconditionViolated);
}

TEST(Ekt, ConflictMatchesTheDefinition) {
    Rng rng(10);
    int positive = 0;
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(8, 0.55, rng);
        VertexSet s1, s2;
        for (Vertex v = 0; v < 8; ++v) {
            auto r = rng() % 3;
            if (r == 0) s1.push_back(v);
            else if (r == 1) s2.push_back(v);
        }
        if (has_t_clique_within(g, s1, 3)) continue;
        int lambda = bed_value(induced_subgraph(g, s2).graph, 3, 8).value;
        bool fast = conflict_positive(g, s1, s2, 3, lambda);
        EXPECT_EQ(fast, oracle::brute_conflict_value(g, s1, s2, 3) > 0);
        positive += fast;
    }
    EXPECT_GT(positive, 10);
}

TEST(Ekt, StaysValidWhenPromisesFail) {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        int t = 3 + i % 2;
        Graph g = random_graph(9, 0.7, rng);
        CliqueFamily f = random_family(g, t, 4, rng);
        VertexSet s = solve_ekt({g, f, t}, {0, 0});
        EXPECT_TRUE(is_valid_solution(g, f, t, s));
    }
}

}  // namespace
}  // namespace kthit
