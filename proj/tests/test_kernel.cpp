#include <gtest/gtest.h>

#include "kthit/corpus.hpp"
#include "kthit/decomposition.hpp"
#include "kthit/errors.hpp"
#include "kthit/kernel.hpp"
#include "kthit/oracle.hpp"

namespace kthit {
namespace {

Graph disjoint_cliques(int count, int t) {
    Graph g;
    for (int i = 0; i < count; ++i) g = disjoint_union(g, complete_graph(t));
    return g;
}

RootDecomposition root_of(const ModulatorInstance& inst, VertexSet& n_set) {
    Subgraph gx = remove_vertices(inst.graph, inst.modulator);
    n_set = gx.to_old(non_kt_vertices(gx.graph, inst.t));
    return modulator_root(inst.graph, all_vertices(inst.graph), inst.modulator, n_set, inst.t, inst.lambda);
}

// Triangle {0,1,2} and the modulator edge {3,4} with both ends adjacent to 0 and 1. The chunk {3,4}
// projects {0} and {1} onto the triangle, so hitting them costs one more vertex than the triangle alone.
ModulatorInstance conflicting_triangle() {
    Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 0}, {3, 1}, {4, 0}, {4, 1}});
    return ModulatorInstance{g, {3, 4}, 2, 3, 1};
}

ModulatorInstance random_instance(Rng& rng) {
    for (;;) {
        int n = 3 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, 0.45, rng);
        VertexSet x;
        for (Vertex v = 0; v < n && static_cast<int>(x.size()) < 5; ++v)
            if (rng() % 3 == 0) x.push_back(v);
        if (!bed_at_most(remove_vertices(g, x).graph, 3, 1)) continue;
        return ModulatorInstance{g, x, static_cast<long long>(rng() % 5), 3, 1};
    }
}

TEST(Kernel, ValidatesInstances) {
    EXPECT_NO_THROW(validate_instance({complete_graph(3), {}, 1, 3, 1}));
    EXPECT_THROW(validate_instance({complete_graph(4), {}, 1, 3, 1}), PreconditionViolated);
    EXPECT_THROW(validate_instance({complete_graph(3), {}, -1, 3, 1}), PreconditionViolated);
    EXPECT_THROW(validate_instance({complete_graph(3), {7}, 1, 3, 1}), PreconditionViolated);
}

TEST(Kernel, Chunks) {
    EXPECT_EQ(chunks({Graph(3), {0, 1, 2}, 0, 3, 1}, 16).size(), 7u);
    std::vector<VertexSet> tri = chunks({complete_graph(3), {0, 1, 2}, 1, 3, 1}, 16);
    EXPECT_EQ(tri.size(), 6u);
    EXPECT_EQ(tri.front(), (VertexSet{0}));
    EXPECT_EQ(tri.back(), (VertexSet{1, 2}));
    EXPECT_TRUE(chunks({complete_graph(3), {}, 1, 3, 1}, 16).empty());
    EXPECT_EQ(chunks({Graph(3), {0, 1, 2}, 0, 3, 1}, 1).size(), 3u);
}

TEST(Kernel, ChunkBoundIsCapped) {
    EXPECT_EQ(effective_chunk_bound(1, 3, 100), 16);
    EXPECT_EQ(effective_chunk_bound(1, 3, 4), 4);
    EXPECT_EQ(effective_chunk_bound(2, 3, 16), 16);
}

TEST(Kernel, MarkWithNegativeCounterIsEmpty) {
    ModulatorInstance inst = conflicting_triangle();
    VertexSet n_set;
    RootDecomposition dec = root_of(inst, n_set);
    EXPECT_TRUE(mark(dec, n_set, {3, 4}, -1, {}, {}, inst, {}).empty());
    EXPECT_THROW(mark(dec, n_set, {3, 4}, 99, {}, {}, inst, {}), PreconditionViolated);
}

TEST(Kernel, PositiveConflictMarksTheRoot) {
    ModulatorInstance inst = conflicting_triangle();
    VertexSet n_set;
    RootDecomposition dec = root_of(inst, n_set);
    ASSERT_EQ(dec.root_vertices().size(), 1u);
    EXPECT_EQ(mark(dec, n_set, {3, 4}, effective_chunk_bound(1, 3, kDefaultChunkCap), {}, {}, inst, {}),
              dec.root_vertices());
    EXPECT_TRUE(mark(dec, n_set, {3}, 1, {}, {}, inst, {}).empty());
    MarkState marks = step1_mark(dec, n_set, inst, {});
    EXPECT_EQ(marks.marked, dec.root_vertices());
    EXPECT_FALSE(step2_remove(inst, dec, n_set, marks).has_value());
}

TEST(Kernel, NothingIsMarkedWithoutAModulator) {
    ModulatorInstance inst{disjoint_cliques(3, 3), {}, 3, 3, 1};
    VertexSet n_set;
    RootDecomposition dec = root_of(inst, n_set);
    MarkState marks = step1_mark(dec, n_set, inst, {});
    EXPECT_TRUE(marks.marked.empty());
    std::optional<Step2Result> r = step2_remove(inst, dec, n_set, marks);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->removed, (VertexSet{0, 1, 2}));
    EXPECT_EQ(r->opt, 1);
    EXPECT_EQ(r->k, 2);
    EXPECT_EQ(r->graph.num_vertices(), 6);
}

TEST(Kernel, RemovesATrianglePendingOffARootEdge) {
    Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    ModulatorInstance inst{g, {}, 2, 3, 1};
    RootDecomposition dec = modulator_root(g, all_vertices(g), {}, {}, 3, 1, std::vector<VertexSet>{{2, 3}});
    EXPECT_EQ(dec.pending.at(2), (VertexSet{0, 1, 2}));
    std::optional<Step2Result> r = step2_remove(inst, dec, {}, step1_mark(dec, {}, inst, {}));
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->v, 2);
    EXPECT_EQ(r->k, 1);
}

TEST(Kernel, RemovalIsSafe) {
    Rng rng(31);
    int fired = 0;
    for (int i = 0; i < 300; ++i) {
        ModulatorInstance inst = random_instance(rng);
        VertexSet n_set;
        RootDecomposition dec = root_of(inst, n_set);
        if (dec.roots.empty()) continue;
        MarkState marks = step1_mark(dec, n_set, inst, {});
        std::optional<Step2Result> r = step2_remove(inst, dec, n_set, marks);
        if (!r) continue;
        ++fired;
        for (long long k = 0; k <= 6; ++k)
            EXPECT_EQ(oracle::decide_kt_hitting(inst.graph, 3, k), oracle::decide_kt_hitting(r->graph, 3, k - r->opt))
                << "instance " << i << ", k = " << k;
    }
    EXPECT_GT(fired, 30);
}

TEST(Kernel, BaseKernel) {
    for (int t = 3; t <= 4; ++t)
        for (int k = 0; k <= 3; ++k) EXPECT_EQ(base_kernel(disjoint_cliques(k + 1, t), k, t).decision, Decision::No);
    EXPECT_EQ(base_kernel(cycle_graph(7), 0, 3).decision, Decision::Yes);
    BaseKernelResult single = base_kernel(complete_graph(4), 1, 4);
    ASSERT_EQ(single.decision, Decision::Undecided);
    EXPECT_LE(single.graph.num_vertices(), 4);
    EXPECT_TRUE(oracle::decide_kt_hitting(single.graph, 4, single.k));
}

TEST(Kernel, BaseKernelForcesSunflowerCores) {
    // Three triangles through the edge {0,1}: with k = 2 the core {0,1} replaces them.
    Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
    BaseKernelResult r = base_kernel(g, 2, 3);
    ASSERT_EQ(r.decision, Decision::Undecided);
    EXPECT_EQ(r.cores, (CliqueFamily{{0, 1}}));
    EXPECT_EQ(r.hyperedges, 1);
    EXPECT_EQ(oracle::decide_kt_hitting(r.graph, 3, r.k), oracle::decide_kt_hitting(g, 3, 2));
    EXPECT_EQ(base_kernel_hyperedge_bound(2, 3), 8 * 6 * 3);
}

TEST(Kernel, DecidesTrivialInstances) {
    KernelResult free = kernelize({cycle_graph(5), {}, 0, 3, 1});
    EXPECT_EQ(free.decision, Decision::Yes);

    KernelResult no = kernelize({disjoint_cliques(5, 3), {}, 4, 3, 1});
    EXPECT_EQ(no.decision, Decision::No);
    int removals = 0;
    long long removed_opt = 0;
    for (const TraceEntry& e : no.trace)
        if (e.kind == "removal") {
            ++removals;
            removed_opt += e.value;
        }
    EXPECT_EQ(removals, 5);
    EXPECT_EQ(removed_opt, 5);

    EXPECT_EQ(kernelize({disjoint_cliques(5, 3), {}, 5, 3, 1}).decision, Decision::Yes);
}

TEST(Kernel, OutputIsAnInstanceWithoutCliquesOutsideTheModulator) {
    Rng rng(37);
    int undecided = 0;
    for (int i = 0; i < 300; ++i) {
        ModulatorInstance inst = random_instance(rng);
        KernelResult r = kernelize(inst);
        if (r.decision != Decision::Undecided) continue;
        ++undecided;
        EXPECT_FALSE(has_t_clique(remove_vertices(r.instance.graph, r.instance.modulator).graph, 3));
        EXPECT_EQ(r.origin.size(), static_cast<std::size_t>(r.instance.graph.num_vertices()));
        bool expected = oracle::decide_kt_hitting(inst.graph, 3, inst.k);
        EXPECT_EQ(oracle::decide_kt_hitting(r.instance.graph, 3, r.instance.k), expected);
    }
    EXPECT_GT(undecided, 5);
}

TEST(Kernel, TracesReplay) {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        ModulatorInstance inst = random_instance(rng);
        KernelResult r = kernelize(inst);
        KernelResult back = replay_kernel_trace(inst, r.trace);
        EXPECT_EQ(back.decision, r.decision);
        EXPECT_EQ(back.instance, r.instance);
        EXPECT_EQ(back.origin, r.origin);
    }
}

TEST(Kernel, ReplayRejectsForeignTraces) {
    ModulatorInstance inst{disjoint_cliques(2, 3), {}, 5, 3, 1};
    std::vector<TraceEntry> bogus{{"removal", 1, 9, {9}, 1, ""}};
    EXPECT_THROW(replay_kernel_trace(inst, bogus), PreconditionViolated);
    EXPECT_THROW(replay_kernel_trace(inst, {}), PreconditionViolated);
}

TEST(Kernel, CapFlag) {
    ModulatorInstance inst = conflicting_triangle();
    EXPECT_FALSE(kernelize(inst, {16}).capped);
    EXPECT_TRUE(kernelize(inst, {4}).capped);
    EXPECT_THROW(kernelize(inst, {0}), PreconditionViolated);
}

}  // namespace
}  // namespace kthit
