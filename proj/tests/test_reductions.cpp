#include <gtest/gtest.h>

#include "kthit/corpus.hpp"
#include "kthit/errors.hpp"
#include "kthit/oracle.hpp"
#include "kthit/reductions.hpp"

namespace kthit {
namespace {

int tagged(const ReductionOutput& out, const std::string& tag) {
    int n = 0;
    for (const TaggedCopy& c : out.copies) n += c.tag == tag;
    return n;
}

bool anticomplete(const Graph& h, const VertexSet& a, const VertexSet& b) {
    for (Vertex x : a)
        for (Vertex y : b)
            if (x == y || h.adjacent(x, y)) return false;
    return true;
}

TEST(Reductions, AnticompletePairs) {
    auto [a, b] = find_anticomplete_pair(diamond_graph());
    EXPECT_EQ(a, (VertexSet{0}));
    EXPECT_EQ(b, (VertexSet{3}));

    auto [c, d] = find_anticomplete_pair(cycle_graph(5));
    EXPECT_EQ(c.size() + d.size(), 3u);
    EXPECT_GE(c.size(), d.size());
    EXPECT_TRUE(anticomplete(cycle_graph(5), c, d));

    EXPECT_THROW(find_anticomplete_pair(complete_graph(4)), IsClique);
}

TEST(Reductions, StableCutsets) {
    EXPECT_FALSE(has_stable_cutset(diamond_graph()));
    EXPECT_TRUE(has_stable_cutset(path_graph(3)));
    EXPECT_FALSE(has_stable_cutset(complete_graph(4)));
    EXPECT_TRUE(has_stable_cutset(cycle_graph(4)));
}

TEST(Reductions, DiamondGadget) {
    Graph d = diamond_graph();
    GadgetRoles roles = gadget_roles(d);
    AbGadget g = build_ab_gadget(d, roles.a_set, roles.b_set, roles.s, roles.t);
    EXPECT_EQ(g.graph.num_vertices(), 6);
    EXPECT_EQ(g.attachments.size(), 2u);
    ASSERT_EQ(g.copies.size(), 2u);
    for (const auto& emb : g.copies) EXPECT_TRUE(verify_embedding(d, g.graph, emb, false));
    std::vector<VertexSet> opt = oracle::all_optimal_h_hitting_sets(g.graph, d, false);
    EXPECT_EQ(opt, (std::vector<VertexSet>{make_set(g.a_vertices), make_set(g.b_vertices)}));
}

TEST(Reductions, GadgetKeepsTheLargerSideFirst) {
    Graph c5 = cycle_graph(5);
    auto [a, b] = find_anticomplete_pair(c5);
    AbGadget g = build_ab_gadget(c5, a, b, 0, 1);
    EXPECT_EQ(g.attachments.size(), 2 * a.size());
    EXPECT_EQ(g.copies.size(), 2 * a.size());
    for (const auto& emb : g.copies) EXPECT_TRUE(verify_embedding(c5, g.graph, emb, false));
}

TEST(Reductions, VedConstructionCounts) {
    CnfFormula phi{2, {{1, 2}}};
    ReductionOutput out = reduce_cnf_ved(phi, diamond_graph());
    EXPECT_EQ(tagged(out, "variable-copy"), 2);
    EXPECT_EQ(tagged(out, "clause-copy"), 1);
    EXPECT_EQ(tagged(out, "transversal"), 2);
    EXPECT_EQ(count_disjoint_copies(out), 3);
    EXPECT_EQ(out.budget, 3);
    EXPECT_EQ(out.modulator.size(), 8u);
    EXPECT_EQ(oracle::brute_opt_h_hitting(out.graph, diamond_graph(), false).value, 3);
    for (const TaggedCopy& c : out.copies) EXPECT_TRUE(verify_embedding(diamond_graph(), out.graph, c.embedding, false));
}

TEST(Reductions, VedUnsatisfiableFormula) {
    ReductionOutput out = reduce_cnf_ved({1, {{1}, {-1}}}, diamond_graph());
    EXPECT_EQ(out.budget, 1);
    EXPECT_GT(oracle::brute_opt_h_hitting(out.graph, diamond_graph(), false).value, 1);
}

TEST(Reductions, TdConstructionCounts) {
    ReductionOutput out = reduce_cnf_td({2, {{1, 2}}}, diamond_graph());
    EXPECT_EQ(out.budget, 3);
    EXPECT_EQ(out.modulator.size(), 8u);
    EXPECT_EQ(oracle::brute_opt_h_hitting(out.graph, diamond_graph(), false).value, 3);
    EXPECT_LE(treedepth_exact(remove_vertices(out.graph, out.modulator).graph).depth, 10);
}

TEST(Reductions, PreconditionsOnThePattern) {
    CnfFormula phi{1, {{1}}};
    EXPECT_THROW(reduce_cnf_ved(phi, complete_graph(4)), PreconditionViolated);
    EXPECT_THROW(reduce_cnf_ved(phi, path_graph(4)), PreconditionViolated);
    EXPECT_THROW(reduce_cnf_td(phi, path_graph(3)), PreconditionViolated);
}

TEST(Reductions, EveryVertexHasARoleTag) {
    for (const CnfFormula& phi : small_cnf_formulas(2, 2, 2)) {
        for (bool ved : {true, false}) {
            ReductionOutput out = ved ? reduce_cnf_ved(phi, diamond_graph()) : reduce_cnf_td(phi, diamond_graph());
            EXPECT_EQ(out.role_tags.size(), static_cast<std::size_t>(out.graph.num_vertices()));
        }
    }
}

TEST(Reductions, AgreeWithSatisfiabilityOnSmallFormulas) {
    for (const CnfFormula& phi : small_cnf_formulas(2, 3, 2)) {
        bool sat = is_satisfiable(phi);
        for (bool ved : {true, false}) {
            ReductionOutput out = ved ? reduce_cnf_ved(phi, diamond_graph()) : reduce_cnf_td(phi, diamond_graph());
            long long opt = oracle::brute_opt_h_hitting(out.graph, diamond_graph(), false).value;
            EXPECT_EQ(sat, opt <= out.budget);
            if (sat) {
                EXPECT_EQ(opt, out.budget);
            }
        }
    }
}

}  // namespace
}  // namespace kthit
