#include <gtest/gtest.h>

#include "kthit/corpus.hpp"
#include "kthit/errors.hpp"
#include "kthit/io.hpp"

namespace kthit {
namespace {

TEST(Io, ParsesGraphs) {
    EXPECT_EQ(parse_graph("p graph 3 3\ne 0 1\ne 1 2\ne 0 2\n"), complete_graph(3));
    EXPECT_EQ(parse_graph("c a comment\n\np graph 1 0\n").num_vertices(), 1);
}

TEST(Io, GraphErrorsCarryTheLine) {
    try {
        parse_graph("p graph 2 1\ne 0 0\n");
        FAIL() << "self-loop accepted";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
    EXPECT_THROW(parse_graph("p graph 2 2\ne 0 1\ne 1 0\n"), ParseError);
    EXPECT_THROW(parse_graph("p graph 2 1\ne 0 5\n"), ParseError);
    EXPECT_THROW(parse_graph("e 0 1\n"), ParseError);
}

TEST(Io, ParsesCnf) {
    CnfFormula a = parse_cnf("p cnf 2 1\n1 2 0\n");
    EXPECT_EQ(a.num_vars, 2);
    EXPECT_EQ(a.clauses, (std::vector<std::vector<int>>{{1, 2}}));
    CnfFormula b = parse_cnf("p cnf 1 2\n1 0\n-1 0\n");
    EXPECT_EQ(b.clauses, (std::vector<std::vector<int>>{{1}, {-1}}));
    EXPECT_FALSE(is_satisfiable(b));
    EXPECT_TRUE(is_satisfiable(a));
    EXPECT_THROW(parse_cnf("p cnf 1 1\n0\n"), ParseError);
}

TEST(Io, RoundTripsGraphsAndFormulas) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(1 + i % 12, 0.4, rng);
        EXPECT_EQ(parse_graph(serialize_graph(g)), g);
    }
    for (const CnfFormula& phi : small_cnf_formulas(2, 2, 2)) EXPECT_EQ(parse_cnf(serialize_cnf(phi)), phi);
}

TEST(Io, RoundTripsInstanceDocuments) {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        InstanceDocument doc;
        doc.graph = random_graph(2 + i % 10, 0.5, rng);
        doc.x = {0, 1};
        doc.k = i;
        doc.t = 3 + i % 2;
        doc.lambda = i % 3;
        doc.metadata_json = R"({"trace":[{"kind":"removal","value":1}],"guarantee":"theoretical"})";
        std::string text = serialize_instance(doc);
        InstanceDocument back = parse_instance(text);
        EXPECT_EQ(back, doc);
        EXPECT_EQ(serialize_instance(back), text);
    }
    EXPECT_THROW(parse_instance("{\"graph\":{\"n\":1,\"edges\":[]},\"x\":[3],\"k\":0,\"t\":3,\"lambda\":0}"),
                 ParseError);
}

TEST(Io, VertexLists) {
    EXPECT_EQ(parse_vertex_list("3,1, 2"), (VertexSet{1, 2, 3}));
    EXPECT_TRUE(parse_vertex_list("").empty());
    EXPECT_THROW(parse_vertex_list("1,x"), ParseError);
}

TEST(Io, DotLabels) {
    std::string dot = to_dot(path_graph(2), {"left", ""});
    EXPECT_NE(dot.find("0 [label=\"0:left\"]"), std::string::npos);
    EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
}

}  // namespace
}  // namespace kthit
