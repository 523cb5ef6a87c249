#include <gtest/gtest.h>

#include "kthit/blocking.hpp"
#include "kthit/errors.hpp"
#include "kthit/graph.hpp"

namespace kthit {
namespace {

TEST(Blocking, Beta) {
    EXPECT_EQ(beta(0, 3), 1);
    EXPECT_EQ(beta(1, 3), 8);
    EXPECT_EQ(beta(2, 3), BigInt(1) << 24);
    EXPECT_EQ(beta(1, 4), 16);
    EXPECT_EQ(beta_log2(2, 3), 24);
    EXPECT_THROW(beta(3, 3), Overflow);
    EXPECT_EQ(format_beta(3, 3), "2^50331648");
}

TEST(Blocking, AtMostBetaWorksBeyondTheBudget) {
    EXPECT_TRUE(at_most_beta(BigInt(1) << 100, 3, 3));
    EXPECT_TRUE(at_most_beta(8, 1, 3));
    EXPECT_FALSE(at_most_beta(9, 1, 3));
    EXPECT_FALSE(at_most_beta(2, 0, 3));
}

TEST(Blocking, DerivedBounds) {
    EXPECT_EQ(chunk_bound(1, 3), 16);
    EXPECT_EQ(kernel_degree(1, 3), 2 * 34);
    EXPECT_EQ(td_mmbs_bound(0), 1);
    EXPECT_EQ(td_mmbs_bound(1), 2);
    EXPECT_EQ(td_mmbs_bound(2), 64);
    EXPECT_EQ(td_mmbs_bound(3), 13824);
    EXPECT_EQ(saturate(BigInt(1) << 80, 1000), 1000);
    EXPECT_EQ(format_big(BigInt(1) << 200), "2^200");
    EXPECT_EQ(format_big(12345), "12345");
}

TEST(Blocking, VerifiesSmallGraphs) {
    BoundsReport k3 = verify_mmbs_bounds(complete_graph(3), 3);
    EXPECT_EQ(k3.bed, 1);
    EXPECT_EQ(k3.mmbs, 3);
    EXPECT_EQ(k3.beta_text, "8");
    EXPECT_TRUE(k3.pass);

    BoundsReport free = verify_mmbs_bounds(cycle_graph(5), 3);
    EXPECT_EQ(free.bed, 0);
    EXPECT_LE(free.mmbs, 1);
    EXPECT_TRUE(free.pass);

    EXPECT_TRUE(verify_mmbs_bounds(complete_graph(4), 3).pass);
}

}  // namespace
}  // namespace kthit
