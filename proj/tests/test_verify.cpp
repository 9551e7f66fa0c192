#include <gtest/gtest.h>

#include "fsprim/fsfilt.hpp"
#include "fsprim/verify.hpp"

using namespace fsprim;

TEST(Formulas, SidesAgreeOnSmallCells)
{
    for (int b = 0; b <= 5; ++b)
        for (int a = 0; a <= b; ++a) {
            EXPECT_EQ(primfs_lhs(b, a), primfs_rhs(b, a)) << b << a;
            EXPECT_EQ(kring_lhs(b, a), kring_rhs(b, a)) << b << a;
            for (int l = 1; l <= b - a; ++l) EXPECT_EQ(subquotient_rhs(l, b, a), subquotient_decompose(l, b, a)) << l << b << a;
        }
}

TEST(Formulas, HandComputedSides)
{
    // prim(3,2) = ((1,1),(3)); the correction is -((1,1),(1,1,1)).
    BiSchurClass lhs = BiSchurClass::of(Partition{1, 1}, Partition{3});
    lhs.add(Partition{1, 1}, Partition{1, 1, 1}, -1);
    EXPECT_EQ(primfs_lhs(3, 2), lhs);
    // prim(1,1) . (1) = ((1),(2)) + ((1),(1,1)).
    BiSchurClass k = BiSchurClass::of(Partition{1}, Partition{2});
    k.add(Partition{1}, Partition{1, 1}, 1);
    EXPECT_EQ(kring_lhs(2, 1), k);
    EXPECT_TRUE(subquotient_rhs(0, 4, 2).is_zero());
    EXPECT_TRUE(subquotient_rhs(3, 4, 2).is_zero());
}

TEST(Reports, StatusesAndIds)
{
    EXPECT_EQ(check_ids().size(), 16u);
    EXPECT_EQ(check_ids().front(), "dims");
    for (const auto& id : check_ids()) EXPECT_NE(run_check(id, 3).status, Status::fail) << id;
    EXPECT_EQ(check_ses(0).status, Status::vacuous);
    EXPECT_EQ(check_ses(3).status, Status::pass);
    EXPECT_THROW((void)run_check("nope", 3), std::invalid_argument);
}

TEST(Reports, JsonIsDeterministic)
{
    const auto first = to_json(run_all(4)).dump();
    const auto second = to_json(run_all(4)).dump();
    EXPECT_EQ(first, second);
    EXPECT_EQ(first.find("elapsed"), std::string::npos);
    const auto timed = to_json(check_dims(2), true);
    EXPECT_TRUE(timed.contains("elapsed"));
    EXPECT_EQ(timed["status"], "pass");
}

TEST(Reports, DimsCsv)
{
    EXPECT_EQ(dims_csv(2),
              "b,a,dim_fs,dim_fs0,l0,l1,l2\n"
              "0,0,1,1,1,1,1\n"
              "1,0,0,0,0,0,0\n"
              "1,1,1,1,1,1,1\n"
              "2,0,0,0,0,0,0\n"
              "2,1,1,0,0,1,1\n"
              "2,2,2,2,2,2,2\n");
}
