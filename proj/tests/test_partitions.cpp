#include <gtest/gtest.h>

#include "fsprim/partitions.hpp"

using fsprim::Partition;

TEST(Partitions, CountsMatchPartitionNumbers)
{
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n < static_cast<int>(p.size()); ++n) EXPECT_EQ(fsprim::partitions_of(n).size(), p[static_cast<std::size_t>(n)]);
}

TEST(Partitions, CanonicalOrder)
{
    const auto& four = fsprim::partitions_of(4);
    std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(four, expected);
    EXPECT_LT(Partition({3}), Partition({1, 1, 1, 1}));
    EXPECT_LT(Partition(), Partition({1}));
}

TEST(Partitions, RejectsInvalid)
{
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}

TEST(Partitions, ConjugateIsInvolution)
{
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : fsprim::partitions_of(n)) EXPECT_EQ(fsprim::conjugate(fsprim::conjugate(p)), p);
    EXPECT_EQ(fsprim::conjugate(Partition({3, 1})), Partition({2, 1, 1}));
}

TEST(Partitions, DimensionsSquareSumToFactorial)
{
    for (int n = 0; n <= 10; ++n) {
        std::uint64_t sum = 0;
        for (const auto& p : fsprim::partitions_of(n)) sum += fsprim::irrep_dimension(p) * fsprim::irrep_dimension(p);
        EXPECT_EQ(sum, fsprim::factorial(n));
    }
    EXPECT_EQ(fsprim::irrep_dimension(Partition({3, 2})), 5u);
}

TEST(Partitions, ClassSizesSumToFactorial)
{
    for (int n = 0; n <= 10; ++n) {
        std::uint64_t sum = 0;
        for (const auto& p : fsprim::partitions_of(n)) sum += fsprim::class_size(p);
        EXPECT_EQ(sum, fsprim::factorial(n));
    }
    EXPECT_EQ(fsprim::centralizer_order(Partition({2, 2, 1})), 8u);
}

TEST(Partitions, Helpers)
{
    EXPECT_EQ(Partition::hook(3, 2), Partition({3, 1, 1}));
    EXPECT_EQ(Partition::row(0), Partition());
    EXPECT_EQ(Partition::column(3).to_string(), "[1,1,1]");
    EXPECT_EQ(fsprim::binomial(6, 2), 15u);
    EXPECT_EQ(fsprim::partition_index(Partition({2, 2})), 2u);
}
