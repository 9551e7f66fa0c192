#include <gtest/gtest.h>

#include <random>

#include "fsprim/ratlinalg.hpp"
#include "fsprim/rational.hpp"

using fsprim::RatMatrix;
using fsprim::Rational;

TEST(Rational, NormalizesSignAndGcd)
{
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(0, -5), Rational(0));
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, MatchesGmpOnRandomOperations)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
    Rational acc(1);
    mpq_class ref(1);
    for (int step = 0; step < 2000; ++step) {
        std::int64_t n = small(rng);
        std::int64_t d = small(rng);
        if (d == 0) d = 1;
        Rational x(n, d);
        mpq_class xr(static_cast<long>(n), static_cast<long>(d));
        xr.canonicalize();
        switch (step % 4) {
        case 0: acc += x; ref += xr; break;
        case 1: acc -= x; ref -= xr; break;
        case 2: if (n != 0) { acc *= x; ref *= xr; } break;
        case 3: if (n != 0) { acc /= x; ref /= xr; } break;
        }
        ASSERT_EQ(acc.to_mpq(), ref) << "step " << step;
    }
}

TEST(Rational, PromotesAndDemotes)
{
    const std::int64_t big = std::int64_t{1} << 62;
    Rational x(big);
    x *= Rational(8);
    EXPECT_EQ(x.to_mpq(), mpq_class(mpz_class(1) << 65));
    x /= Rational(16);
    EXPECT_EQ(x, Rational(big / 2));
    EXPECT_EQ(x.to_int64(), big / 2);
    Rational y(std::numeric_limits<std::int64_t>::max());
    y += Rational(1);
    y -= Rational(1);
    EXPECT_EQ(y, Rational(std::numeric_limits<std::int64_t>::max()));
}

TEST(Rational, SubMulAndOrdering)
{
    Rational x(1, 2);
    x.sub_mul(Rational(1, 3), Rational(3, 4)); // 1/2 - 1/4
    EXPECT_EQ(x, Rational(1, 4));
    EXPECT_LT(Rational(-1, 3), Rational(-1, 4));
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_FALSE(Rational(1, 2).is_integer());
}

TEST(RatLinalg, RankKernelImage)
{
    auto m = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    EXPECT_EQ(fsprim::rank(m), 2u);
    auto k = fsprim::kernel_basis(m);
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(fsprim::image_basis(m).cols(), 2u);
    EXPECT_EQ(fsprim::rank(RatMatrix::identity(5)), 5u);
    EXPECT_EQ(fsprim::kernel_basis(RatMatrix::identity(4)).cols(), 0u);
}

TEST(RatLinalg, KernelOfRandomMatricesAgreesWithRankNullity)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + trial % 6;
        std::size_t c = 1 + (trial * 7) % 8;
        std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
        for (auto& row : rows)
            for (auto& v : row) v = entry(rng);
        auto m = RatMatrix::from_rows(rows);
        auto k = fsprim::kernel_basis(m);
        EXPECT_EQ(k.cols() + fsprim::rank(m), c);
        EXPECT_TRUE((m * k).is_zero());
        EXPECT_EQ(fsprim::rank(k), k.cols());
    }
}

TEST(RatLinalg, SolveMembership)
{
    auto s = RatMatrix::from_rows({{1, 0}, {1, 1}, {0, 2}});
    std::vector<Rational> in{Rational(2), Rational(5), Rational(6)};
    auto coeffs = fsprim::solve_membership(s, in);
    ASSERT_TRUE(coeffs.has_value());
    EXPECT_EQ((*coeffs)[0], Rational(2));
    EXPECT_EQ((*coeffs)[1], Rational(3));
    std::vector<Rational> out{Rational(1), Rational(0), Rational(1)};
    EXPECT_FALSE(fsprim::solve_membership(s, out).has_value());
    std::vector<Rational> wrong{Rational(1)};
    EXPECT_THROW((void)fsprim::solve_membership(s, wrong), std::invalid_argument);
}

TEST(RatLinalg, SubspaceCoordinatesAndContainment)
{
    auto cols = RatMatrix::from_rows({{1, 2}, {1, 2}, {0, 1}, {3, 0}});
    auto sub = fsprim::Subspace::span_of(cols);
    EXPECT_EQ(sub.dimension(), 2u);
    for (std::size_t j = 0; j < sub.dimension(); ++j)
        EXPECT_EQ(sub.basis()(sub.pivots()[j], j), Rational(1));
    // 1*col0 + 1*col1 = (3,3,1,3)
    auto v = fsprim::to_sparse(std::vector<Rational>{Rational(3), Rational(3), Rational(1), Rational(3)});
    EXPECT_TRUE(sub.contains(v));
    auto w = fsprim::to_sparse(std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)});
    EXPECT_FALSE(sub.contains(w));
    EXPECT_TRUE(fsprim::Subspace::full(4).contains(sub));
    EXPECT_FALSE(sub.contains(fsprim::Subspace::full(4)));
    EXPECT_TRUE(sub.contains(fsprim::Subspace::zero(4)));
}

TEST(RatLinalg, EchelonBasisIncremental)
{
    fsprim::EchelonBasis e(4);
    EXPECT_TRUE(e.insert(fsprim::SparseVector{{0, Rational(2)}, {3, Rational(1)}}));
    EXPECT_TRUE(e.insert(fsprim::SparseVector{{1, Rational(1)}, {3, Rational(1)}}));
    EXPECT_FALSE(e.insert(fsprim::SparseVector{{0, Rational(4)}, {1, Rational(-1)}, {3, Rational(1)}}));
    EXPECT_TRUE(e.contains(fsprim::SparseVector{{0, Rational(2)}, {1, Rational(1)}, {3, Rational(2)}}));
    EXPECT_EQ(e.rank(), 2u);
    auto k = e.kernel();
    EXPECT_EQ(k.cols(), 2u);
}
