#include <gtest/gtest.h>

#include <map>
#include <utility>
#include <vector>

#include "fsprim/fsfilt.hpp"

using namespace fsprim;

namespace {

using Term = std::pair<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>;

BiSchurClass bi(const std::vector<Term>& terms)
{
    BiSchurClass out;
    for (const auto& [key, c] : terms) out.add(Partition(key.first), Partition(key.second), c);
    return out;
}

// dim kFS^t(b, a) for t = 0 .. b - a, from an independent brute-force computation.
const std::map<std::pair<int, int>, std::vector<std::size_t>>& frozen_levels()
{
    static const std::map<std::pair<int, int>, std::vector<std::size_t>> table{
        {{0, 0}, {1}},
        {{1, 0}, {0, 0}},       {{1, 1}, {1}},
        {{2, 0}, {0, 0, 0}},    {{2, 1}, {0, 1}},       {{2, 2}, {2}},
        {{3, 0}, {0, 0, 0, 0}}, {{3, 1}, {0, 0, 1}},    {{3, 2}, {1, 6}},          {{3, 3}, {6}},
        {{4, 1}, {0, 0, 0, 1}}, {{4, 2}, {1, 5, 14}},   {{4, 3}, {13, 36}},        {{4, 4}, {24}},
        {{5, 1}, {0, 0, 0, 0, 1}}, {{5, 2}, {1, 6, 16, 30}}, {{5, 3}, {29, 94, 150}}, {{5, 4}, {121, 240}},
        {{5, 5}, {120}},
        {{6, 1}, {0, 0, 0, 0, 0, 1}}, {{6, 2}, {1, 7, 22, 42, 62}}, {{6, 3}, {61, 235, 430, 540}},
        {{6, 4}, {479, 1205, 1560}}, {{6, 5}, {1081, 1800}}, {{6, 6}, {720}},
    };
    return table;
}

} // namespace

TEST(Filtration, FrozenLevelDimensions)
{
    for (const auto& [key, dims] : frozen_levels()) {
        const auto [b, a] = key;
        for (std::size_t t = 0; t < dims.size(); ++t)
            EXPECT_EQ(filtration_level(b, a, static_cast<int>(t)).dimension(), dims[t]) << b << " " << a << " " << t;
    }
}

TEST(Filtration, EndpointsAndNormalization)
{
    EXPECT_EQ(filtration_level(4, 2, -1).dimension(), 0u);
    EXPECT_EQ(filtration_level(4, 2, -5).dimension(), 0u);
    EXPECT_EQ(filtration_level(4, 2, 2).dimension(), 14u);
    EXPECT_EQ(filtration_level(4, 2, 9).dimension(), 14u);
    EXPECT_EQ(filtration_level(4, 2, 9).space, filtration_level(4, 2, 2).space);
    EXPECT_EQ(level_restriction(4, 2, 2), nullptr);
    EXPECT_NE(level_restriction(4, 2, 1), nullptr);
}

TEST(Filtration, LevelsAtSevenStaySparse)
{
    EXPECT_EQ(primitives(7, 6).dimension(), 10081u);
    EXPECT_EQ(primitives(7, 5).dimension(), 6719u);
    EXPECT_EQ(filtration_level(7, 5, 1).dimension(), 14286u);
}

TEST(Filtration, FrozenPrimitiveClasses)
{
    EXPECT_EQ(primitives_decompose(3, 2), bi({{{{1, 1}, {3}}, 1}}));
    EXPECT_EQ(primitives_decompose(4, 2), bi({{{{2}, {4}}, 1}}));
    EXPECT_EQ(primitives_decompose(5, 2), bi({{{{1, 1}, {5}}, 1}}));
    EXPECT_EQ(primitives_decompose(2, 2), bi({{{{2}, {2}}, 1}, {{{1, 1}, {1, 1}}, 1}}));
    EXPECT_EQ(primitives_decompose(4, 3),
              bi({{{{3}, {2, 2}}, 1}, {{{2, 1}, {4}}, 1}, {{{2, 1}, {3, 1}}, 1}, {{{1, 1, 1}, {3, 1}}, 1}}));
    EXPECT_EQ(primitives_decompose(6, 3),
              bi({{{{3}, {6}}, 1},
                  {{{3}, {4, 2}}, 1},
                  {{{2, 1}, {6}}, 1},
                  {{{2, 1}, {5, 1}}, 2},
                  {{{2, 1}, {4, 2}}, 1},
                  {{{1, 1, 1}, {6}}, 1},
                  {{{1, 1, 1}, {5, 1}}, 1},
                  {{{1, 1, 1}, {3, 3}}, 1}}));
    EXPECT_TRUE(primitives_decompose(3, 1).is_zero());
    EXPECT_EQ(primitives_decompose(6, 4).dimension(), 479);
}

TEST(Filtration, FsDecomposeMatchesDimension)
{
    for (int b = 0; b <= 5; ++b)
        for (int a = 0; a <= b; ++a)
            EXPECT_EQ(fs_decompose(b, a).dimension(), static_cast<std::int64_t>(fs_module(b, a)->dimension()));
    EXPECT_EQ(fs_decompose(3, 3), bi({{{{3}, {3}}, 1}, {{{2, 1}, {2, 1}}, 1}, {{{1, 1, 1}, {1, 1, 1}}, 1}}));
}

TEST(FiAction, SmallExamples)
{
    const RatMatrix m = fi_action_on_fs(2, 1, 1);
    ASSERT_EQ(m.rows(), 2u);
    ASSERT_EQ(m.cols(), 1u);
    EXPECT_EQ(m(0, 0), Rational(1));
    EXPECT_EQ(m(1, 0), Rational(1));

    // a > c: every composite fails to be surjective.
    const RatMatrix z = fi_action_on_fs(4, 3, 2);
    EXPECT_EQ(z.rows(), 0u);
    EXPECT_EQ(z.cols(), 36u);

    EXPECT_THROW((void)fi_action_on_fs(2, 1, 3), std::invalid_argument);
}

TEST(FiAction, BijectionsPermuteTheBasis)
{
    const int b = 3;
    const int a = 2;
    const RatMatrix m = fi_action_on_fs(b, a, b);
    const std::size_t n = fs_module(b, a)->dimension();
    ASSERT_EQ(m.rows(), 6 * n);
    for (std::size_t k = 0; k < 6; ++k)
        for (std::size_t col = 0; col < n; ++col) {
            int ones = 0;
            for (std::size_t r = 0; r < n; ++r) {
                const Rational& x = m(k * n + r, col);
                EXPECT_TRUE(x.is_zero() || x.is_one());
                ones += x.is_one() ? 1 : 0;
            }
            EXPECT_EQ(ones, 1);
        }
}

TEST(FiAction, FullKernelEqualsOrderPreservingKernel)
{
    for (int b = 1; b <= 4; ++b)
        for (int a = 1; a <= b; ++a)
            for (int t = 0; t < b - a; ++t) {
                const RatMatrix full = fi_action_on_fs(b, a, b - t - 1);
                const Subspace from_full = Subspace::span_of(kernel_basis(full));
                const auto level = filtration_level(b, a, t);
                EXPECT_EQ(from_full.dimension(), level.dimension()) << b << a << t;
                EXPECT_TRUE(from_full.contains(*level.space)) << b << a << t;
            }
}

TEST(Restriction, EquationsCutOutTheLevel)
{
    const auto r = restriction(4, 2, 3);
    EXPECT_EQ(r->subsets().size(), 4u);
    EXPECT_EQ(r->block_dimension(), 6u);
    const auto level = primitives(4, 2);
    for (std::size_t j = 0; j < level.dimension(); ++j) EXPECT_TRUE(r->annihilates(level.space->sparse_column(j)));
    EXPECT_FALSE(r->annihilates({{0, Rational(1)}}));
}

TEST(Closure, AgreesWithDenseMembership)
{
    for (int b = 1; b <= 4; ++b)
        for (int x = 1; x <= b; ++x)
            for (int y = 1; y <= x; ++y) {
                EXPECT_TRUE(closure_check(b, x, y)) << b << x << y;
                const auto outer = primitives(x, y);
                const auto inner = primitives(b, x);
                const RatMatrix target = primitives(b, y).basis_matrix();
                const std::size_t n = fs_module(b, y)->dimension();
                for (std::size_t i = 0; i < outer.dimension(); ++i)
                    for (std::size_t j = 0; j < inner.dimension(); ++j) {
                        const auto v = compose_vectors(outer.space->sparse_column(i), x, y, inner.space->sparse_column(j), b);
                        const auto dense = to_dense(v, n);
                        EXPECT_TRUE(solve_membership(target, dense).has_value()) << b << x << y;
                    }
            }
}

TEST(Closure, ComposeWithIdentity)
{
    // id o f = f.
    const auto fs = fs_module(3, 2);
    const auto id = fs_module(2, 2)->basis().index_of(std::vector<int>{0, 1});
    for (std::size_t f = 0; f < fs->dimension(); ++f) {
        const auto v = compose_vectors({{id, Rational(1)}}, 2, 2, {{f, Rational(3)}}, 3);
        ASSERT_EQ(v.size(), 1u);
        EXPECT_EQ(v.front().first, f);
        EXPECT_EQ(v.front().second, Rational(3));
    }
}

TEST(Theta, SmallMatrices)
{
    const RatMatrix t = theta_matrix(1, 2);
    ASSERT_EQ(t.rows(), 2u);
    ASSERT_EQ(t.cols(), 1u);
    EXPECT_EQ(t(0, 0), Rational(1));
    EXPECT_EQ(t(1, 0), Rational(1));

    const RatMatrix e = theta_matrix(0, 3);
    EXPECT_EQ(e.rows(), 1u);
    EXPECT_EQ(e.cols(), 0u);

    // Every column of Theta_a(b) lists one row per section of f.
    const auto cols = theta_columns(2, 4);
    const HomBasis fs(HomClass::surjection, 4, 2);
    for (std::size_t f = 0; f < cols.size(); ++f) {
        std::size_t sections = 1;
        std::vector<int> fibre(2, 0);
        for (int v : fs[f].values()) ++fibre[static_cast<std::size_t>(v)];
        for (int s : fibre) sections *= static_cast<std::size_t>(s);
        EXPECT_EQ(cols[f].size(), sections);
    }
}

TEST(Theta, EquivariantWithKnownRanks)
{
    for (int b = 0; b <= 4; ++b)
        for (int a = 0; a <= b; ++a) EXPECT_TRUE(theta_equivariance_check(a, b)) << a << b;
    EXPECT_EQ(theta_kernel(2, 3).rank, 5u);
    EXPECT_EQ(theta_kernel(3, 3).rank, 6u);
    EXPECT_EQ(theta_kernel(5, 6).rank, 719u);
    EXPECT_EQ(theta_kernel(2, 3).kernel->dimension(), filtration_level(3, 2, 0).dimension());
}

TEST(Theta, CokernelClasses)
{
    EXPECT_EQ(coker_theta_decompose(1, 2), bi({{{{1}, {1, 1}}, 1}}));
    EXPECT_TRUE(coker_theta_decompose(3, 3).is_zero());
    EXPECT_TRUE(coker_theta_decompose(0, 0).is_zero());
    EXPECT_EQ(coker_theta_decompose(0, 2), bi({{{{}, {2}}, 1}}));
    EXPECT_THROW((void)coker_theta_decompose(3, 2), std::invalid_argument);
}

TEST(LambdaBar, Examples)
{
    const RepSpace v = lambda_bar_rep(1, 3);
    EXPECT_EQ(v.dimension(), 2u);
    EXPECT_EQ(decompose(v), SchurClass::of(Partition{2, 1}));
    EXPECT_EQ(decompose(lambda_bar_rep(2, 4)), SchurClass::of(Partition{2, 1, 1}));
    EXPECT_EQ(decompose(lambda_bar_rep(0, 3)), SchurClass::of(Partition{3}));
    EXPECT_EQ(lambda_bar_rep(0, 0).dimension(), 0u);
    EXPECT_EQ(lambda_bar_rep(3, 3).dimension(), 0u);
}

TEST(Subquotient, Examples)
{
    EXPECT_EQ(subquotient_decompose(1, 2, 1), bi({{{{1}, {2}}, 1}}));
    EXPECT_EQ(subquotient_decompose(0, 4, 2), primitives_decompose(4, 2));
    BiSchurClass total;
    for (int l = 0; l <= 3; ++l) total += subquotient_decompose(l, 5, 2);
    EXPECT_EQ(total, fs_decompose(5, 2));
}

TEST(SgnVanishing, SmallCases)
{
    for (int a = 1; a <= 5; ++a)
        for (int c = 0; c < a; ++c) EXPECT_TRUE(sgn_vanishing_check(a, c)) << a << c;
}

TEST(ShortExactSequence, SmallCases)
{
    for (int l = 1; l <= 3; ++l) {
        const SesReport r = ses_check(l, 5);
        EXPECT_FALSE(r.vacuous());
        EXPECT_TRUE(r.passed()) << l;
        for (const auto& cell : r.cells) EXPECT_TRUE(cell.augmentation_trivial) << cell.b << cell.a;
    }
    EXPECT_TRUE(ses_check(4, 3).vacuous());
}
