#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fsprim/repdecomp.hpp"

using fsprim::BiSchurClass;
using fsprim::Partition;
using fsprim::RepSpace;
using fsprim::SchurClass;
using fsprim::SignedPermutation;

namespace {

// Cycle type of a permutation given as an image vector.
Partition cycle_type(const std::vector<int>& perm)
{
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(lengths);
}

// Frobenius induction by brute force over S_n: Ind(g) = (1/|H|) sum_x chi(x g x^-1),
// where chi vanishes off the Young subgroup S_p x S_q.
SchurClass brute_force_induction(const Partition& lambda, const Partition& mu)
{
    const int p = lambda.weight();
    const int n = p + mu.weight();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> group;
    do group.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    fsprim::ClassFunction ind{n, {}};
    for (const auto& nu : fsprim::partitions_of(n)) {
        // Standard representative of nu.
        std::vector<int> g(static_cast<std::size_t>(n));
        int start = 0;
        for (int k : nu.parts()) {
            for (int i = 0; i < k; ++i) g[static_cast<std::size_t>(start + i)] = start + (i + 1) % k;
            start += k;
        }
        std::int64_t sum = 0;
        for (const auto& x : group) {
            std::vector<int> inv(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])] = i;
            std::vector<int> c(static_cast<std::size_t>(n)); // x g x^-1
            for (int i = 0; i < n; ++i)
                c[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(g[static_cast<std::size_t>(inv[static_cast<std::size_t>(i)])])];
            bool in_h = true;
            for (int i = 0; i < p; ++i)
                if (c[static_cast<std::size_t>(i)] >= p) in_h = false;
            if (!in_h) continue;
            std::vector<int> h1(c.begin(), c.begin() + p);
            std::vector<int> h2;
            for (int i = p; i < n; ++i) h2.push_back(c[static_cast<std::size_t>(i)] - p);
            sum += fsprim::mn_character(lambda, cycle_type(h1)) * fsprim::mn_character(mu, cycle_type(h2));
        }
        const auto h = static_cast<std::int64_t>(fsprim::factorial(p) * fsprim::factorial(mu.weight()));
        ind.values.emplace_back(sum, h);
    }
    return fsprim::decompose_character(ind);
}

SignedPermutation swap_perm(std::size_t n, std::size_t i)
{
    std::vector<std::uint32_t> image(n);
    std::iota(image.begin(), image.end(), 0u);
    std::swap(image[i], image[i + 1]);
    return SignedPermutation(image);
}

// Ind (triv_p x sgn_q): basis = q-subsets T (positions carrying the sign
// factor); s_i swaps i and i+1 in T, with sign -1 when both lie in T.
RepSpace row_times_column_module(int p, int q)
{
    const int n = p + q;
    std::vector<unsigned> subsets;
    for (unsigned m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == q) subsets.push_back(m);
    std::vector<SignedPermutation> gens;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<std::uint32_t> image;
        std::vector<std::int8_t> signs;
        for (unsigned m : subsets) {
            bool bi = m >> i & 1u;
            bool bj = m >> (i + 1) & 1u;
            unsigned t = m & ~(1u << i) & ~(1u << (i + 1));
            if (bi) t |= 1u << (i + 1);
            if (bj) t |= 1u << i;
            image.push_back(static_cast<std::uint32_t>(std::find(subsets.begin(), subsets.end(), t) - subsets.begin()));
            signs.push_back(bi && bj ? -1 : 1);
        }
        gens.emplace_back(image, signs);
    }
    return RepSpace(n, subsets.size(), gens);
}

} // namespace

TEST(Characters, SmallTablesMatchTextbookValues)
{
    // Rows (3),(2,1),(1,1,1); columns (3),(2,1),(1,1,1).
    std::vector<std::vector<std::int64_t>> s3{{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}};
    EXPECT_EQ(fsprim::character_table(3).values, s3);
    // Rows and columns (4),(3,1),(2,2),(2,1,1),(1^4).
    std::vector<std::vector<std::int64_t>> s4{
        {1, 1, 1, 1, 1}, {-1, 0, -1, 1, 3}, {0, -1, 2, 0, 2}, {1, 0, -1, -1, 3}, {-1, 1, 1, -1, 1}};
    EXPECT_EQ(fsprim::character_table(4).values, s4);
    EXPECT_EQ(fsprim::mn_character(Partition({3, 2}), Partition({2, 2, 1})), 1);
    EXPECT_THROW((void)fsprim::mn_character(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST(Characters, OrthogonalityBothWays)
{
    for (int n = 0; n <= 7; ++n) {
        const auto& t = fsprim::character_table(n);
        const std::size_t k = t.partitions.size();
        const auto order = static_cast<std::int64_t>(fsprim::factorial(n));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                std::int64_t rows = 0;
                std::int64_t cols = 0;
                for (std::size_t c = 0; c < k; ++c) {
                    rows += static_cast<std::int64_t>(t.class_sizes[c]) * t.values[i][c] * t.values[j][c];
                    cols += t.values[c][i] * t.values[c][j];
                }
                EXPECT_EQ(rows, i == j ? order : 0);
                EXPECT_EQ(cols, i == j ? static_cast<std::int64_t>(fsprim::centralizer_order(t.partitions[i])) : 0);
            }
    }
}

TEST(Representations, RegularNaturalSign)
{
    for (int n = 1; n <= 4; ++n) {
        SchurClass expected;
        for (const auto& p : fsprim::partitions_of(n)) expected.add(p, static_cast<std::int64_t>(fsprim::irrep_dimension(p)));
        EXPECT_EQ(fsprim::decompose(RepSpace::regular(n)), expected);
    }
    EXPECT_EQ(fsprim::decompose(RepSpace::natural(4)), (SchurClass{{Partition({4}), 1}, {Partition({3, 1}), 1}}));
    EXPECT_EQ(fsprim::decompose(RepSpace::trivial(5)), SchurClass::of(Partition({5})));
    EXPECT_EQ(fsprim::decompose(RepSpace::trivial(0)), SchurClass::of(Partition()));
    std::vector<SignedPermutation> sgn(4, SignedPermutation({0}, {-1}));
    EXPECT_EQ(fsprim::decompose(RepSpace(5, 1, sgn)), SchurClass::of(Partition::column(5)));
}

TEST(Representations, SubspaceTraceOnStandardRepresentation)
{
    // Sum-zero vectors in k^3, spanned by e_0 - e_2 and e_1 - e_2.
    auto cols = fsprim::RatMatrix::from_rows({{1, 0}, {0, 1}, {-1, -1}});
    auto sub = std::make_shared<const fsprim::Subspace>(fsprim::Subspace::span_of(cols));
    auto nat = RepSpace::natural(3);
    RepSpace v(3, 3, nat.generators(), sub);
    EXPECT_TRUE(v.is_stable());
    EXPECT_EQ(fsprim::decompose(v), SchurClass::of(Partition({2, 1})));
    auto s1 = v.generator_matrix(0);
    auto s2 = v.generator_matrix(1);
    EXPECT_EQ(s1 * s1, fsprim::RatMatrix::identity(2));
    auto s12 = s1 * s2;
    EXPECT_EQ(s12 * s12 * s12, fsprim::RatMatrix::identity(2));
}

TEST(Representations, RejectsBrokenGenerators)
{
    // (0 1 2) is not an involution.
    SignedPermutation bad(std::vector<std::uint32_t>{1, 2, 0});
    EXPECT_THROW(RepSpace(2, 3, {bad}), std::invalid_argument);
    EXPECT_THROW(RepSpace(3, 3, {swap_perm(3, 0)}), std::invalid_argument);
    EXPECT_THROW(SignedPermutation(std::vector<std::uint32_t>{0, 0}), std::invalid_argument);
}

TEST(Representations, NonCharacterIsRejected)
{
    fsprim::ClassFunction f{3, {fsprim::Rational(1), fsprim::Rational(0), fsprim::Rational(0)}};
    EXPECT_THROW((void)fsprim::decompose_character(f), fsprim::ConsistencyError);
    auto neg = fsprim::irreducible_character(Partition({2, 1}));
    for (auto& v : neg.values) v = -v;
    EXPECT_THROW((void)fsprim::decompose_character(neg), fsprim::ConsistencyError);
    EXPECT_EQ(fsprim::decompose_character(neg, false), SchurClass::of(Partition({2, 1}), -1));
}

TEST(Representations, GroupAlgebraAsBimodule)
{
    // k[S_n] with left and right multiplication is sum_lambda (lambda, lambda).
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> elems;
        do elems.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        auto index = [&](const std::vector<int>& x) {
            return static_cast<std::uint32_t>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
        };
        std::vector<SignedPermutation> left;
        std::vector<SignedPermutation> right;
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<std::uint32_t> li;
            std::vector<std::uint32_t> ri;
            for (const auto& x : elems) {
                auto l = x; // s_i o x
                for (int& v : l) v = v == i ? i + 1 : (v == i + 1 ? i : v);
                auto r = x; // x o s_i
                std::swap(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(i + 1)]);
                li.push_back(index(l));
                ri.push_back(index(r));
            }
            left.emplace_back(li);
            right.emplace_back(ri);
        }
        fsprim::BiRepSpace bimod(n, n, elems.size(), left, right);
        BiSchurClass expected;
        for (const auto& p : fsprim::partitions_of(n)) expected.add(p, p, 1);
        EXPECT_EQ(fsprim::bidecompose(bimod), expected);
    }
}

TEST(Products, InductionMatchesBruteForceFrobenius)
{
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; p + q <= 5; ++q)
            for (const auto& lambda : fsprim::partitions_of(p))
                for (const auto& mu : fsprim::partitions_of(q))
                    EXPECT_EQ(fsprim::induction_product(lambda, mu), brute_force_induction(lambda, mu))
                        << lambda.to_string() << " " << mu.to_string();
}

TEST(Products, PieriAgreesWithInduction)
{
    for (int w = 0; w <= 5; ++w)
        for (const auto& lambda : fsprim::partitions_of(w))
            for (int n = 0; n <= 3; ++n) {
                EXPECT_EQ(fsprim::pieri_h(lambda, n), fsprim::induction_product(lambda, Partition::row(n)));
                EXPECT_EQ(fsprim::pieri_e(lambda, n), fsprim::induction_product(lambda, Partition::column(n)));
            }
}

TEST(Products, PieriSmallCases)
{
    EXPECT_EQ(fsprim::pieri_e(Partition({2}), 1), (SchurClass{{Partition({3}), 1}, {Partition({2, 1}), 1}}));
    EXPECT_EQ(fsprim::pieri_h(Partition({2, 1}), 2),
              (SchurClass{{Partition({4, 1}), 1}, {Partition({3, 2}), 1}, {Partition({3, 1, 1}), 1}, {Partition({2, 2, 1}), 1}}));
    EXPECT_EQ(fsprim::pieri_h(Partition(), 3), SchurClass::of(Partition({3})));
}

TEST(Products, RowTimesColumnModule)
{
    for (int p = 1; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            EXPECT_EQ(fsprim::decompose(row_times_column_module(p, q)),
                      fsprim::convolution_class(SchurClass::of(Partition::row(p)), SchurClass::of(Partition::column(q))));
}

TEST(Products, ConvolutionUsesGeneralPathCorrectly)
{
    // s_{21} * s_{21}.
    SchurClass expected{{Partition({4, 2}), 1},       {Partition({4, 1, 1}), 1}, {Partition({3, 3}), 1},
                        {Partition({3, 2, 1}), 2},    {Partition({3, 1, 1, 1}), 1}, {Partition({2, 2, 2}), 1},
                        {Partition({2, 2, 1, 1}), 1}};
    SchurClass x = SchurClass::of(Partition({2, 1}));
    EXPECT_EQ(fsprim::convolution_class(x, x), expected);
    auto bi = fsprim::biconvolution_right(BiSchurClass::of(Partition({1}), Partition({1})), SchurClass::of(Partition({1})));
    EXPECT_EQ(bi, (BiSchurClass{{{Partition({1}), Partition({2})}, 1}, {{Partition({1}), Partition({1, 1})}, 1}}));
}

TEST(Products, DeRhamAndInversion)
{
    for (int n = 1; n <= 10; ++n) EXPECT_TRUE(fsprim::derham_check(n)) << n;
    for (int w = 0; w <= 5; ++w)
        for (const auto& lambda : fsprim::partitions_of(w))
            for (int n = 0; n <= 7; ++n) {
                SchurClass expected = n == w ? SchurClass::of(lambda) : SchurClass();
                EXPECT_EQ(fsprim::invert_component(SchurClass::of(lambda), n), expected);
            }
}

TEST(SchurClasses, JsonRoundTripAndOrder)
{
    SchurClass x{{Partition({1, 1}), -2}, {Partition({2}), 3}, {Partition({3}), 0}};
    auto j = fsprim::to_json(x);
    EXPECT_EQ(j.dump(), R"([{"coefficient":3,"partition":[2]},{"coefficient":-2,"partition":[1,1]}])");
    EXPECT_EQ(fsprim::schur_class_from_json(j), x);
    BiSchurClass y{{{Partition({1}), Partition({2})}, 1}, {{Partition(), Partition()}, 4}};
    EXPECT_EQ(fsprim::bischur_class_from_json(fsprim::to_json(y)), y);
    EXPECT_EQ(y.to_string(), "{([],[]):4, ([1],[2]):1}");
    EXPECT_EQ((x - x).is_zero(), true);
}
