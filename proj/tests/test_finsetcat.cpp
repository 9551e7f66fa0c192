#include <gtest/gtest.h>

#include "fsprim/finsetcat.hpp"

using fsprim::FinMap;
using fsprim::HomClass;

TEST(FinSetCat, EnumerationMatchesClosedForms)
{
    for (int b = 0; b <= 6; ++b)
        for (int a = 0; a <= 6; ++a)
            for (auto flavor : {HomClass::all, HomClass::surjection, HomClass::injection, HomClass::bijection}) {
                if (flavor == HomClass::all && b == 6 && a == 6) continue;
                auto maps = fsprim::enumerate_hom(flavor, b, a);
                EXPECT_EQ(maps.size(), fsprim::hom_dimension(flavor, b, a)) << fsprim::to_string(flavor) << " " << b << " " << a;
                EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end()));
                for (const auto& f : maps) EXPECT_TRUE(f.belongs_to(flavor));
            }
}

TEST(FinSetCat, KnownSurjectionCounts)
{
    EXPECT_EQ(fsprim::hom_dimension(HomClass::surjection, 6, 4), 1560u);
    EXPECT_EQ(fsprim::hom_dimension(HomClass::surjection, 6, 5), 1800u);
    EXPECT_EQ(fsprim::hom_dimension(HomClass::surjection, 7, 3), 1806u);
    EXPECT_EQ(fsprim::hom_dimension(HomClass::surjection, 0, 0), 1u);
    EXPECT_EQ(fsprim::hom_dimension(HomClass::surjection, 3, 0), 0u);
}

TEST(FinSetCat, ComposeAndIdentity)
{
    FinMap f(2, {0, 1, 1});
    FinMap g(3, {2, 0});
    auto gf = fsprim::compose(g, f);
    EXPECT_EQ(gf, FinMap(3, {2, 0, 0}));
    EXPECT_EQ(fsprim::compose(FinMap::identity(2), f), f);
    EXPECT_THROW((void)fsprim::compose(f, f), std::invalid_argument);
    EXPECT_THROW(FinMap(2, {2}), std::invalid_argument);
    EXPECT_EQ(f.to_string(), "[1,2,2]");
}

TEST(FinSetCat, SectionsAreRightInverses)
{
    for (const auto& f : fsprim::enumerate_hom(HomClass::surjection, 5, 3)) {
        auto ss = fsprim::sections(f);
        std::size_t expected = 1;
        for (int y = 0; y < 3; ++y) {
            std::size_t fiber = 0;
            for (int v : f.values()) fiber += (v == y);
            expected *= fiber;
        }
        EXPECT_EQ(ss.size(), expected);
        for (const auto& s : ss) EXPECT_EQ(fsprim::compose(f, s), FinMap::identity(3));
    }
    EXPECT_THROW((void)fsprim::sections(FinMap(2, {0, 0})), std::invalid_argument);
}

TEST(FinSetCat, HomBasisLookup)
{
    fsprim::HomBasis basis(HomClass::surjection, 4, 2);
    for (std::size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(basis.index_of(basis[i]), i);
    EXPECT_EQ(basis.index_of(std::vector<int>{0, 0, 0, 0}), fsprim::HomBasis::npos);
    EXPECT_EQ(basis.index_of(std::vector<int>{0, 1}), fsprim::HomBasis::npos);
}
