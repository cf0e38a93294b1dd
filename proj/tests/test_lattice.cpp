#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "rgrec/errors.hpp"
#include "rgrec/lattice_count.hpp"
#include "rgrec/ribbon_graph.hpp"

using namespace rgrec;
using namespace rgrec::lattice;

TEST(Heaviside, Values)
{
    EXPECT_EQ(heaviside(5), 1);
    EXPECT_EQ(heaviside(0), 0);
    EXPECT_EQ(heaviside(-3), 0);
}

TEST(BaseN03, Values)
{
    EXPECT_EQ(base_N03(2, 2, 2), BigRational(1));
    EXPECT_EQ(base_N03(1, 1, 1), BigRational(0));
    EXPECT_EQ(base_N03(1, 1, 2), graphs::oracle_N(0, 3, {1, 1, 2}));
    EXPECT_THROW(base_N03(0, 1, 1), DomainError);
}

TEST(BaseN03, MatchesGraphOracle)
{
    const auto records = graphs::enumerate_ribbon_graphs(0, 3);
    for (const auto& p : perimeter_box(3, 7)) EXPECT_EQ(base_N03(p[0], p[1], p[2]), graphs::oracle_N(records, p));
}

TEST(BaseN11, Values)
{
    EXPECT_EQ(base_N11(2), BigRational(0));
    EXPECT_EQ(base_N11(4), BigRational(1, 4));
    EXPECT_EQ(base_N11(6), BigRational(2, 3));
    EXPECT_EQ(base_N11(5), BigRational(0));
}

TEST(ComputeN, BaseCasesAndParity)
{
    LatticeCounter counter;
    EXPECT_EQ(counter.compute(1, 1, std::vector{4}), BigRational(1, 4));
    EXPECT_EQ(counter.compute(1, 2, std::vector{2, 3}), BigRational(0));
    EXPECT_EQ(counter.compute(0, 4, std::vector{2, 2, 2, 2}), graphs::oracle_N(0, 4, {2, 2, 2, 2}));
}

TEST(ComputeN, InvalidInput)
{
    LatticeCounter counter;
    EXPECT_THROW(counter.compute(0, 2, std::vector{1, 1}), StabilityError);
    EXPECT_THROW(counter.compute(0, 3, std::vector{1, 0, 1}), DomainError);
    EXPECT_THROW(counter.compute(0, 3, std::vector{1, 1}), DomainError);
}

TEST(ComputeN, SymmetricAndNonnegative)
{
    LatticeCounter counter;
    for (const auto& base : perimeter_box(4, 4)) {
        std::vector<int> p = base;
        std::sort(p.begin(), p.end());
        const BigRational value = counter.compute(0, 4, p);
        EXPECT_GE(value, BigRational(0));
        do {
            EXPECT_EQ(counter.compute(0, 4, p), value);
        } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST(ComputeN, DistinguishedBoundaryDoesNotMatter)
{
    LatticeCounter counter;
    for (auto [g, n] : {std::pair{0, 4}, {1, 2}, {1, 3}, {0, 5}}) {
        for (const auto& base : perimeter_box(n, 4)) {
            if (std::accumulate(base.begin(), base.end(), 0) % 2) continue;
            std::vector<int> p = base;
            const BigRational reference = counter.compute(g, n, p);
            for (int r = 0; r < n; ++r) {
                std::rotate(p.begin(), p.begin() + 1, p.end());
                EXPECT_EQ(counter.recursion_step(g, n, p), reference);
            }
        }
    }
}

TEST(ComputeN, LargePerimeterDoesNotRecurseDeeply)
{
    LatticeCounter counter;
    EXPECT_GT(counter.compute(1, 2, std::vector{60, 60}), BigRational(0));
}

TEST(CountKey, CanonicalSortsPerimeters)
{
    const int p[] = {3, 1, 2};
    const CountKey key = CountKey::canonical(0, 3, p);
    EXPECT_EQ(key.to_string(), "0:3:1,2,3");
}

TEST(PerimeterBox, LexicographicOrder)
{
    const auto box = perimeter_box(2, 2);
    ASSERT_EQ(box.size(), 4u);
    EXPECT_EQ(box[0], (std::vector<int>{1, 1}));
    EXPECT_EQ(box[1], (std::vector<int>{1, 2}));
    EXPECT_EQ(box[3], (std::vector<int>{2, 2}));
}
