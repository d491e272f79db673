#include <random>
#include <set>

#include <gtest/gtest.h>

#include "loopbv/gf2.hpp"

namespace loopbv {
namespace {

// Rank as log2 of the number of distinct row combinations.
std::size_t span_rank(const Gf2Matrix& m)
{
    std::set<std::vector<bool>> span;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.rows()); ++mask) {
        std::vector<bool> v(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (mask >> r & 1)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    v[c] = v[c] != m.get(r, c);
        span.insert(v);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size())
        ++rank;
    return rank;
}

TEST(Gf2, EmptyAndIdentity)
{
    EXPECT_EQ(Gf2Matrix(0, 5).rank(), 0u);
    EXPECT_EQ(Gf2Matrix(4, 0).rank(), 0u);
    Gf2Matrix id(70, 70);
    for (std::size_t i = 0; i < 70; ++i)
        id.set(i, i, true);
    EXPECT_EQ(id.rank(), 70u);
    EXPECT_EQ(id.left_kernel_dimension(), 0u);
}

TEST(Gf2, RepeatedRowsCancel)
{
    Gf2Matrix m(3, 3);
    m.set(0, 0, true);
    m.set(0, 2, true);
    m.set(1, 0, true);
    m.set(1, 2, true);
    m.flip(2, 1);
    EXPECT_EQ(m.rank(), 2u);
    EXPECT_EQ(m.left_kernel_dimension(), 1u);
    m.flip(2, 1);
    EXPECT_FALSE(m.get(2, 1));
}

TEST(Gf2, RankMatchesSpanEnumeration)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = rng() % 10;
        const std::size_t cols = 1 + rng() % 80;
        Gf2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m.set(r, c, rng() % 3 == 0);
        EXPECT_EQ(m.rank(), span_rank(m)) << rows << "x" << cols;
    }
}

TEST(Gf2, RejectsOutOfRangeIndices)
{
    Gf2Matrix m(2, 2);
    EXPECT_THROW(m.get(2, 0), std::out_of_range);
    EXPECT_THROW(m.set(0, 2, true), std::out_of_range);
}

} // namespace
} // namespace loopbv
