// Copyright 2026 The zxrw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxrw/bit_matrix.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using zxrw::BitMatrix;
using zxrw::Bitset;
using zxrw::Err;
using zxrw::ZxError;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

// Independent rank oracle: enumerate the row span exhaustively. The span of
// an r-dimensional row space has exactly 2^r distinct elements.
std::size_t rank_by_span_enumeration(const BitMatrix& m) {
    std::set<std::vector<bool>> span;
    std::size_t combos = std::size_t{1} << m.rows();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        std::vector<bool> acc(m.cols(), false);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if ((mask >> r) & 1)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    acc[c] = acc[c] ^ m.get(r, c);
        span.insert(acc);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size()) ++rank;
    EXPECT_EQ(std::size_t{1} << rank, span.size());
    return rank;
}

}  // namespace

TEST(BitMatrix, RankIdentity) {
    EXPECT_EQ(BitMatrix::identity(3).rank(), 3u);
}

TEST(BitMatrix, RankAllOnes) {
    auto m = BitMatrix::from_rows({{1, 1}, {1, 1}});
    EXPECT_EQ(m.rank(), 1u);
}

TEST(BitMatrix, RankMatchesSpanEnumeration) {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 50; ++it) {
        auto m = random_matrix(8, 8, rng);
        EXPECT_EQ(m.rank(), rank_by_span_enumeration(m));
    }
}

TEST(BitMatrix, RankOfEmptyShapes) {
    EXPECT_EQ(BitMatrix(0, 5).rank(), 0u);
    EXPECT_EQ(BitMatrix(5, 0).rank(), 0u);
    EXPECT_EQ(BitMatrix(0, 0).rank(), 0u);
}

TEST(BitMatrix, RrefZeroMatrix) {
    auto [r, pivots] = BitMatrix(3, 4).rref();
    EXPECT_TRUE(r.is_zero());
    EXPECT_TRUE(pivots.empty());
}

TEST(BitMatrix, RrefIdentity) {
    auto [r, pivots] = BitMatrix::identity(4).rref();
    EXPECT_EQ(r, BitMatrix::identity(4));
    EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(BitMatrix, RrefPivotsHandExample) {
    auto m = BitMatrix::from_rows({{1, 1, 0}, {1, 1, 1}});
    auto [r, pivots] = m.rref();
    EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(pivots.size(), m.rank());
}

TEST(BitMatrix, RrefIsIdempotent) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        auto m = random_matrix(6, 9, rng);
        auto [r1, p1] = m.rref();
        auto [r2, p2] = r1.rref();
        EXPECT_EQ(r1, r2);
        EXPECT_EQ(p1, p2);
    }
}

TEST(BitMatrix, RankFactorizeIdentity) {
    auto [u, w] = BitMatrix::identity(4).rank_factorize();
    EXPECT_EQ(u, BitMatrix::identity(4));
    EXPECT_EQ(w, BitMatrix::identity(4));
}

TEST(BitMatrix, RankFactorizeZeroHasEmptyFactors) {
    auto [u, w] = BitMatrix(3, 5).rank_factorize();
    EXPECT_EQ(u.rows(), 3u);
    EXPECT_EQ(u.cols(), 0u);
    EXPECT_EQ(w.rows(), 0u);
    EXPECT_EQ(w.cols(), 5u);
    EXPECT_EQ(u * w, BitMatrix(3, 5));
}

TEST(BitMatrix, RankFactorizeReproducesMatrix) {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 1000; ++it) {
        std::size_t rows = 1 + rng() % 32;
        std::size_t cols = 1 + rng() % 32;
        auto m = random_matrix(rows, cols, rng);
        auto [u, w] = m.rank_factorize();
        EXPECT_EQ(u * w, m);
        EXPECT_EQ(u.rank(), m.rank());
        EXPECT_EQ(w.rank(), m.rank());
    }
}

TEST(BitMatrix, LeftInverseIdentity) {
    EXPECT_EQ(BitMatrix::identity(3).left_inverse(), BitMatrix::identity(3));
}

TEST(BitMatrix, LeftInverseColumnOfOnes) {
    auto u = BitMatrix::from_rows({{1}, {1}});
    auto v = u.left_inverse();
    EXPECT_EQ(v * u, BitMatrix::identity(1));
}

TEST(BitMatrix, LeftInverseRandomFullColumnRank) {
    std::mt19937_64 rng(4242);
    int done = 0;
    while (done < 30) {
        auto u = random_matrix(7, 4, rng);
        if (u.rank() != 4) continue;
        auto v = u.left_inverse();
        EXPECT_EQ(v * u, BitMatrix::identity(4));
        ++done;
    }
}

TEST(BitMatrix, LeftInverseRejectsRankDeficient) {
    auto u = BitMatrix::from_rows({{1, 1}, {1, 1}, {0, 0}});
    try {
        (void)u.left_inverse();
        FAIL() << "expected FullColumnRankRequired";
    } catch (const ZxError& e) {
        EXPECT_EQ(e.code(), Err::FullColumnRankRequired);
    }
}

TEST(BitMatrix, MultiplyByIdentity) {
    std::mt19937_64 rng(5);
    auto m = random_matrix(4, 6, rng);
    EXPECT_EQ(BitMatrix::identity(4) * m, m);
    EXPECT_EQ(m * BitMatrix::identity(6), m);
}

TEST(BitMatrix, MultiplyIsAssociative) {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 50; ++it) {
        auto a = random_matrix(5, 5, rng);
        auto b = random_matrix(5, 5, rng);
        auto c = random_matrix(5, 5, rng);
        EXPECT_EQ(a * (b * c), (a * b) * c);
    }
}

TEST(BitMatrix, TransposeIsInvolutive) {
    std::mt19937_64 rng(8);
    auto m = random_matrix(5, 9, rng);
    EXPECT_EQ(m.transpose().transpose(), m);
}

TEST(BitMatrix, RankEqualsTransposeRank) {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 100; ++it) {
        auto m = random_matrix(1 + rng() % 12, 1 + rng() % 12, rng);
        EXPECT_EQ(m.rank(), m.transpose().rank());
    }
}

TEST(BitMatrix, AllOnesPerturbationShiftsRankByAtMostOne) {
    std::mt19937_64 rng(10);
    for (int it = 0; it < 200; ++it) {
        std::size_t rows = 1 + rng() % 10;
        std::size_t cols = 1 + rng() % 10;
        auto m = random_matrix(rows, cols, rng);
        BitMatrix j(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) j.set(r, c, true);
        auto r1 = static_cast<long>(m.rank());
        auto r2 = static_cast<long>((m + j).rank());
        EXPECT_LE(std::abs(r1 - r2), 1);
    }
}

TEST(BitMatrix, DimensionMismatchThrows) {
    EXPECT_THROW(BitMatrix(2, 3) * BitMatrix(2, 3), ZxError);
    EXPECT_THROW(BitMatrix(2, 3) + BitMatrix(3, 2), ZxError);
    EXPECT_THROW(BitMatrix::vstack(BitMatrix(1, 2), BitMatrix(1, 3)), ZxError);
    EXPECT_THROW(BitMatrix::hstack(BitMatrix(1, 2), BitMatrix(2, 2)), ZxError);
}

TEST(BitMatrix, StackAndSelect) {
    auto a = BitMatrix::from_rows({{1, 0}, {0, 1}});
    auto b = BitMatrix::from_rows({{1, 1}});
    auto v = BitMatrix::vstack(a, b);
    EXPECT_EQ(v.rows(), 3u);
    EXPECT_TRUE(v.get(2, 0) && v.get(2, 1));
    auto h = BitMatrix::hstack(a, a);
    EXPECT_EQ(h.cols(), 4u);
    EXPECT_TRUE(h.get(0, 0) && h.get(0, 2));
    auto s = v.select_rows({2, 0});
    EXPECT_TRUE(s.get(0, 0) && s.get(0, 1));
    EXPECT_TRUE(s.get(1, 0) && !s.get(1, 1));
    auto c = v.select_cols({1});
    EXPECT_EQ(c.cols(), 1u);
    EXPECT_TRUE(!c.get(0, 0) && c.get(1, 0) && c.get(2, 0));
}

TEST(ReducedSystem, SolvesConsistentSystems) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        std::size_t rows = 1 + rng() % 10;
        std::size_t cols = 1 + rng() % 10;
        auto a = random_matrix(rows, cols, rng);
        auto sys = zxrw::ReducedSystem::from(a);
        // Consistent right-hand side: b = A x0 for a random x0.
        Bitset x0(cols);
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) x0.set(c);
        Bitset b = a.mul_vec(x0);
        auto x = sys.solve(b);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(a.mul_vec(*x), b);
    }
}

TEST(ReducedSystem, DetectsInconsistentSystems) {
    // x + y = 0, x + y = 1 has no solution.
    auto a = BitMatrix::from_rows({{1, 1}, {1, 1}});
    auto sys = zxrw::ReducedSystem::from(a);
    Bitset b(2);
    b.set(1);
    EXPECT_FALSE(sys.solve(b).has_value());
}

TEST(Bitset, BasicOperations) {
    Bitset s(130);
    s.set(0);
    s.set(64);
    s.set(129);
    EXPECT_EQ(s.count(), 3u);
    EXPECT_TRUE(s.test(64));
    Bitset t(130);
    t.set(64);
    EXPECT_EQ(s.count_and(t), 1u);
    EXPECT_TRUE(s.intersects(t));
    auto d = s.minus(t);
    EXPECT_EQ(d.count(), 2u);
    EXPECT_FALSE(d.test(64));
    std::vector<std::size_t> seen;
    s.for_each([&](std::size_t i) { seen.push_back(i); });
    EXPECT_EQ(seen, (std::vector<std::size_t>{0, 64, 129}));
}
