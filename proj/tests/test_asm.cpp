#include <gtest/gtest.h>

#include "asmgraph/asm.hpp"
#include "asmgraph/enumerate.hpp"
#include "oracles.hpp"

using namespace asmg;

namespace {

const std::vector<std::vector<int>> kCenter{{0, 1, 0}, {1, -1, 1}, {0, 1, 0}};

IntMatrix rows_to_matrix(const std::vector<std::vector<int>> &rows)
{
    IntMatrix m(static_cast<int>(rows.size()));
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) m(i, j) = rows[i - 1][j - 1];
    return m;
}

} // namespace

TEST(Validate, CenterElementIsValid)
{
    EXPECT_FALSE(find_asm_violation(kCenter).has_value());
    EXPECT_TRUE(Asm::from_rows(kCenter).is_proper());
}

TEST(Validate, IdentityIsValid)
{
    for (int n = 1; n <= 6; ++n) EXPECT_FALSE(validate_asm(identity_matrix<int>(n)).has_value());
}

TEST(Validate, NegativeColumnPrefix)
{
    const auto v = find_asm_violation({{0, 1}, {-1, 1}});
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->to_string(), "PrefixSumViolation(col,2,1)");
    try {
        Asm::from_rows({{0, 1}, {-1, 1}});
        FAIL();
    } catch (const InvalidAsm &e) {
        EXPECT_EQ(e.name(), "PrefixSumViolation");
    }
}

TEST(Validate, OtherViolations)
{
    EXPECT_EQ(find_asm_violation({{0, 1}, {1}})->kind, ViolationKind::NonSquare);
    EXPECT_EQ(find_asm_violation({{2, 0}, {0, 1}})->kind, ViolationKind::EntryOutOfRange);
    EXPECT_EQ(find_asm_violation({{1, 0}, {0, 0}})->kind, ViolationKind::TotalSumViolation);
    EXPECT_EQ(find_asm_violation({{1, 1}, {0, 0}})->kind, ViolationKind::PrefixSumViolation);
}

TEST(Validate, AgreesWithOracleOnAllSignMatrices)
{
    // Every {-1,0,1} 3x3 matrix; the oracle set is the stacked-row construction.
    std::set<std::vector<std::vector<int>>> expected;
    for (const auto &a : oracle::asms(3)) expected.insert(a);
    int valid = 0;
    for (int code = 0; code < 19683; ++code) {
        std::vector<std::vector<int>> rows(3, std::vector<int>(3));
        int c = code;
        for (int t = 0; t < 9; ++t, c /= 3) rows[t / 3][t % 3] = c % 3 - 1;
        const bool ok = !find_asm_violation(rows).has_value();
        EXPECT_EQ(ok, expected.count(rows) == 1);
        valid += ok;
    }
    EXPECT_EQ(valid, 7);
}

TEST(CornerSum, Examples)
{
    EXPECT_EQ(corner_sum(Asm::identity(3)).values(), rows_to_matrix({{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}));
    EXPECT_EQ(corner_sum(permutation_to_asm(Permutation({4, 3, 1, 2}))).values(),
              rows_to_matrix({{0, 0, 0, 1}, {0, 0, 1, 2}, {1, 1, 2, 3}, {1, 2, 3, 4}}));
}

TEST(CornerSum, CenterElement)
{
    // Direct summation; the matrix printed with a leading 1 is the corner sum of 132.
    EXPECT_EQ(corner_sum(Asm::from_rows(kCenter)).values(), rows_to_matrix({{0, 1, 1}, {1, 1, 2}, {1, 2, 3}}));
    EXPECT_EQ(from_corner_sum(rows_to_matrix({{1, 1, 1}, {1, 1, 2}, {1, 2, 3}})),
              permutation_to_asm(Permutation({1, 3, 2})));
    EXPECT_EQ(from_corner_sum(rows_to_matrix({{0, 1, 1}, {1, 1, 2}, {1, 2, 3}})), Asm::from_rows(kCenter));
}

TEST(CornerSum, BoundaryIsZero)
{
    const CornerSum c(Asm::from_rows(kCenter));
    EXPECT_EQ(c(0, 2), 0);
    EXPECT_EQ(c(2, 0), 0);
    EXPECT_EQ(c(0, 0), 0);
}

TEST(CornerSum, LatticeFigureRoundTrip)
{
    const std::vector<std::vector<std::vector<int>>> sums{
        {{0, 0, 1}, {0, 1, 2}, {1, 2, 3}}, {{0, 1, 1}, {0, 1, 2}, {1, 2, 3}}, {{0, 0, 1}, {1, 1, 2}, {1, 2, 3}},
        {{0, 1, 1}, {1, 1, 2}, {1, 2, 3}}, {{1, 1, 1}, {1, 1, 2}, {1, 2, 3}}, {{0, 1, 1}, {1, 2, 2}, {1, 2, 3}},
        {{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}};
    const std::vector<std::vector<std::vector<int>>> matrices{
        {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},
        kCenter, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (std::size_t t = 0; t < sums.size(); ++t) {
        const Asm a = from_corner_sum(rows_to_matrix(sums[t]));
        EXPECT_EQ(a, Asm::from_rows(matrices[t]));
        EXPECT_EQ(corner_sum(a).values(), rows_to_matrix(sums[t]));
    }
}

TEST(CornerSum, RoundTripAgreesWithOracle)
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto &rows : oracle::asms(n)) {
            const Asm a = Asm::from_rows(rows);
            const CornerSum c(a);
            EXPECT_EQ(c.values(), rows_to_matrix(oracle::corner_sums(rows)));
            EXPECT_EQ(from_corner_sum(c.values()), a);
        }
    }
}

TEST(CornerSum, CriterionRejectsBadTables)
{
    EXPECT_THROW(from_corner_sum(rows_to_matrix({{1, 1}, {1, 1}})), InvalidCornerSum);
    EXPECT_THROW(from_corner_sum(rows_to_matrix({{2, 1}, {1, 2}})), InvalidCornerSum);
    EXPECT_THROW(from_corner_sum(rows_to_matrix({{0, 1}, {1, 1}})), InvalidCornerSum);
}

TEST(CornerSum, CriterionMatchesValidity)
{
    // Every integer table with entries 0..3 and last row/column 1..n: the
    // criterion accepts exactly the corner sums of valid ASMs.
    const int n = 3;
    std::set<std::vector<int>> expected;
    for (const auto &rows : oracle::asms(n)) {
        std::vector<int> flat;
        for (const auto &r : oracle::corner_sums(rows)) flat.insert(flat.end(), r.begin(), r.end());
        expected.insert(flat);
    }
    int accepted = 0;
    for (int code = 0; code < 256; ++code) {
        IntMatrix c(n);
        int x = code;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j, x /= 4) c(i, j) = x % 4;
        for (int t = 1; t <= 3; ++t) c(t, 3) = c(3, t) = t;
        const bool ok = !CornerSum::criterion_failure(c).has_value();
        EXPECT_EQ(ok, expected.count(c.data()) == 1);
        accepted += ok;
    }
    EXPECT_EQ(accepted, 7);
}

TEST(Permutation, ToAsm)
{
    EXPECT_EQ(permutation_to_asm(Permutation({2, 3, 1})), Asm::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
    EXPECT_THROW(asm_to_permutation(Asm::from_rows(kCenter)), NotAPermutation);
    EXPECT_THROW(Permutation({1, 1, 2}), InvalidPermutation);
}

TEST(Permutation, RoundTripS4)
{
    for (const auto &w : enumerate_permutations(4)) {
        EXPECT_EQ(asm_to_permutation(permutation_to_asm(w)), w);
        EXPECT_EQ(w.inverse().inverse(), w);
    }
}

TEST(Permutation, Inversions)
{
    EXPECT_EQ(inversion_count(Permutation({1, 2, 3, 4})), 0);
    EXPECT_EQ(inversion_count(Permutation({4, 3, 2, 1})), 6);
    EXPECT_EQ(inversion_count(Permutation({2, 1, 4, 3})), 2);
    EXPECT_EQ(sign(Permutation({4, 3, 2, 1})), 1);
    EXPECT_EQ(sign(Permutation({2, 1, 4, 3})), 1);
    EXPECT_EQ(sign(Permutation({2, 1, 3, 4})), -1);
    for (const auto &w : oracle::permutations(5)) EXPECT_EQ(inversion_count(Permutation(w)), oracle::length(w));
}

TEST(Permutation, OneLine)
{
    EXPECT_EQ(Permutation({4, 3, 1, 2}).one_line(), "4312");
    EXPECT_EQ(Permutation::longest(10).one_line(), "10,9,8,7,6,5,4,3,2,1");
}
