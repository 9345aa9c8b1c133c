#include <gtest/gtest.h>

#include "asmgraph/enumerate.hpp"
#include "asmgraph/io.hpp"

using namespace asmg;

TEST(TextFormat, RoundTrip)
{
    for (const auto &a : enumerate_asms(4)) EXPECT_EQ(parse_asm_text(format_asm_text(a)), a);
    const Asm center = Asm::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
    EXPECT_EQ(format_asm_text(center), "3\n0 1 0\n1 -1 1\n0 1 0\n");
}

TEST(TextFormat, Errors)
{
    EXPECT_THROW(parse_asm_text("2\n1 0\n"), ParseError);
    EXPECT_THROW(parse_asm_text("x\n"), ParseError);
    EXPECT_THROW(parse_asm_text("2\n0 1\n-1 1\n"), InvalidAsm);
}

TEST(Permutations, OneLine)
{
    EXPECT_EQ(parse_permutation("4312").images(), (std::vector<int>{4, 3, 1, 2}));
    EXPECT_EQ(parse_permutation("10,9,8,7,6,5,4,3,2,1").size(), 10);
    EXPECT_THROW(parse_permutation("4412"), InvalidPermutation);
    EXPECT_THROW(parse_permutation("12a"), ParseError);
}

TEST(Json, AsmRoundTrip)
{
    const Asm center = Asm::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
    const auto j = asm_to_json(center);
    EXPECT_EQ(j.at("n"), 3);
    EXPECT_EQ(j.at("entries"), nlohmann::json({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}));
    EXPECT_EQ(asm_from_json(j), center);
    EXPECT_THROW(asm_from_json(nlohmann::json{{"n", 2}}), ParseError);
}

TEST(Json, CellKeys)
{
    EXPECT_EQ(cell_key({3, 12}), "(3,12)");
    EXPECT_EQ(parse_cell_key("(3,12)"), (Cell{3, 12}));
    EXPECT_THROW(parse_cell_key("3,12"), ParseError);
}

TEST(Json, Polynomial)
{
    const IntQPoly p = IntQPoly(1) - IntQPoly::q_power(1) * 3 + IntQPoly::q_power(2);
    EXPECT_EQ(poly_to_json(4, p).dump(), R"({"n":4,"coeffs":{"0":1,"1":-3,"2":1}})");
    EXPECT_EQ(exponent_key(3), "3/2");
    EXPECT_EQ(exponent_key(4), "2");
}
