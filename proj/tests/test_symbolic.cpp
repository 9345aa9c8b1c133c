#include <gtest/gtest.h>

#include "asmgraph/enumerate.hpp"
#include "asmgraph/io.hpp"
#include "asmgraph/symbolic.hpp"
#include "asmgraph/tnn.hpp"

using namespace asmg;

namespace {

Asm perm(const std::string &one_line)
{
    std::vector<int> images;
    for (char c : one_line) images.push_back(c - '0');
    return permutation_to_asm(Permutation(images));
}

const Asm kCenter = Asm::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
const Asm kA = Asm::from_rows({{0, 1, 0, 0, 0}, {1, -1, 1, 0, 0}, {0, 1, -1, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}});
const Asm kB = Asm::from_rows({{0, 1, 0, 0, 0}, {1, -1, 1, 0, 0}, {0, 0, 0, 0, 1}, {0, 1, -1, 1, 0}, {0, 0, 1, 0, 0}});
const Asm kC = Asm::from_rows({{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, -1, 0, 0, 1}, {0, 1, -1, 1, 0}, {0, 0, 1, 0, 0}});

LaurentMonomial mono(std::initializer_list<std::pair<Cell, int>> exps)
{
    LaurentMonomial m;
    for (const auto &[cell, e] : exps) m.multiply_variable(cell, e);
    return m;
}

// Independent evaluation of x^A straight from the entries.
Rational direct_monomial(const Asm &a, const RationalMatrix &m)
{
    Rational v = 1;
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j) {
            if (a(i, j) == 1) v *= m(i, j);
            if (a(i, j) == -1) v /= m(i, j);
        }
    return v;
}

Rational det2(const RationalMatrix &m, int i, int j, int k, int l) { return m(i, k) * m(j, l) - m(i, l) * m(j, k); }

} // namespace

TEST(Monomial, ToString)
{
    EXPECT_EQ(asm_monomial(kCenter).to_string(), "x12*x21*x23*x32/x22");
    EXPECT_EQ(mono({{{2, 2}, -1}, {{3, 3}, -2}, {{1, 2}, 1}}).to_string(), "x12/(x22*x33^2)");
    EXPECT_EQ(LaurentMonomial().to_string(), "1");
}

TEST(Monomial, QMonomialExamples)
{
    const auto center = q_monomial(kCenter);
    EXPECT_EQ(center.monomial, mono({{{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, -1}, {{2, 3}, 1}, {{3, 2}, 1}}));
    EXPECT_EQ(center.q_power(), 2);
    const auto id = q_monomial(Asm::identity(4));
    EXPECT_EQ(id.monomial, mono({{{1, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1}, {{4, 4}, 1}}));
    EXPECT_EQ(id.q_power(), 0);
    const auto w = q_monomial(perm("231"));
    EXPECT_EQ(w.monomial, mono({{{1, 2}, 1}, {{2, 3}, 1}, {{3, 1}, 1}}));
    EXPECT_EQ(w.q_power(), 3);
}

TEST(Monomial, QPowerEqualsBetaOnA5)
{
    for (const auto &a : enumerate_asms(5)) {
        EXPECT_EQ(q_monomial(a).twice_q_power % 2, 0);
        EXPECT_EQ(q_monomial(a).q_power(), beta(a));
    }
}

TEST(Monomial, EvaluateAndUndefined)
{
    RationalMatrix m(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) m(i, j) = i + 2 * j;
    EXPECT_EQ(asm_monomial(kCenter).evaluate(m), direct_monomial(kCenter, m));
    m(2, 2) = 0;
    try {
        asm_monomial(kCenter).evaluate(m);
        FAIL();
    } catch (const Undefined &e) {
        EXPECT_EQ(e.position, (Cell{2, 2}));
    }
}

TEST(EdgeFactor, CenterStep)
{
    // x^B - x^C = x12 x21 (x22 x33 - x23 x32) / x22
    const Asm b = perm("213");
    const auto edges = edges_from(b);
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge &e) { return e.target == kCenter; });
    ASSERT_NE(it, edges.end());
    const auto f = edge_factorization(*it);
    EXPECT_EQ(f.combined(), mono({{{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, -1}}));
    EXPECT_EQ(f.minor, (MinorRef{{2, 3}, {2, 3}}));
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto m = random_positive_matrix(3, s);
        const Rational expected = m(1, 2) * m(2, 1) * det2(m, 2, 3, 2, 3) / m(2, 2);
        EXPECT_EQ(f.combined().evaluate(m) * f.minor.evaluate(m), expected);
        EXPECT_EQ(direct_monomial(b, m) - direct_monomial(kCenter, m), expected);
    }
}

TEST(EdgeFactor, PermutationEdgeIsPolynomial)
{
    // x^u - x^v = x21 |x12 x13; x32 x33| for u = 213, v = 312.
    const auto f = edge_factorization(perm("213"), perm("312"), Rect{1, 3, 2, 3});
    EXPECT_EQ(f.combined(), mono({{{2, 1}, 1}}));
    EXPECT_TRUE(f.combined().is_polynomial());
    EXPECT_EQ(f.minor, (MinorRef{{1, 3}, {2, 3}}));
}

TEST(EdgeFactor, WorkedFiveByFiveStep)
{
    const auto f = edge_factorization(kA, kB, Rect{3, 4, 2, 3});
    EXPECT_EQ(f.combined(), mono({{{1, 2}, 1}, {{2, 1}, 1}, {{2, 3}, 1}, {{3, 5}, 1}, {{4, 4}, 1}, {{5, 3}, 1},
                                  {{2, 2}, -1}, {{4, 3}, -1}, {{3, 3}, -1}}));
    EXPECT_EQ(f.minor.to_string(), "|x32 x33; x42 x43|");
}

TEST(EdgeFactor, ExactOnEveryEdgeOfA4)
{
    for (const auto &a : enumerate_asms(4)) {
        for (const auto &e : edges_from(a)) {
            const auto f = edge_factorization(e);
            EXPECT_TRUE(f.combined().is_almost_positive());
            for (std::uint64_t s = 0; s < 3; ++s) {
                const auto m = random_positive_matrix(4, s);
                EXPECT_EQ(f.combined().evaluate(m) * f.minor.evaluate(m),
                          direct_monomial(e.source, m) - direct_monomial(e.target, m));
            }
        }
    }
}

TEST(Certificate, WorkedExampleCombinedForm)
{
    const auto cert = sfl_certificate(kA, kC);
    ASSERT_EQ(cert.steps.size(), 2u);
    EXPECT_EQ(cert.beta_lower, 6);
    EXPECT_EQ(cert.beta_upper, 8);
    const auto form = combined_form(cert);
    EXPECT_EQ(form.common, mono({{{1, 2}, 1}, {{2, 3}, 1}, {{3, 5}, 1}, {{4, 4}, 1}, {{5, 3}, 1}, {{2, 2}, -1},
                                 {{3, 2}, -1}, {{3, 3}, -1}, {{4, 3}, -1}}));
    EXPECT_EQ(form.to_string(),
              "x12*x23*x35*x44*x53/(x22*x32*x33*x43) * (x21*x32*|x32 x33; x42 x43| + x33*x42*|x21 x22; x31 x32|)");
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto m = random_positive_matrix(5, s);
        const Rational expected = m(1, 2) * m(2, 3) * m(3, 5) * m(4, 4) * m(5, 3) /
                                  (m(2, 2) * m(3, 2) * m(3, 3) * m(4, 3)) *
                                  (m(2, 1) * m(3, 2) * det2(m, 3, 4, 2, 3) + m(3, 3) * m(4, 2) * det2(m, 2, 3, 1, 2));
        EXPECT_EQ(*cert.try_evaluate(m), expected);
        EXPECT_EQ(direct_monomial(kA, m) - direct_monomial(kC, m), expected);
    }
}

TEST(Certificate, TrivialAndIncomparable)
{
    const auto same = sfl_certificate(kCenter, kCenter);
    EXPECT_TRUE(same.steps.empty());
    EXPECT_TRUE(verify_certificate(same, 3, 1).passed);
    EXPECT_THROW(sfl_certificate(perm("132"), perm("213")), Incomparable);
    EXPECT_THROW(sfl_certificate(perm("231"), perm("312")), Incomparable);
}

TEST(Certificate, VerifyPassesAndNegativeControlFails)
{
    const auto cert = sfl_certificate(kA, kC);
    const auto report = verify_certificate(cert, 10, 42);
    EXPECT_TRUE(report.passed) << report.message;
    EXPECT_EQ(report.samples_checked, 10);
    EXPECT_NO_THROW(require_verified(cert, 10, 42));

    auto flipped = cert;
    flipped.steps[1].prefix = flipped.steps[1].prefix * LaurentMonomial(Rational(-1));
    EXPECT_FALSE(verify_certificate(flipped, 10, 42).passed);
    EXPECT_THROW(require_verified(flipped, 10, 42), VerificationFailure);
}

TEST(Certificate, AllComparablePairsOfA4)
{
    const auto nodes = enumerate_asms(4);
    int count = 0;
    for (const auto &a : nodes)
        for (const auto &b : nodes) {
            if (!asm_leq(a, b)) continue;
            const auto cert = sfl_certificate(a, b);
            EXPECT_EQ(static_cast<int>(cert.steps.size()), beta(b) - beta(a));
            for (const auto &s : cert.steps) {
                EXPECT_TRUE(s.combined().is_almost_positive());
                EXPECT_TRUE(s.minor.is_small() && s.minor.is_solid());
            }
            for (std::uint64_t k = 0; k < 5; ++k) {
                const auto m = random_positive_matrix(4, mix_seed(count, k));
                EXPECT_EQ(*cert.try_evaluate(m), direct_monomial(a, m) - direct_monomial(b, m));
            }
            // Terms of the combined form are polynomials.
            for (const auto &[t, minor] : combined_form(cert).terms) EXPECT_TRUE(t.is_polynomial());
            ++count;
        }
    EXPECT_GT(count, 42);
}

TEST(Certificate, QPolynomiality)
{
    // Each step pairs q^{beta(A_t)} with q^{beta(A_t)+1}: integer q-exponents.
    const auto chain = covering_chain(kA, kC);
    for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
        EXPECT_EQ(q_monomial(chain[t + 1]).twice_q_power - q_monomial(chain[t]).twice_q_power, 2);
        EXPECT_EQ(q_monomial(chain[t]).twice_q_power % 2, 0);
    }
}

TEST(Certificate, JsonRoundTrip)
{
    const auto cert = sfl_certificate(kA, kC);
    const auto j = certificate_to_json(cert);
    EXPECT_TRUE(j.contains("endpoints"));
    EXPECT_EQ(j.at("beta"), nlohmann::json({6, 8}));
    EXPECT_EQ(j.at("steps").size(), 2u);
    EXPECT_EQ(j.at("steps").at(0).at("minor").at("rows"), nlohmann::json({3, 4}));
    const auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.lower, cert.lower);
    EXPECT_EQ(back.upper, cert.upper);
    EXPECT_EQ(back.steps, cert.steps);
}
