#pragma once

// The signed bigrassmannian polynomial B_n(q) = sum_w (-1)^{l(w)} q^{beta(w)}
// by four independent routes, plus Dodgson's condensation and its q-analog.

#include <string>
#include <vector>

#include "asm.hpp"
#include "determinant.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "poly.hpp"
#include "symbolic.hpp"

namespace asmg {

inline constexpr int kMaxDefinitionN = 9;
inline constexpr int kMaxQdetN = 10;
inline constexpr int kMaxPermanentN = 8;

struct SingularInterior : Error {
    SingularInterior() : Error("SingularInterior", "the interior minor (rows/cols 2..n-1) vanishes") {}
};

// Direct signed sum over S_n.
inline IntQPoly bq_definition(int n, bool allow_large = false)
{
    if (n > kMaxDefinitionN && !allow_large) throw SizeLimitExceeded("bq_definition", n, kMaxDefinitionN);
    IntQPoly total;
    for (const auto &w : enumerate_permutations(n, true)) total += IntQPoly::term(2L * beta(w), Integer(sign(w)));
    return total;
}

// prod_{k=1}^{n-1} (1 - q^k)^{n-k}
inline IntQPoly bq_product(int n)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    IntQPoly out(1);
    for (int k = 1; k < n; ++k)
        for (int e = 0; e < n - k; ++e) out *= IntQPoly::one_minus_q_power(k);
    return out;
}

// The n x n matrix (m_ij q^{(i-j)^2/2}) over half-exponent polynomials.
template <class Coeff>
SquareMatrix<HalfExpPoly<Coeff>> q_matrix(const SquareMatrix<Coeff> &m)
{
    SquareMatrix<HalfExpPoly<Coeff>> out(m.size());
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) out(i, j) = HalfExpPoly<Coeff>::term((i - j) * (i - j), m(i, j));
    return out;
}

// det (q^{(i-j)^2/2})_{i,j=1..n}
inline IntQPoly bq_qdet(int n, bool allow_large = false)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > kMaxQdetN && !allow_large) throw SizeLimitExceeded("bq_qdet", n, kMaxQdetN);
    return cofactor_determinant(q_matrix(SquareMatrix<Integer>(n, Integer(1))));
}

// B_n = B_{n-1}^2 (1 - q^{n-1}) / B_{n-2}, seeded with B_1 = 1, B_2 = 1 - q.
inline IntQPoly bq_recursion(int n)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    IntQPoly prev2(1), prev1 = IntQPoly::one_minus_q_power(1);
    if (n == 1) return prev2;
    for (int m = 3; m <= n; ++m) {
        IntQPoly next = divide_exact(prev1 * prev1 * IntQPoly::one_minus_q_power(m - 1), prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

// sum_w q^{beta(w)}: the permanent of (q^{(i-j)^2/2}).
inline IntQPoly unsigned_permanent_q(int n, bool allow_large = false)
{
    if (n > kMaxPermanentN && !allow_large) throw SizeLimitExceeded("unsigned_permanent_q", n, kMaxPermanentN);
    IntQPoly total;
    for (const auto &w : enumerate_permutations(n, true)) total += IntQPoly::term(2L * beta(w), Integer(1));
    return total;
}

// sum_i (i - (n+1-i))^2 / 2, the beta of the longest element.
inline long bq_degree(int n)
{
    long twice = 0;
    for (int i = 1; i <= n; ++i) twice += static_cast<long>(2 * i - n - 1) * (2 * i - n - 1);
    return twice / 2;
}

// The five determinants of the condensation identity. "A_r^c" deletes row r
// and column c; the interior deletes rows and columns 1 and n.
template <class Ring>
struct CondensationMinors {
    Ring full, top_left, bottom_right, bottom_left, top_right, interior;
};

template <class T, class Det>
auto condensation_minors(const SquareMatrix<T> &m, Det &&det) -> CondensationMinors<decltype(det(m))>
{
    const int n = m.size();
    return {det(m),
                                    det(m.minor_deleting({1}, {1})),
                                    det(m.minor_deleting({n}, {n})),
                                    det(m.minor_deleting({n}, {1})),
                                    det(m.minor_deleting({1}, {n})),
                                    det(m.minor_deleting({1, n}, {1, n}))};
}

// (|A_1^1||A_n^n| - |A_n^1||A_1^n|) / |A_{1n}^{1n}|, the empty determinant being 1.
inline Rational dodgson(const RationalMatrix &m)
{
    const int n = m.size();
    if (n < 2) throw std::invalid_argument("dodgson needs n >= 2");
    auto det = [](const RationalMatrix &x) { return determinant(x); };
    const Rational interior = det(m.minor_deleting({1, n}, {1, n}));
    if (interior == 0) throw SingularInterior();
    const Rational tl = det(m.minor_deleting({1}, {1}));
    const Rational br = det(m.minor_deleting({n}, {n}));
    const Rational bl = det(m.minor_deleting({n}, {1}));
    const Rational tr = det(m.minor_deleting({1}, {n}));
    return (tl * br - bl * tr) / interior;
}

struct QDodgsonReport {
    bool passed = false;
    // |A_q| * |(A_{1n}^{1n})_q|
    RationalQPoly lhs;
    // |(A_1^1)_q||(A_n^n)_q| - q^{n-1}|(A_n^1)_q||(A_1^n)_q|
    RationalQPoly rhs;
    // |A_q| from the divided form, when the interior is a unit (nonzero constant).
    std::optional<RationalQPoly> divided;
};

// Checks the q-analog of condensation symbolically. Each submatrix is
// re-indexed from 1 before the q-weighting is applied.
inline QDodgsonReport q_dodgson_check(const RationalMatrix &m)
{
    const int n = m.size();
    if (n < 2) throw std::invalid_argument("q_dodgson_check needs n >= 2");
    auto qdet = [](const RationalMatrix &x) { return cofactor_determinant(q_matrix(x)); };
    const auto d = condensation_minors(m, qdet);
    QDodgsonReport report;
    report.lhs = d.full * d.interior;
    report.rhs = d.top_left * d.bottom_right - RationalQPoly::q_power(n - 1) * d.bottom_left * d.top_right;
    report.passed = report.lhs == report.rhs;
    if (d.interior.terms().size() == 1 && d.interior.twice_degree() == 0) {
        report.divided = divide_exact(report.rhs, d.interior);
    }
    return report;
}

} // namespace asmg
