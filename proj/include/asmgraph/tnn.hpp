#pragma once

// Total-nonnegativity checks, TNN sample generation, evaluation of ASM
// monomial differences and the constructive counterexample for incomparable
// pairs.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "asm.hpp"
#include "determinant.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "numeric.hpp"
#include "symbolic.hpp"

namespace asmg {

inline constexpr int kMaxTnnCheckN = 8;

struct NotPerfectSquare : Error {
    explicit NotPerfectSquare(const Rational &q)
        : Error("NotPerfectSquare", "q0 = " + to_string(q) + " is not the square of a rational")
    {
    }
};

namespace detail {

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int> &)> &visit)
{
    std::vector<int> idx(k);
    for (int t = 0; t < k; ++t) idx[t] = t + 1;
    while (true) {
        visit(idx);
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t + 1) --t;
        if (t < 0) return;
        ++idx[t];
        for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
}

} // namespace detail

// Every minor is >= 0.
inline bool is_tnn(const RationalMatrix &m, bool allow_large = false)
{
    const int n = m.size();
    if (n > kMaxTnnCheckN && !allow_large) throw SizeLimitExceeded("is_tnn", n, kMaxTnnCheckN);
    for (int k = 1; k <= n; ++k) {
        bool ok = true;
        detail::for_each_subset(n, k, [&](const std::vector<int> &rows) {
            if (!ok) return;
            detail::for_each_subset(n, k, [&](const std::vector<int> &cols) {
                if (ok && determinant(m.submatrix(rows, cols)) < 0) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

// (A_s)_ij = s^{(i-j)^2} a_ij, i.e. the q-weighting at q = s^2.
inline RationalMatrix q_weighted(const RationalMatrix &m, const Rational &root)
{
    RationalMatrix out = m;
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) out(i, j) *= power(root, static_cast<unsigned>((i - j) * (i - j)));
    return out;
}

inline RationalMatrix q_unweighted(const RationalMatrix &m, const Rational &root)
{
    RationalMatrix out = m;
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) out(i, j) /= power(root, static_cast<unsigned>((i - j) * (i - j)));
    return out;
}

inline Rational require_square_root(const Rational &q0)
{
    Rational root;
    if (q0 <= 0 || !rational_sqrt(q0, root)) throw NotPerfectSquare(q0);
    return root;
}

// All minors of the q-weighted matrix at q0 are >= 0. q0 must be the square
// of a rational so the check stays exact.
inline bool is_locally_tnn_at(const RationalMatrix &m, const Rational &q0, bool allow_large = false)
{
    return is_tnn(q_weighted(m, require_square_root(q0)), allow_large);
}

// Product L * D * U of elementary bidiagonal factors. `lower` and `upper`
// hold n(n-1)/2 nonnegative parameters each, consumed in the order
// k = 1..n-1, i = n..k+1; `diagonal` holds n positive entries.
inline RationalMatrix tnn_from_parameters(int n, const std::vector<Rational> &lower, const std::vector<Rational> &diagonal,
                                          const std::vector<Rational> &upper)
{
    const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (lower.size() != count || upper.size() != count || diagonal.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("wrong number of bidiagonal parameters");
    }
    RationalMatrix left = identity_matrix<Rational>(n), right = identity_matrix<Rational>(n);
    std::size_t t = 0;
    for (int k = 1; k < n; ++k)
        for (int i = n; i > k; --i, ++t) {
            RationalMatrix l = identity_matrix<Rational>(n), u = identity_matrix<Rational>(n);
            l(i, i - 1) = lower[t];
            u(i - 1, i) = upper[t];
            left = left * l;
            right = u * right;
        }
    RationalMatrix d(n, Rational(0));
    for (int i = 1; i <= n; ++i) d(i, i) = diagonal[i - 1];
    return left * d * right;
}

// Random TNN matrix from strictly positive parameters p/2, p in
// 1..2*size_param, so every minor is in fact positive.
inline RationalMatrix random_tnn(int n, std::uint64_t seed, int size_param = 2)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (size_param < 1) throw std::invalid_argument("size_param must be >= 1");
    std::mt19937_64 rng(seed);
    const auto range = static_cast<std::uint64_t>(2 * size_param);
    auto draw = [&] { return Rational(static_cast<long>(1 + rng() % range), 2); };
    const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<Rational> lower(count), upper(count), diagonal(n);
    for (auto &x : lower) x = draw();
    for (auto &x : diagonal) x = draw();
    for (auto &x : upper) x = draw();
    return tnn_from_parameters(n, lower, diagonal, upper);
}

// x^A - x^B at x = m; throws Undefined when a needed inverse is of zero.
inline Rational evaluate_difference(const Asm &a, const Asm &b, const RationalMatrix &m)
{
    if (a.size() != b.size()) throw SizeMismatch(a.size(), b.size());
    if (m.size() != a.size()) throw SizeMismatch(a.size(), m.size());
    return asm_monomial(a).evaluate(m) - asm_monomial(b).evaluate(m);
}

struct Counterexample {
    RationalMatrix matrix;
    Cell witness;
};

// For a not-below-b: the row-major first cell (k,l) with C_a(k,l) < C_b(k,l)
// and the TNN matrix with 2 on [1..k]x[1..l] and 1 elsewhere, at which
// x^A - x^B = 2^{C_a(k,l)} - 2^{C_b(k,l)} < 0.
inline Counterexample counterexample_matrix(const Asm &a, const Asm &b)
{
    if (a.size() != b.size()) throw SizeMismatch(a.size(), b.size());
    const CornerSum ca(a), cb(b);
    const int n = a.size();
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            if (ca(k, l) < cb(k, l)) {
                RationalMatrix m(n, Rational(1));
                for (int i = 1; i <= k; ++i)
                    for (int j = 1; j <= l; ++j) m(i, j) = 2;
                return Counterexample{std::move(m), {k, l}};
            }
        }
    throw Comparable();
}

struct QtnnGridRow {
    Rational q0;
    int samples = 0;
    int undefined = 0;
    int violations = 0;
    bool weighting_consistent = true;
    // Set only for incomparable pairs: the counterexample, rescaled to be
    // locally TNN at q0, gave a negative value.
    bool counterexample_negative = false;
    std::optional<Rational> min_value;
};

struct QtnnReport {
    bool comparable = false;
    std::vector<QtnnGridRow> rows;

    int total_violations() const
    {
        int total = 0;
        for (const auto &r : rows) total += r.violations;
        return total;
    }
};

// Falsification harness for the qTNN property. For each q0 = s^2 on the grid,
// TNN samples M are pulled back to A' = M / s^{(i-j)^2} (locally TNN at q0)
// and g = x^A - x^B is evaluated at A'_{q0} = M. The value is cross-checked
// against q0^{beta(a)} x^A(A') - q0^{beta(b)} x^B(A').
inline QtnnReport qtnn_scan(const Asm &a, const Asm &b, const std::vector<Rational> &grid, int samples,
                            std::uint64_t seed)
{
    QtnnReport report;
    report.comparable = asm_leq(a, b);
    const auto qa = q_monomial(a), qb = q_monomial(b);
    const int n = a.size();
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const Rational root = require_square_root(grid[g]);
        QtnnGridRow row;
        row.q0 = grid[g];
        auto probe = [&](const RationalMatrix &m) {
            const RationalMatrix pulled = q_unweighted(m, root);
            auto xa = qa.monomial.try_evaluate(pulled);
            auto xb = qb.monomial.try_evaluate(pulled);
            if (!xa || !xb) {
                ++row.undefined;
                return std::optional<Rational>{};
            }
            const Rational value = evaluate_difference(a, b, m);
            const Rational weighted = power(root, static_cast<unsigned>(qa.twice_q_power)) * *xa -
                                      power(root, static_cast<unsigned>(qb.twice_q_power)) * *xb;
            if (weighted != value) row.weighting_consistent = false;
            if (!row.min_value || value < *row.min_value) row.min_value = value;
            if (value < 0) ++row.violations;
            return std::optional<Rational>(value);
        };
        for (int t = 0; t < samples; ++t) {
            const auto task = static_cast<std::uint64_t>(g) * static_cast<std::uint64_t>(samples) + t;
            probe(random_tnn(n, mix_seed(seed, task)));
            ++row.samples;
        }
        if (!report.comparable) {
            auto v = probe(counterexample_matrix(a, b).matrix);
            row.counterexample_negative = v && *v < 0;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace asmg
