#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "numeric.hpp"

namespace asmg {

// Division-free determinant over any commutative ring: Laplace expansion
// along rows with memoization over column subsets, O(2^n * n) ring products.
template <class Ring>
Ring cofactor_determinant(const SquareMatrix<Ring> &m)
{
    const int n = m.size();
    if (n > 24) throw std::invalid_argument("cofactor_determinant supports n <= 24");
    if (n == 0) return Ring(1);
    const std::uint32_t full = (1u << n) - 1u;
    // minors[mask]: determinant of the last popcount(mask) rows restricted to
    // the columns in mask.
    std::vector<Ring> minors(static_cast<std::size_t>(full) + 1);
    minors[0] = Ring(1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int k = std::popcount(mask);
        const int row = n - k + 1;
        Ring acc(0);
        int position = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const Ring &entry = m(row, c + 1);
            if (!(entry == Ring(0))) {
                Ring term = entry * minors[mask & ~(1u << c)];
                if (position % 2 == 0) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            ++position;
        }
        minors[mask] = std::move(acc);
    }
    return minors[full];
}

// Fraction-based Gaussian elimination with nonzero pivoting.
inline Rational determinant(SquareMatrix<Rational> m)
{
    const int n = m.size();
    Rational det = 1;
    for (int col = 1; col <= n; ++col) {
        int pivot = col;
        while (pivot <= n && m(pivot, col) == 0) ++pivot;
        if (pivot > n) return 0;
        if (pivot != col) {
            for (int j = 1; j <= n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r <= n; ++r) {
            if (m(r, col) == 0) continue;
            const Rational f = m(r, col) / m(col, col);
            for (int j = col; j <= n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

} // namespace asmg
