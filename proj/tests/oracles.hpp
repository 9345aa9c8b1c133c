#pragma once

// Brute-force reference implementations built on plain std types.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "asmgraph/numeric.hpp"

namespace oracle {

using Rows = std::vector<std::vector<int>>;

// Rows whose partial sums stay in {0,1} and end at 1.
inline std::vector<std::vector<int>> asm_rows(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> row(n);
    std::function<void(int, int)> go = [&](int j, int partial) {
        if (j == n) {
            if (partial == 1) out.push_back(row);
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            const int p = partial + v;
            if (p < 0 || p > 1) continue;
            row[j] = v;
            go(j + 1, p);
        }
    };
    go(0, 0);
    return out;
}

// Stack admissible rows while every column partial sum stays in {0,1}.
inline std::vector<Rows> asms(int n)
{
    const auto rows = asm_rows(n);
    std::vector<Rows> out;
    Rows current;
    std::vector<int> cols(n, 0);
    std::function<void()> go = [&] {
        if (static_cast<int>(current.size()) == n) {
            if (std::all_of(cols.begin(), cols.end(), [](int c) { return c == 1; })) out.push_back(current);
            return;
        }
        for (const auto &r : rows) {
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) ok = cols[j] + r[j] >= 0 && cols[j] + r[j] <= 1;
            if (!ok) continue;
            for (int j = 0; j < n; ++j) cols[j] += r[j];
            current.push_back(r);
            go();
            current.pop_back();
            for (int j = 0; j < n; ++j) cols[j] -= r[j];
        }
    };
    go();
    return out;
}

inline Rows corner_sums(const Rows &a)
{
    const int n = static_cast<int>(a.size());
    Rows c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= j; ++q) c[i][j] += a[p][q];
    return c;
}

// sum_{ij} (i-j)^2 a_ij / 2
inline int beta_quadratic(const Rows &a)
{
    int twice = 0;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        for (int j = 0; j < static_cast<int>(a.size()); ++j) twice += (i - j) * (i - j) * a[i][j];
    return twice / 2;
}

// Permutations as 1-based images.
inline std::vector<std::vector<int>> permutations(int n)
{
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline std::vector<int> inverse(const std::vector<int> &w)
{
    std::vector<int> inv(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) inv[w[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

inline int length(const std::vector<int> &w)
{
    int l = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) l += w[i] > w[j];
    return l;
}

inline int descents(const std::vector<int> &w)
{
    int d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
    return d;
}

inline bool bigrassmannian(const std::vector<int> &w) { return descents(w) == 1 && descents(inverse(w)) == 1; }

// Tableau form of Bruhat order: u <= v iff #{p <= i : u(p) >= k} <= #{p <= i : v(p) >= k}.
inline bool bruhat_leq(const std::vector<int> &u, const std::vector<int> &v)
{
    const int n = static_cast<int>(u.size());
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            int cu = 0, cv = 0;
            for (int p = 1; p <= i; ++p) {
                cu += u[p - 1] >= k;
                cv += v[p - 1] >= k;
            }
            if (cu > cv) return false;
        }
    return true;
}

inline std::vector<std::pair<int, int>> fulton_essential(const std::vector<int> &w)
{
    const int n = static_cast<int>(w.size());
    const auto inv = inverse(w);
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            if (i < inv[j - 1] && j < w[i - 1] && w[i] <= j && inv[j] <= i) out.emplace_back(i, j);
    return out;
}

inline asmg::Rational leibniz_det(const std::vector<std::vector<asmg::Rational>> &m)
{
    const int n = static_cast<int>(m.size());
    asmg::Rational total = 0;
    for (const auto &w : permutations(n)) {
        asmg::Rational t = (length(w) % 2 == 0) ? 1 : -1;
        for (int i = 0; i < n; ++i) t *= m[i][w[i] - 1];
        total += t;
    }
    return total;
}

// Polynomial in q with integer exponents as exponent -> coefficient.
using Poly = std::map<int, long long>;

inline Poly multiply(const Poly &a, const Poly &b)
{
    Poly out;
    for (const auto &[ea, ca] : a)
        for (const auto &[eb, cb] : b) out[ea + eb] += ca * cb;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace oracle
