#pragma once

#include <algorithm>
#include <vector>

#include "asm.hpp"
#include "error.hpp"

namespace asmg {

inline constexpr int kMaxEnumerateAsmN = 7;
inline constexpr int kMaxEnumeratePermN = 9;

namespace detail {

// Depth-first completion of a corner-sum matrix, one cell at a time in
// row-major order. Each cell may take C(i,j-1) or C(i,j-1)+1 subject to the
// vertical unit-step rule; the last column and last row are forced.
class CornerSumFiller {
public:
    explicit CornerSumFiller(int n) : n_(n), c_(n, 0) {}

    std::vector<Asm> run()
    {
        fill(1, 1);
        return std::move(out_);
    }

private:
    int at(int i, int j) const { return (i == 0 || j == 0) ? 0 : c_(i, j); }

    void fill(int i, int j)
    {
        if (i > n_) {
            out_.push_back(CornerSum::from_matrix(c_).to_asm());
            return;
        }
        const int next_i = j == n_ ? i + 1 : i;
        const int next_j = j == n_ ? 1 : j + 1;
        const int left = at(i, j - 1);
        const int up = at(i - 1, j);
        for (int v = left; v <= left + 1; ++v) {
            if (v - up < 0 || v - up > 1) continue;
            if (j == n_ && v != i) continue;
            if (i == n_ && v != j) continue;
            c_(i, j) = v;
            fill(next_i, next_j);
        }
    }

    int n_;
    IntMatrix c_;
    std::vector<Asm> out_;
};

} // namespace detail

// Every n x n ASM exactly once, sorted by row-major entries (-1 < 0 < 1).
inline std::vector<Asm> enumerate_asms(int n, bool allow_large = false)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > kMaxEnumerateAsmN && !allow_large) throw SizeLimitExceeded("enumerate_asms", n, kMaxEnumerateAsmN);
    auto all = detail::CornerSumFiller(n).run();
    std::sort(all.begin(), all.end());
    return all;
}

// All n! permutations in lexicographic one-line order.
inline std::vector<Permutation> enumerate_permutations(int n, bool allow_large = false)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > kMaxEnumeratePermN && !allow_large) throw SizeLimitExceeded("enumerate_permutations", n, kMaxEnumeratePermN);
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace asmg
