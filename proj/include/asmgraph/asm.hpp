#pragma once

// Alternating sign matrices, permutations and corner-sum matrices.
//
// All indices in this API are 1-based. Corner sums use the boundary
// convention C(0, j) = C(i, 0) = 0, supplied by the accessor.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace asmg {

enum class ViolationKind { NonSquare, EntryOutOfRange, PrefixSumViolation, TotalSumViolation };

enum class Axis { Row, Col };

inline const char *to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::NonSquare: return "NonSquare";
    case ViolationKind::EntryOutOfRange: return "EntryOutOfRange";
    case ViolationKind::PrefixSumViolation: return "PrefixSumViolation";
    case ViolationKind::TotalSumViolation: return "TotalSumViolation";
    }
    return "?";
}

inline const char *to_string(Axis a) { return a == Axis::Row ? "row" : "col"; }

// First axiom failure found by validate_asm. For TotalSumViolation only `i`
// is meaningful (the row or column index); for NonSquare neither is.
struct AsmViolation {
    ViolationKind kind;
    Axis axis = Axis::Row;
    int i = 0;
    int j = 0;

    std::string to_string() const
    {
        using asmg::to_string;
        switch (kind) {
        case ViolationKind::NonSquare: return "NonSquare";
        case ViolationKind::EntryOutOfRange:
            return "EntryOutOfRange(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case ViolationKind::PrefixSumViolation:
            return std::string("PrefixSumViolation(") + to_string(axis) + "," + std::to_string(i) + "," +
                   std::to_string(j) + ")";
        case ViolationKind::TotalSumViolation:
            return std::string("TotalSumViolation(") + to_string(axis) + "," + std::to_string(i) + ")";
        }
        return "?";
    }

    friend bool operator==(const AsmViolation &, const AsmViolation &) = default;
};

class InvalidAsm : public Error {
public:
    explicit InvalidAsm(AsmViolation v) : Error(to_string(v.kind), v.to_string()), violation_(v) {}
    const AsmViolation &violation() const noexcept { return violation_; }

private:
    AsmViolation violation_;
};

struct InvalidCornerSum : Error {
    explicit InvalidCornerSum(const std::string &detail) : Error("InvalidCornerSum", detail) {}
};

struct InvalidPermutation : Error {
    explicit InvalidPermutation(const std::string &detail) : Error("InvalidPermutation", detail) {}
};

struct NotAPermutation : Error {
    NotAPermutation() : Error("NotAPermutation", "the ASM is proper (has a -1 entry)") {}
};

// Scans a (possibly ragged) row list in row-major order. At each cell the
// checks are: entry range, column prefix sum, row prefix sum; the row total
// is checked at the end of each row and column totals after the last row.
inline std::optional<AsmViolation> find_asm_violation(const std::vector<std::vector<int>> &rows)
{
    const int n = static_cast<int>(rows.size());
    if (n == 0) {
        return AsmViolation{ViolationKind::NonSquare};
    }
    for (const auto &r : rows) {
        if (static_cast<int>(r.size()) != n) {
            return AsmViolation{ViolationKind::NonSquare};
        }
    }
    std::vector<int> col_prefix(n, 0);
    for (int i = 1; i <= n; ++i) {
        int row_prefix = 0;
        for (int j = 1; j <= n; ++j) {
            const int v = rows[i - 1][j - 1];
            if (v < -1 || v > 1) {
                return AsmViolation{ViolationKind::EntryOutOfRange, Axis::Row, i, j};
            }
            col_prefix[j - 1] += v;
            row_prefix += v;
            if (col_prefix[j - 1] < 0 || col_prefix[j - 1] > 1) {
                return AsmViolation{ViolationKind::PrefixSumViolation, Axis::Col, i, j};
            }
            if (row_prefix < 0 || row_prefix > 1) {
                return AsmViolation{ViolationKind::PrefixSumViolation, Axis::Row, i, j};
            }
        }
        if (row_prefix != 1) {
            return AsmViolation{ViolationKind::TotalSumViolation, Axis::Row, i, 0};
        }
    }
    for (int j = 1; j <= n; ++j) {
        if (col_prefix[j - 1] != 1) {
            return AsmViolation{ViolationKind::TotalSumViolation, Axis::Col, j, 0};
        }
    }
    return std::nullopt;
}

inline std::vector<std::vector<int>> to_rows(const IntMatrix &m)
{
    std::vector<std::vector<int>> rows(m.size(), std::vector<int>(m.size()));
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) rows[i - 1][j - 1] = m(i, j);
    return rows;
}

class Permutation;

// An alternating sign matrix. Immutable once constructed; every instance
// satisfies the ASM axioms.
class Asm {
public:
    // Validates; throws InvalidAsm naming the first violated axiom.
    static Asm from_rows(const std::vector<std::vector<int>> &rows)
    {
        if (auto v = find_asm_violation(rows)) {
            throw InvalidAsm(*v);
        }
        const int n = static_cast<int>(rows.size());
        IntMatrix m(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) m(i, j) = rows[i - 1][j - 1];
        return Asm(std::move(m));
    }
    static Asm from_matrix(const IntMatrix &m) { return from_rows(to_rows(m)); }

    static Asm identity(int n) { return Asm(identity_matrix<int>(n)); }

    int size() const noexcept { return entries_.size(); }
    int operator()(int i, int j) const { return entries_(i, j); }
    const IntMatrix &entries() const noexcept { return entries_; }

    // Proper ASMs are exactly those with a -1 entry.
    bool is_proper() const
    {
        return std::any_of(entries_.data().begin(), entries_.data().end(), [](int v) { return v < 0; });
    }

    friend bool operator==(const Asm &, const Asm &) = default;
    // Canonical order: lexicographic on the row-major entry sequence.
    friend bool operator<(const Asm &a, const Asm &b)
    {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.entries_.data() < b.entries_.data();
    }

private:
    friend class CornerSum;
    friend Asm permutation_to_asm(const Permutation &);
    explicit Asm(IntMatrix m) : entries_(std::move(m)) {}

    IntMatrix entries_;
};

inline std::optional<AsmViolation> validate_asm(const IntMatrix &m) { return find_asm_violation(to_rows(m)); }

// Matrix of rectangular partial sums C(i, j) = sum_{p<=i, q<=j} a_pq.
class CornerSum {
public:
    explicit CornerSum(const Asm &a) : values_(a.size(), 0)
    {
        const int n = a.size();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                values_(i, j) = a(i, j) + (*this)(i - 1, j) + (*this)(i, j - 1) - (*this)(i - 1, j - 1);
    }

    // Checks the corner-sum criterion: C(i,n) = C(n,i) = i and unit steps
    // along rows and columns. Throws InvalidCornerSum otherwise.
    static CornerSum from_matrix(const IntMatrix &m)
    {
        if (auto why = criterion_failure(m)) {
            throw InvalidCornerSum(*why);
        }
        return CornerSum(m);
    }

    static std::optional<std::string> criterion_failure(const IntMatrix &m)
    {
        const int n = m.size();
        if (n == 0) return std::string("empty matrix");
        auto at = [&](int i, int j) { return (i == 0 || j == 0) ? 0 : m(i, j); };
        for (int i = 1; i <= n; ++i) {
            if (m(i, n) != i || m(n, i) != i) {
                return "boundary value at index " + std::to_string(i) + " is not " + std::to_string(i);
            }
        }
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const int down = at(i, j) - at(i - 1, j);
                const int right = at(i, j) - at(i, j - 1);
                if (down < 0 || down > 1 || right < 0 || right > 1) {
                    return "non-unit step at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        return std::nullopt;
    }

    int size() const noexcept { return values_.size(); }

    // Returns 0 on the zero boundary (i == 0 or j == 0).
    int operator()(int i, int j) const { return (i == 0 || j == 0) ? 0 : values_(i, j); }

    const IntMatrix &values() const noexcept { return values_; }

    // Inverse of the corner-sum map.
    Asm to_asm() const
    {
        const int n = size();
        IntMatrix a(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                a(i, j) = (*this)(i, j) + (*this)(i - 1, j - 1) - (*this)(i, j - 1) - (*this)(i - 1, j);
        return Asm(std::move(a));
    }

    friend bool operator==(const CornerSum &, const CornerSum &) = default;

private:
    explicit CornerSum(IntMatrix m) : values_(std::move(m)) {}

    IntMatrix values_;
};

inline CornerSum corner_sum(const Asm &a) { return CornerSum(a); }

inline Asm from_corner_sum(const IntMatrix &c) { return CornerSum::from_matrix(c).to_asm(); }

// A permutation of {1..n} in one-line notation: p(i) is the image of i.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        const int n = static_cast<int>(images_.size());
        std::vector<bool> seen(n + 1, false);
        for (int v : images_) {
            if (v < 1 || v > n || seen[v]) {
                throw InvalidPermutation("images are not a bijection of 1.." + std::to_string(n));
            }
            seen[v] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return Permutation(std::move(v));
    }

    // Longest element n n-1 ... 1.
    static Permutation longest(int n)
    {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return Permutation(std::move(v));
    }

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int> &images() const noexcept { return images_; }

    Permutation inverse() const
    {
        std::vector<int> inv(images_.size());
        for (int i = 1; i <= size(); ++i) inv[(*this)(i)-1] = i;
        return Permutation(std::move(inv));
    }

    // Digits concatenated for n <= 9 ("4312"), comma separated otherwise.
    std::string one_line() const
    {
        std::string s;
        for (std::size_t k = 0; k < images_.size(); ++k) {
            if (size() > 9 && k > 0) s += ',';
            s += std::to_string(images_[k]);
        }
        return s;
    }

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
    std::vector<int> images_;
};

inline Asm permutation_to_asm(const Permutation &p)
{
    IntMatrix m(p.size(), 0);
    for (int i = 1; i <= p.size(); ++i) m(i, p(i)) = 1;
    return Asm(std::move(m));
}

inline Permutation asm_to_permutation(const Asm &a)
{
    if (a.is_proper()) {
        throw NotAPermutation();
    }
    std::vector<int> images(a.size());
    for (int i = 1; i <= a.size(); ++i)
        for (int j = 1; j <= a.size(); ++j)
            if (a(i, j) == 1) images[i - 1] = j;
    return Permutation(std::move(images));
}

inline std::vector<std::pair<int, int>> inversions(const Permutation &p)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j)
            if (p(i) > p(j)) out.emplace_back(i, j);
    return out;
}

inline int inversion_count(const Permutation &p) { return static_cast<int>(inversions(p).size()); }

inline int sign(const Permutation &p) { return inversion_count(p) % 2 == 0 ? 1 : -1; }

} // namespace asmg
