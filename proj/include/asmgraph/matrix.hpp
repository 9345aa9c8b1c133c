#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace asmg {

// Dense square matrix with 1-based (row, col) access.
template <class T>
class SquareMatrix {
public:
    using value_type = T;

    SquareMatrix() = default;
    explicit SquareMatrix(int n, const T &fill = T{}) : n_(n), data_(static_cast<std::size_t>(n) * n, fill)
    {
        if (n < 0) {
            throw std::invalid_argument("negative matrix size");
        }
    }
    SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(static_cast<int>(rows.size()))
    {
        data_.reserve(static_cast<std::size_t>(n_) * n_);
        for (const auto &row : rows) {
            if (static_cast<int>(row.size()) != n_) {
                throw std::invalid_argument("matrix rows must all have length n");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    int size() const noexcept { return n_; }

    const T &operator()(int i, int j) const
    {
        assert(1 <= i && i <= n_ && 1 <= j && j <= n_);
        return data_[index(i, j)];
    }
    T &operator()(int i, int j)
    {
        assert(1 <= i && i <= n_ && 1 <= j && j <= n_);
        return data_[index(i, j)];
    }

    // Row-major storage.
    const std::vector<T> &data() const noexcept { return data_; }

    // Submatrix on the given 1-based rows and columns (same count).
    SquareMatrix submatrix(const std::vector<int> &rows, const std::vector<int> &cols) const
    {
        assert(rows.size() == cols.size());
        SquareMatrix out(static_cast<int>(rows.size()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                out(static_cast<int>(r) + 1, static_cast<int>(c) + 1) = (*this)(rows[r], cols[c]);
            }
        }
        return out;
    }

    // Deletes the listed rows and columns.
    SquareMatrix minor_deleting(std::vector<int> del_rows, std::vector<int> del_cols) const
    {
        std::vector<int> rows, cols;
        for (int i = 1; i <= n_; ++i) {
            bool dropped = false;
            for (int d : del_rows) dropped = dropped || d == i;
            if (!dropped) rows.push_back(i);
        }
        for (int j = 1; j <= n_; ++j) {
            bool dropped = false;
            for (int d : del_cols) dropped = dropped || d == j;
            if (!dropped) cols.push_back(j);
        }
        return submatrix(rows, cols);
    }

    friend bool operator==(const SquareMatrix &, const SquareMatrix &) = default;

private:
    std::size_t index(int i, int j) const noexcept
    {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SquareMatrix<int>;

template <class T>
SquareMatrix<T> identity_matrix(int n)
{
    SquareMatrix<T> m(n, T(0));
    for (int i = 1; i <= n; ++i) m(i, i) = T(1);
    return m;
}

template <class T>
SquareMatrix<T> operator*(const SquareMatrix<T> &a, const SquareMatrix<T> &b)
{
    assert(a.size() == b.size());
    const int n = a.size();
    SquareMatrix<T> c(n, T(0));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 1; j <= n; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

} // namespace asmg
