#ifndef MAGICLAT_MATRIX_HPP
#define MAGICLAT_MATRIX_HPP

#include <gmpxx.h>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace magiclat {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMatrix: entry count does not match shape");
    }

    /// Convenience constructor from nested initializer data (tests, fixtures).
    IntMatrix(std::initializer_list<std::initializer_list<long>> data) {
        rows_ = data.size();
        cols_ = rows_ == 0 ? 0 : data.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : data) {
            if (row.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (long v : row) entries_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return entries_; }

    std::vector<Int> row(std::size_t i) const {
        return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& other) const {
        if (cols_ != other.rows_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix p(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    p.at(i, j) += a * other.at(k, j);
            }
        return p;
    }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }

    /// row[a] += c * row[b]
    void add_row_multiple(std::size_t a, std::size_t b, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
    }

    /// col[a] += c * col[b]
    void add_col_multiple(std::size_t a, std::size_t b, const Int& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
    }

    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += '[';
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ' ';
                s += at(i, j).get_str();
            }
            s += "]\n";
        }
        return s;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// x * m for a row vector x of length m.rows().
inline std::vector<Int> row_vector_times(const std::vector<Int>& x, const IntMatrix& m) {
    if (x.size() != m.rows())
        throw std::invalid_argument("row_vector_times: dimension mismatch");
    std::vector<Int> out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m.at(i, j);
    }
    return out;
}

/// m * x for a column vector x of length m.cols().
inline std::vector<Int> matrix_times_vector(const IntMatrix& m, const std::vector<Int>& x) {
    if (x.size() != m.cols())
        throw std::invalid_argument("matrix_times_vector: dimension mismatch");
    std::vector<Int> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * x[j];
    return out;
}

/// Sum of entries; the paper-style "point count with multiplicity" of a line combination.
inline Int coefficient_sum(const std::vector<Int>& v) {
    Int s = 0;
    for (const Int& a : v) s += a;
    return s;
}

}  // namespace magiclat

#endif
