#pragma once

#include "tricochain/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tricochain {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    /// Throws std::invalid_argument unless entries.size() == rows * cols.
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static QMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    [[nodiscard]] QVector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Rational> values);

    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Throws std::invalid_argument on a shape mismatch.
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& m, std::span<const Rational> v);

/// Reduced row echelon form plus the pivot columns, in increasing order.
/// Pivots are taken as the first nonzero entry scanning columns left to right.
struct RowReduction {
    QMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};

RowReduction row_reduce(QMatrix m);

std::size_t rank(const QMatrix& m);

/// Basis of the right null space. One vector per free column, free columns in
/// increasing order; the vector has a 1 in its free column and 0 in the other
/// free columns.
std::vector<QVector> kernel_basis(const QMatrix& m);

std::size_t image_dim(const QMatrix& m);

}  // namespace tricochain
