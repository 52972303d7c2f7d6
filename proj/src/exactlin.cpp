#include "tricochain/exactlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace tricochain {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("QMatrix: expected " + std::to_string(rows_ * cols_) + " entries, got " +
                                    std::to_string(entries_.size()));
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QVector QMatrix::column(std::size_t c) const {
    QVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void QMatrix::set_column(std::size_t c, std::span<const Rational> values) {
    if (values.size() != rows_) throw std::invalid_argument("QMatrix::set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

bool QMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_zero(); });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("QMatrix product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    QMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

QVector operator*(const QMatrix& m, std::span<const Rational> v) {
    if (m.cols() != v.size()) throw std::invalid_argument("QMatrix-vector product: length mismatch");
    QVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

RowReduction row_reduce(QMatrix m) {
    RowReduction result;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;

    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && m(r, c).is_zero()) ++r;
        if (r == rows) continue;

        if (r != pivot_row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot_row, j));

        const Rational inv = Rational(1) / m(pivot_row, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!m(pivot_row, j).is_zero()) m(pivot_row, j) *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || m(i, c).is_zero()) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(pivot_row, j).is_zero()) m(i, j) -= factor * m(pivot_row, j);
        }

        result.pivot_columns.push_back(c);
        ++pivot_row;
    }

    result.reduced = std::move(m);
    return result;
}

std::size_t rank(const QMatrix& m) { return row_reduce(m).pivot_columns.size(); }

std::size_t image_dim(const QMatrix& m) { return rank(m); }

std::vector<QVector> kernel_basis(const QMatrix& m) {
    const RowReduction rr = row_reduce(m);
    const std::size_t cols = m.cols();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
            const Rational& coeff = rr.reduced(i, free);
            if (!coeff.is_zero()) v[rr.pivot_columns[i]] = -coeff;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace tricochain
