#ifndef CSSPROP_MATRIX_HPP
#define CSSPROP_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace cssprop {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
        if (!field_) throw std::invalid_argument("Matrix: null field");
    }

    Matrix(Field field, std::size_t cols, const std::vector<std::vector<elem_t>>& rows)
        : Matrix(std::move(field), rows.size(), cols) {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (rows[r].size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
        }
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    elem_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, elem_t v) {
        if (v >= field_->q()) throw std::invalid_argument("Matrix: entry outside the field");
        data_[r * cols_ + c] = v;
    }

    std::span<const elem_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<elem_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const elem_t> values) {
        if (values.size() != cols_) throw std::invalid_argument("Matrix: row length mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    Matrix without_column(std::size_t c) const {
        Matrix out(field_, rows_, cols_ - 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::size_t k = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                if (j != c) out.data_[r * out.cols_ + k++] = (*this)(r, j);
        }
        return out;
    }

    Matrix with_columns_permuted(std::span<const std::size_t> source_of) const {
        if (source_of.size() != cols_) throw std::invalid_argument("Matrix: permutation size mismatch");
        Matrix out(field_, rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < cols_; ++j) out.data_[r * cols_ + j] = (*this)(r, source_of[j]);
        return out;
    }

    bool operator==(const Matrix& o) const {
        return same_field(field_, o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    /// Row r += factor * row s.
    void add_scaled_row(std::size_t r, std::size_t s, elem_t factor) {
        if (factor == 0) return;
        const auto& f = *field_;
        elem_t* dst = data_.data() + r * cols_;
        const elem_t* src = data_.data() + s * cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (src[j]) dst[j] = f.add(dst[j], f.mul(factor, src[j]));
    }

    void scale_row(std::size_t r, elem_t factor) {
        const auto& f = *field_;
        for (auto& v : row(r)) v = f.mul(v, factor);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
    }

    /// Reduced row-echelon form in place; zero rows are removed.
    /// Pivots are scanned in `column_order` (default: natural order).
    /// Returns the pivot column of each surviving row.
    std::vector<std::size_t> rref(std::span<const std::size_t> column_order = {}) {
        std::vector<std::size_t> natural;
        if (column_order.empty()) {
            natural.resize(cols_);
            for (std::size_t j = 0; j < cols_; ++j) natural[j] = j;
            column_order = natural;
        }
        const auto& f = *field_;
        std::vector<std::size_t> pivots;
        std::size_t rank = 0;
        for (std::size_t c : column_order) {
            if (rank == rows_) break;
            std::size_t pr = rank;
            while (pr < rows_ && (*this)(pr, c) == 0) ++pr;
            if (pr == rows_) continue;
            swap_rows(rank, pr);
            const elem_t lead = (*this)(rank, c);
            if (lead != 1) scale_row(rank, f.inv(lead));
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank) continue;
                const elem_t v = (*this)(r, c);
                if (v) add_scaled_row(r, rank, f.neg(v));
            }
            pivots.push_back(c);
            ++rank;
        }
        data_.resize(rank * cols_);
        rows_ = rank;
        return pivots;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<elem_t> data_;
};

inline elem_t dot(const FieldSpec& f, std::span<const elem_t> a, std::span<const elem_t> b) {
    assert(a.size() == b.size());
    elem_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

inline std::size_t hamming_weight(std::span<const elem_t> v) {
    std::size_t w = 0;
    for (auto x : v) w += (x != 0);
    return w;
}

}  // namespace cssprop

#endif
