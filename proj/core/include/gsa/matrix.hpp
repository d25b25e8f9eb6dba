// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gsa/errors.hpp"

namespace gsa {

// Dense row-major matrix of doubles. Small by design: the toolkit only
// needs storage, element access and column manipulation.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    std::vector<double> column(std::size_t c) const {
        std::vector<double> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    void set_column(std::size_t c, std::span<const double> values) {
        if (values.size() != rows_) throw ShapeError("set_column: length mismatch");
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
    }

    // Copies column `src_col` of `src` into column `dst_col` of this matrix.
    void copy_column_from(const Matrix& src, std::size_t src_col, std::size_t dst_col) {
        if (src.rows() != rows_) throw ShapeError("copy_column_from: row count mismatch");
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst_col) = src(r, src_col);
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace gsa
