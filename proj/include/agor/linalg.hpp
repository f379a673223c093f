#pragma once

#include <vector>

#include "agor/field.hpp"

namespace agor {

// Dense exact matrix over a Scalar field. Row-major.
class Matrix {
public:
    Matrix(const Field& f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols),
          data_(rows * cols, Scalar(f)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    size_t rank() const;
    // Basis of the right kernel, as column vectors.
    std::vector<std::vector<Scalar>> kernel() const;

private:
    Field field_;
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

// Inverse of a square matrix given as rows; throws MathError if singular.
std::vector<std::vector<Scalar>>
invert_matrix(const std::vector<std::vector<Scalar>>& M, const Field& f);

} // namespace agor
