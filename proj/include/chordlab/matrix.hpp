#pragma once

#include <vector>

#include "chordlab/scalar.hpp"

namespace chordlab {

/// Dense exact matrix over one field, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& field, int rows, int cols);
    static Matrix identity(const Field& field, int n);

    const Field& field() const noexcept { return field_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    /// Matrix product; throws internal on a shape mismatch.
    Matrix operator*(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    /// Kronecker product: row index r1 * o.rows() + r2, i.e. the left
    /// factor is the most significant tensor digit.
    Matrix kron(const Matrix& o) const;

    /// Same entries reduced into another field.
    Matrix in_field(const Field& field) const;

private:
    Field field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

/// The flip a (x) b -> b (x) a on a d-dimensional space.
Matrix swap_matrix(const Field& field, int d);

}  // namespace chordlab
