#include "chordlab/matrix.hpp"

#include <algorithm>
#include <string>

#include "chordlab/error.hpp"

namespace chordlab {

Matrix::Matrix(const Field& field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Scalar(field, 0)) {}

Matrix Matrix::identity(const Field& field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(field, 1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(field_ == o.field_))
        throw Error(ErrorCode::internal, "cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                             " by " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Matrix out(field_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const Scalar& b = o.at(k, c);
                if (!b.is_zero()) out.at(r, c) += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::internal, "shape mismatch in subtraction");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::kron(const Matrix& o) const {
    Matrix out(field_, rows_ * o.rows_, cols_ * o.cols_);
    for (int r1 = 0; r1 < rows_; ++r1)
        for (int c1 = 0; c1 < cols_; ++c1) {
            const Scalar& a = at(r1, c1);
            if (a.is_zero()) continue;
            for (int r2 = 0; r2 < o.rows_; ++r2)
                for (int c2 = 0; c2 < o.cols_; ++c2) {
                    const Scalar& b = o.at(r2, c2);
                    if (!b.is_zero()) out.at(r1 * o.rows_ + r2, c1 * o.cols_ + c2) = a * b;
                }
        }
    return out;
}

Matrix Matrix::in_field(const Field& field) const {
    Matrix out(field, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = Scalar(field, data_[i].value());
    return out;
}

Matrix swap_matrix(const Field& field, int d) {
    Matrix m(field, d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) m.at(b * d + a, a * d + b) = Scalar(field, 1);
    return m;
}

}  // namespace chordlab
