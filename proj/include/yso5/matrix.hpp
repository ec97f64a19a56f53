#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "yso5/scalar.hpp"

namespace yso5 {

// A nonzero entry reported as evidence that a residual does not vanish.
struct Witness {
    size_t row = 0;
    size_t col = 0;
    Scalar value;
};

// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    std::string shape() const;

    const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }

    bool is_zero() const;
    std::optional<Witness> first_nonzero() const;
    Scalar trace() const;
    Matrix transpose() const;
    Matrix adjoint() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
// Row-major pairing: (a⊗b)[i·b.rows + k][j·b.cols + l] = a[i][j]·b[k][l].
Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);

}  // namespace yso5
