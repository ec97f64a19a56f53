#include "yso5/matrix.hpp"

#include "yso5/error.hpp"

namespace yso5 {

namespace {

void require_same_shape(const char* op, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(op) + ": shape mismatch " + a.shape() + " vs " + b.shape());
}

}  // namespace

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("from_rows: ragged row " + std::to_string(i));
        for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::string Matrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

std::optional<Witness> Matrix::first_nonzero() const {
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero()) return Witness{r, c, (*this)(r, c)};
    return std::nullopt;
}

Scalar Matrix::trace() const {
    if (rows_ != cols_) throw DimensionError("trace of non-square matrix " + shape());
    Scalar t;
    for (size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::adjoint() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape("add", a, b);
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape("sub", a, b);
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("mat_mul: shapes " + a.shape() + " and " + b.shape() + " do not conform");
    Matrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) m(i, j).add_mul(x, y);
            }
        }
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r(m.rows_, m.cols_);
    if (s.is_zero()) return r;
    for (size_t k = 0; k < m.data_.size(); ++k) r.data_[k] = s * m.data_[k];
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const Scalar& x = a(i, j);
            if (x.is_zero()) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    require_same_shape("commutator", a, b);
    return a * b - b * a;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
    require_same_shape("anticommutator", a, b);
    return a * b + b * a;
}

}  // namespace yso5
