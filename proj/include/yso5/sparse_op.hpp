#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "yso5/matrix.hpp"

namespace yso5 {

struct Triplet {
    size_t row;
    size_t col;
    Scalar value;
};

// Square exact sparse operator in CSR layout: columns sorted within each row,
// no stored zeros. Equality is therefore structural.
class SparseOp {
public:
    SparseOp() : row_ptr_(1, 0) {}
    explicit SparseOp(size_t dim) : dim_(dim), row_ptr_(dim + 1, 0) {}

    static SparseOp identity(size_t dim);
    static SparseOp scalar(size_t dim, const Scalar& s);
    // Duplicates are summed; entries summing to zero are dropped.
    static SparseOp from_triplets(size_t dim, std::vector<Triplet> entries);
    static SparseOp from_matrix(const Matrix& m);

    Matrix to_matrix() const;

    size_t dim() const { return dim_; }
    size_t nnz() const { return vals_.size(); }
    bool is_zero() const { return vals_.empty(); }
    Scalar at(size_t r, size_t c) const;

    std::span<const uint32_t> row_cols(size_t r) const {
        return {cols_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
    }
    std::span<const Scalar> row_vals(size_t r) const {
        return {vals_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
    }

    std::optional<Witness> first_nonzero() const;
    SparseOp adjoint() const;
    SparseOp transpose() const;

    SparseOp operator-() const;
    friend SparseOp operator+(const SparseOp& a, const SparseOp& b);
    friend SparseOp operator-(const SparseOp& a, const SparseOp& b);
    friend SparseOp operator*(const SparseOp& a, const SparseOp& b);
    friend SparseOp operator*(const Scalar& s, const SparseOp& m);
    SparseOp& operator+=(const SparseOp& o) { return *this = *this + o; }
    SparseOp& operator-=(const SparseOp& o) { return *this = *this - o; }
    friend bool operator==(const SparseOp& a, const SparseOp& b);
    friend bool operator!=(const SparseOp& a, const SparseOp& b) { return !(a == b); }

private:
    friend class SparseBuilder;
    size_t dim_ = 0;
    std::vector<size_t> row_ptr_;
    std::vector<uint32_t> cols_;
    std::vector<Scalar> vals_;
};

// Appends rows in order; each row is given as an unsorted accumulation.
class SparseBuilder {
public:
    explicit SparseBuilder(size_t dim);
    void add(size_t col, const Scalar& v);
    void add_mul(size_t col, const Scalar& a, const Scalar& b);
    void end_row();
    SparseOp finish();

private:
    SparseOp op_;
    std::vector<Scalar> acc_;
    std::vector<size_t> mark_;
    std::vector<uint32_t> touched_;
    size_t row_ = 0;
};

SparseOp kron(const SparseOp& a, const SparseOp& b);
SparseOp commutator(const SparseOp& a, const SparseOp& b);
SparseOp anticommutator(const SparseOp& a, const SparseOp& b);

}  // namespace yso5
