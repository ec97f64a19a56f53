#include "yso5/sparse_op.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "yso5/error.hpp"

namespace yso5 {

namespace {

void require_same_dim(const char* op, const SparseOp& a, const SparseOp& b) {
    if (a.dim() != b.dim())
        throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
}

}  // namespace

SparseBuilder::SparseBuilder(size_t dim) : op_(dim), acc_(dim), mark_(dim, std::numeric_limits<size_t>::max()) {
    if (dim > std::numeric_limits<uint32_t>::max()) throw DimensionError("sparse operator dimension too large");
    op_.row_ptr_.assign(1, 0);
}

void SparseBuilder::add(size_t col, const Scalar& v) {
    if (mark_[col] != row_) {
        mark_[col] = row_;
        acc_[col] = v;
        touched_.push_back(uint32_t(col));
    } else {
        acc_[col] += v;
    }
}

void SparseBuilder::add_mul(size_t col, const Scalar& a, const Scalar& b) {
    if (mark_[col] != row_) {
        mark_[col] = row_;
        acc_[col] = a * b;
        touched_.push_back(uint32_t(col));
    } else {
        acc_[col].add_mul(a, b);
    }
}

void SparseBuilder::end_row() {
    std::sort(touched_.begin(), touched_.end());
    for (uint32_t c : touched_) {
        if (acc_[c].is_zero()) continue;
        op_.cols_.push_back(c);
        op_.vals_.push_back(std::move(acc_[c]));
    }
    touched_.clear();
    op_.row_ptr_.push_back(op_.vals_.size());
    ++row_;
}

SparseOp SparseBuilder::finish() {
    while (row_ < op_.dim_) end_row();
    return std::move(op_);
}

SparseOp SparseOp::identity(size_t dim) { return scalar(dim, Scalar(1)); }

SparseOp SparseOp::scalar(size_t dim, const Scalar& s) {
    SparseOp m(dim);
    if (s.is_zero()) return m;
    m.cols_.resize(dim);
    m.vals_.assign(dim, s);
    for (size_t i = 0; i < dim; ++i) {
        m.cols_[i] = uint32_t(i);
        m.row_ptr_[i + 1] = i + 1;
    }
    return m;
}

SparseOp SparseOp::from_triplets(size_t dim, std::vector<Triplet> entries) {
    for (const auto& t : entries)
        if (t.row >= dim || t.col >= dim)
            throw DimensionError("triplet (" + std::to_string(t.row) + "," + std::to_string(t.col) +
                                 ") outside dimension " + std::to_string(dim));
    std::stable_sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) { return a.row < b.row; });
    SparseBuilder b(dim);
    size_t k = 0;
    for (size_t r = 0; r < dim; ++r) {
        for (; k < entries.size() && entries[k].row == r; ++k) b.add(entries[k].col, entries[k].value);
        b.end_row();
    }
    return b.finish();
}

SparseOp SparseOp::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("sparse operator from non-square matrix " + m.shape());
    SparseBuilder b(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) b.add(c, m(r, c));
        b.end_row();
    }
    return b.finish();
}

Matrix SparseOp::to_matrix() const {
    Matrix m(dim_, dim_);
    for (size_t r = 0; r < dim_; ++r)
        for (size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) m(r, cols_[k]) = vals_[k];
    return m;
}

Scalar SparseOp::at(size_t r, size_t c) const {
    auto cols = row_cols(r);
    auto it = std::lower_bound(cols.begin(), cols.end(), uint32_t(c));
    if (it == cols.end() || *it != c) return Scalar();
    return vals_[row_ptr_[r] + size_t(it - cols.begin())];
}

std::optional<Witness> SparseOp::first_nonzero() const {
    for (size_t r = 0; r < dim_; ++r)
        if (row_ptr_[r] != row_ptr_[r + 1]) return Witness{r, cols_[row_ptr_[r]], vals_[row_ptr_[r]]};
    return std::nullopt;
}

SparseOp SparseOp::transpose() const {
    std::vector<Triplet> t;
    t.reserve(nnz());
    for (size_t r = 0; r < dim_; ++r)
        for (size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) t.push_back({cols_[k], r, vals_[k]});
    return from_triplets(dim_, std::move(t));
}

SparseOp SparseOp::adjoint() const {
    std::vector<Triplet> t;
    t.reserve(nnz());
    for (size_t r = 0; r < dim_; ++r)
        for (size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) t.push_back({cols_[k], r, vals_[k].conj()});
    return from_triplets(dim_, std::move(t));
}

SparseOp SparseOp::operator-() const {
    SparseOp m = *this;
    for (auto& v : m.vals_) v = -v;
    return m;
}

namespace {

template <bool Subtract>
SparseOp merge(const SparseOp& a, const SparseOp& b) {
    SparseBuilder out(a.dim());
    for (size_t r = 0; r < a.dim(); ++r) {
        auto ac = a.row_cols(r);
        auto av = a.row_vals(r);
        for (size_t k = 0; k < ac.size(); ++k) out.add(ac[k], av[k]);
        auto bc = b.row_cols(r);
        auto bv = b.row_vals(r);
        for (size_t k = 0; k < bc.size(); ++k) out.add(bc[k], Subtract ? -bv[k] : bv[k]);
        out.end_row();
    }
    return out.finish();
}

}  // namespace

SparseOp operator+(const SparseOp& a, const SparseOp& b) {
    require_same_dim("add", a, b);
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    return merge<false>(a, b);
}

SparseOp operator-(const SparseOp& a, const SparseOp& b) {
    require_same_dim("sub", a, b);
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return merge<true>(a, b);
}

SparseOp operator*(const SparseOp& a, const SparseOp& b) {
    require_same_dim("mat_mul", a, b);
    SparseBuilder out(a.dim());
    if (a.is_zero() || b.is_zero()) return out.finish();
    for (size_t r = 0; r < a.dim(); ++r) {
        auto ac = a.row_cols(r);
        auto av = a.row_vals(r);
        for (size_t k = 0; k < ac.size(); ++k) {
            auto bc = b.row_cols(ac[k]);
            auto bv = b.row_vals(ac[k]);
            for (size_t l = 0; l < bc.size(); ++l) out.add_mul(bc[l], av[k], bv[l]);
        }
        out.end_row();
    }
    return out.finish();
}

SparseOp operator*(const Scalar& s, const SparseOp& m) {
    if (s.is_zero()) return SparseOp(m.dim());
    if (s.is_one()) return m;
    SparseOp r = m;
    for (auto& v : r.vals_) v = s * v;
    return r;
}

bool operator==(const SparseOp& a, const SparseOp& b) {
    return a.dim_ == b.dim_ && a.row_ptr_ == b.row_ptr_ && a.cols_ == b.cols_ && a.vals_ == b.vals_;
}

SparseOp kron(const SparseOp& a, const SparseOp& b) {
    size_t n = b.dim();
    SparseBuilder out(a.dim() * n);
    for (size_t i = 0; i < a.dim(); ++i) {
        auto ac = a.row_cols(i);
        auto av = a.row_vals(i);
        for (size_t k = 0; k < n; ++k) {
            auto bc = b.row_cols(k);
            auto bv = b.row_vals(k);
            for (size_t p = 0; p < ac.size(); ++p)
                for (size_t q = 0; q < bc.size(); ++q) out.add_mul(size_t(ac[p]) * n + bc[q], av[p], bv[q]);
            out.end_row();
        }
    }
    return out.finish();
}

SparseOp commutator(const SparseOp& a, const SparseOp& b) {
    require_same_dim("commutator", a, b);
    return a * b - b * a;
}

SparseOp anticommutator(const SparseOp& a, const SparseOp& b) {
    require_same_dim("anticommutator", a, b);
    return a * b + b * a;
}

}  // namespace yso5
