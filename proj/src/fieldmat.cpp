#include "lightsout/fieldmat.hpp"

#include <stdexcept>

namespace lightsout {

FieldMat FieldMat::identity(const FieldCtx& ctx, std::size_t n) {
    FieldMat m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FieldMat FieldMat::lift(const FieldCtx& ctx, const BitMatrix& src) {
    FieldMat m(ctx, src.rows(), src.cols());
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c)
            if (src.get(r, c)) m.set(r, c, 1);
    return m;
}

FieldMat FieldMat::jordan_block(const FieldCtx& ctx, std::uint64_t lambda, std::size_t m) {
    FieldMat j(ctx, m, m);
    for (std::size_t i = 0; i < m; ++i) {
        j.set(i, i, lambda);
        if (i + 1 < m) j.set(i, i + 1, 1);
    }
    return j;
}

bool FieldMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c) != (r == c ? 1u : 0u)) return false;
    return true;
}

FieldMat FieldMat::operator+(const FieldMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || ctx_ != o.ctx_)
        throw std::invalid_argument("FieldMat::operator+: mismatch");
    FieldMat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= o.data_[i];
    return out;
}

FieldMat FieldMat::operator*(const FieldMat& o) const {
    if (cols_ != o.rows_ || ctx_ != o.ctx_)
        throw std::invalid_argument("FieldMat::operator*: mismatch");
    FieldMat out(*ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t aik = get(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                std::uint64_t v = o.get(k, j);
                if (v) out.data_[i * o.cols_ + j] ^= ctx_->mul(aik, v);
            }
        }
    return out;
}

FieldMat FieldMat::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw std::invalid_argument("FieldMat::pow: matrix must be square");
    FieldMat result = identity(*ctx_, rows_);
    FieldMat base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::uint64_t FieldMat::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("FieldMat::determinant: square only");
    FieldMat m = *this;
    std::uint64_t det = 1;  // row swaps keep the sign in characteristic 2
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t pivot = c;
        while (pivot < rows_ && m.get(pivot, c) == 0) ++pivot;
        if (pivot == rows_) return 0;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(m.data_[c * cols_ + j], m.data_[pivot * cols_ + j]);
        det = ctx_->mul(det, m.get(c, c));
        std::uint64_t inv = ctx_->pow(m.get(c, c), ctx_->group_order() - 1);
        for (std::size_t r = c + 1; r < rows_; ++r) {
            std::uint64_t f = ctx_->mul(m.get(r, c), inv);
            if (!f) continue;
            for (std::size_t j = c; j < cols_; ++j)
                m.data_[r * cols_ + j] ^= ctx_->mul(f, m.get(c, j));
        }
    }
    return det;
}

std::size_t FieldMat::rank() const {
    FieldMat m = *this;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
        std::size_t pivot = rk;
        while (pivot < rows_ && m.get(pivot, c) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(m.data_[rk * cols_ + j], m.data_[pivot * cols_ + j]);
        std::uint64_t inv = ctx_->pow(m.get(rk, c), ctx_->group_order() - 1);
        for (std::size_t j = c; j < cols_; ++j)
            m.set(rk, j, ctx_->mul(inv, m.get(rk, j)));
        for (std::size_t r = rk + 1; r < rows_; ++r) {
            std::uint64_t f = m.get(r, c);
            if (!f) continue;
            for (std::size_t j = c; j < cols_; ++j)
                m.data_[r * cols_ + j] ^= ctx_->mul(f, m.get(rk, j));
        }
        ++rk;
    }
    return rk;
}

}  // namespace lightsout
