#ifndef LIGHTSOUT_FIELDMAT_HPP
#define LIGHTSOUT_FIELDMAT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lightsout/bitmat.hpp"
#include "lightsout/field.hpp"

namespace lightsout {

// Dense matrix over GF(2^m); entries are field reprs (bitmask words).
class FieldMat {
public:
    FieldMat(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
        : ctx_(&ctx), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static FieldMat identity(const FieldCtx& ctx, std::size_t n);
    // Lift a GF(2) matrix into the field.
    static FieldMat lift(const FieldCtx& ctx, const BitMatrix& m);
    // m x m Jordan block with the given eigenvalue.
    static FieldMat jordan_block(const FieldCtx& ctx, std::uint64_t lambda, std::size_t m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t get(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { data_[r * cols_ + c] = v; }

    bool operator==(const FieldMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const FieldMat& o) const { return !(*this == o); }
    bool is_identity() const;

    FieldMat operator+(const FieldMat& o) const;
    FieldMat operator*(const FieldMat& o) const;
    FieldMat pow(std::uint64_t e) const;

    std::size_t rank() const;  // Gaussian elimination with field inverses
    std::size_t nullity() const { return cols_ - rank(); }
    std::uint64_t determinant() const;

private:
    const FieldCtx* ctx_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> data_;
};

}  // namespace lightsout

#endif
