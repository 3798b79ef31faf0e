#ifndef LIGHTSOUT_BITMAT_HPP
#define LIGHTSOUT_BITMAT_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace lightsout {

// Dense vector over GF(2), packed into 64-bit words.
// Padding bits beyond len are kept zero at all times.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    std::size_t size() const { return len_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* words() const { return words_.data(); }
    std::uint64_t* words() { return words_.data(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void clear();
    void xor_with(const BitVector& other);  // same length required
    std::size_t popcount() const;
    bool is_zero() const;

    bool operator==(const BitVector& o) const { return len_ == o.len_ && words_ == o.words_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    std::size_t hash() const;
    std::string to_string() const;  // e.g. "0110"

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense matrix over GF(2); each row is bit-packed, row stride in words.
// Column padding bits are forced to zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (c & 63);
        std::uint64_t& w = data_[r * stride_ + (c >> 6)];
        if (v) w |= mask; else w &= ~mask;
    }

    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * stride_; }
    std::uint64_t* row(std::size_t r) { return data_.data() + r * stride_; }

    std::size_t row_popcount(std::size_t r) const;
    bool is_zero() const;
    bool is_identity() const;

    BitVector apply(const BitVector& v) const;  // matrix * vector
    BitMatrix transpose() const;

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    std::size_t hash() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> data_;
};

BitMatrix mat_add(const BitMatrix& a, const BitMatrix& b);
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix mat_pow(const BitMatrix& a, std::uint64_t e);
BitMatrix kron_product(const BitMatrix& a, const BitMatrix& b);
// a (x) I + I (x) b; a and b must be square (possibly of different sizes).
BitMatrix kron_sum(const BitMatrix& a, const BitMatrix& b);
std::size_t rank(const BitMatrix& a);
// Least h >= 1 with a^h = 0; throws if a^dim != 0.
std::size_t nilpotency_index(const BitMatrix& a);

}  // namespace lightsout

template <>
struct std::hash<lightsout::BitVector> {
    std::size_t operator()(const lightsout::BitVector& v) const { return v.hash(); }
};

#endif
