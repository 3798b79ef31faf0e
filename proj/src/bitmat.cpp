#include "lightsout/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lightsout {

namespace {

std::size_t mix_hash(std::size_t h, std::uint64_t w) {
    // splitmix64-style combine
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

void BitVector::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

void BitVector::xor_with(const BitVector& other) {
    if (len_ != other.len_) throw std::invalid_argument("BitVector::xor_with: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool BitVector::is_zero() const {
    for (std::uint64_t w : words_) if (w) return false;
    return true;
}

std::size_t BitVector::hash() const {
    std::size_t h = len_;
    for (std::uint64_t w : words_) h = mix_hash(h, w);
    return h;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("BitMatrix: dimensions must be >= 1");
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

std::size_t BitMatrix::row_popcount(std::size_t r) const {
    std::size_t c = 0;
    const std::uint64_t* p = row(r);
    for (std::size_t w = 0; w < stride_; ++w) c += std::popcount(p[w]);
    return c;
}

bool BitMatrix::is_zero() const {
    for (std::uint64_t w : data_) if (w) return false;
    return true;
}

bool BitMatrix::is_identity() const {
    return rows_ == cols_ && *this == identity(rows_);
}

BitVector BitMatrix::apply(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::apply: length mismatch");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* rp = row(r);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < stride_; ++w) acc ^= rp[w] & v.words()[w];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* rp = row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            std::uint64_t bits = rp[w];
            while (bits) {
                std::size_t c = (w << 6) + std::countr_zero(bits);
                t.set(c, r, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

std::size_t BitMatrix::hash() const {
    std::size_t h = rows_ * 1000003u + cols_;
    for (std::uint64_t w : data_) h = mix_hash(h, w);
    return h;
}

std::string BitMatrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

BitMatrix mat_add(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mat_add: dimension mismatch");
    BitMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::uint64_t* o = out.row(r);
        const std::uint64_t* p = b.row(r);
        for (std::size_t w = 0; w < a.stride(); ++w) o[w] ^= p[w];
    }
    return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    BitMatrix out(a.rows(), b.cols());
    // Row combination: out.row(i) = XOR of b.row(k) over set bits k of a.row(i).
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const std::uint64_t* ar = a.row(r);
        std::uint64_t* o = out.row(r);
        for (std::size_t w = 0; w < a.stride(); ++w) {
            std::uint64_t bits = ar[w];
            while (bits) {
                std::size_t k = (w << 6) + std::countr_zero(bits);
                const std::uint64_t* br = b.row(k);
                for (std::size_t j = 0; j < b.stride(); ++j) o[j] ^= br[j];
                bits &= bits - 1;
            }
        }
    }
    return out;
}

BitMatrix mat_pow(const BitMatrix& a, std::uint64_t e) {
    if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: matrix must be square");
    BitMatrix result = BitMatrix::identity(a.rows());
    BitMatrix base = a;
    while (e) {
        if (e & 1) result = mat_mul(result, base);
        e >>= 1;
        if (e) base = mat_mul(base, base);
    }
    return result;
}

BitMatrix kron_product(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b.get(k, l)) out.set(i * b.rows() + k, j * b.cols() + l, true);
        }
    return out;
}

BitMatrix kron_sum(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw std::invalid_argument("kron_sum: inputs must be square");
    return mat_add(kron_product(a, BitMatrix::identity(b.rows())),
                   kron_product(BitMatrix::identity(a.rows()), b));
}

std::size_t rank(const BitMatrix& a) {
    BitMatrix m = a;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
        std::size_t pivot = rk;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rk)
            for (std::size_t w = 0; w < m.stride(); ++w)
                std::swap(m.row(rk)[w], m.row(pivot)[w]);
        for (std::size_t r = rk + 1; r < m.rows(); ++r) {
            if (!m.get(r, c)) continue;
            std::uint64_t* dst = m.row(r);
            const std::uint64_t* src = m.row(rk);
            for (std::size_t w = 0; w < m.stride(); ++w) dst[w] ^= src[w];
        }
        ++rk;
    }
    return rk;
}

std::size_t nilpotency_index(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("nilpotency_index: matrix must be square");
    std::size_t dim = a.rows();
    if (a.is_zero()) return 1;
    // Bracket the index between consecutive powers of two by repeated squaring,
    // then scan linearly from the bracket bottom. Index <= dim whenever nilpotent.
    BitMatrix prev = a;           // a^(2^(j-1)), nonzero
    std::size_t low = 1;
    while (true) {
        BitMatrix sq = mat_mul(prev, prev);
        if (sq.is_zero()) break;
        low *= 2;
        if (low > dim) throw std::invalid_argument("nilpotency_index: matrix is not nilpotent");
        prev = std::move(sq);
    }
    // a^low != 0, a^(2*low) == 0; index is in (low, 2*low].
    BitMatrix p = std::move(prev);
    std::size_t h = low;
    while (!p.is_zero()) {
        p = mat_mul(a, p);
        ++h;
        if (h > dim) throw std::invalid_argument("nilpotency_index: matrix is not nilpotent");
    }
    return h;
}

}  // namespace lightsout
