#include "lightsout/poly2.hpp"

#include <bit>
#include <stdexcept>

namespace lightsout {

Poly2 Poly2::from_mask(std::uint64_t mask) {
    Poly2 p;
    if (mask) p.words_.push_back(mask);
    return p;
}

Poly2 Poly2::monomial(std::size_t d) {
    Poly2 p;
    p.words_.assign(d / 64 + 1, 0);
    p.words_[d / 64] = std::uint64_t(1) << (d & 63);
    return p;
}

int Poly2::degree() const {
    if (words_.empty()) return -1;
    std::size_t last = words_.size() - 1;
    return int(last * 64 + 63 - std::countl_zero(words_[last]));
}

bool Poly2::coeff(std::size_t i) const {
    std::size_t w = i / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i & 63)) & 1u;
}

void Poly2::set_coeff(std::size_t i, bool v) {
    std::size_t w = i / 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    std::uint64_t mask = std::uint64_t(1) << (i & 63);
    if (v) words_[w] |= mask; else words_[w] &= ~mask;
    trim();
}

void Poly2::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    if (o.words_.size() > r.words_.size()) r.words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
    r.trim();
    return r;
}

void Poly2::shift_xor(const Poly2& src, std::size_t k) {
    if (src.words_.empty()) return;
    std::size_t wk = k / 64, bk = k & 63;
    std::size_t need = src.words_.size() + wk + 1;
    if (words_.size() < need) words_.resize(need, 0);
    if (bk == 0) {
        for (std::size_t i = 0; i < src.words_.size(); ++i) words_[i + wk] ^= src.words_[i];
    } else {
        for (std::size_t i = 0; i < src.words_.size(); ++i) {
            words_[i + wk] ^= src.words_[i] << bk;
            words_[i + wk + 1] ^= src.words_[i] >> (64 - bk);
        }
    }
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    if (words_.empty() || o.words_.empty()) return r;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            std::size_t i = w * 64 + std::countr_zero(bits);
            r.shift_xor(o, i);
            bits &= bits - 1;
        }
    }
    r.trim();
    return r;
}

Poly2 Poly2::square() const {
    // Frobenius: squaring spreads each bit i to position 2i.
    Poly2 r;
    if (words_.empty()) return r;
    int d = degree();
    r.words_.assign(std::size_t(2 * d) / 64 + 1, 0);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            std::size_t i = w * 64 + std::countr_zero(bits);
            r.words_[(2 * i) / 64] ^= std::uint64_t(1) << ((2 * i) & 63);
            bits &= bits - 1;
        }
    }
    r.trim();
    return r;
}

Poly2 Poly2::pow(std::uint64_t e) const {
    Poly2 result = one();
    Poly2 base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base.square();
    }
    return result;
}

std::pair<Poly2, Poly2> Poly2::divmod(const Poly2& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("Poly2::divmod: division by zero");
    Poly2 q, r = *this;
    int dd = divisor.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        std::size_t shift = std::size_t(r.degree() - dd);
        q.set_coeff(shift, true);
        r.shift_xor(divisor, shift);
        r.trim();
    }
    return {q, r};
}

Poly2 Poly2::derivative() const {
    Poly2 r;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
            std::size_t i = w * 64 + std::countr_zero(bits);
            if (i & 1) r.set_coeff(i - 1, true);
            bits &= bits - 1;
        }
    }
    return r;
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(std::size_t(i))) continue;
        if (!s.empty()) s += "+";
        if (i == 0) s += "1";
        else if (i == 1) s += "x";
        else s += "x^" + std::to_string(i);
    }
    return s;
}

Poly2 poly_gcd(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
        Poly2 r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly2 poly_mulmod(const Poly2& a, const Poly2& b, const Poly2& m) {
    if (m.is_zero()) throw std::invalid_argument("poly_mulmod: zero modulus");
    return (a * b).mod(m);
}

bool is_irreducible(const Poly2& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
    if (d == 1) return true;
    // x^(2^d) = x (mod f), and gcd(x^(2^(d/p)) + x, f) = 1 for each prime p | d.
    Poly2 x = Poly2::x().mod(f);
    Poly2 t = x;
    std::vector<Poly2> frobenius_chain;  // x^(2^k) mod f for k = 1..d
    for (int k = 1; k <= d; ++k) {
        t = t.square().mod(f);
        frobenius_chain.push_back(t);
    }
    if (frobenius_chain.back() != x) return false;
    for (auto [p, mult] : factor_small(std::uint64_t(d))) {
        (void)mult;
        const Poly2& u = frobenius_chain[std::size_t(d / int(p)) - 1];
        if (poly_gcd(u + x, f).degree() != 0) return false;
    }
    return true;
}

Poly2 find_modulus(unsigned m) {
    if (m < 1) throw std::invalid_argument("find_modulus: m must be >= 1");
    for (std::uint64_t low = 0;; ++low) {
        Poly2 f = Poly2::monomial(m);
        Poly2 tail = Poly2::from_mask(low);
        if (tail.degree() >= int(m)) throw std::runtime_error("find_modulus: no irreducible found");
        f = f + tail;
        if (is_irreducible(f)) return f;
    }
}

std::pair<unsigned, std::uint64_t> split_pow2(std::uint64_t x) {
    if (x < 1) throw std::invalid_argument("split_pow2: x must be >= 1");
    unsigned a = unsigned(std::countr_zero(x));
    return {a, x >> a};
}

unsigned ord2(std::uint64_t b) {
    if (b % 2 == 0) throw std::invalid_argument("ord2: b must be odd");
    if (b == 1) return 1;
    std::uint64_t pow = 2 % b;
    unsigned j = 1;
    while (pow != 1) {
        pow = (pow * 2) % b;
        ++j;
    }
    return j;
}

unsigned sord2(std::uint64_t b) {
    if (b % 2 == 0) throw std::invalid_argument("sord2: b must be odd");
    if (b == 1) return 1;
    std::uint64_t pow = 2 % b;
    unsigned j = 1;
    while (pow != 1 && pow != b - 1) {
        pow = (pow * 2) % b;
        ++j;
    }
    return j;
}

std::vector<std::pair<std::uint64_t, int>> factor_small(std::uint64_t x) {
    if (x < 1) throw std::invalid_argument("factor_small: x must be >= 1");
    if (x > (std::uint64_t(1) << 62)) throw std::invalid_argument("factor_small: x exceeds 2^62");
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
        if (x % p) continue;
        int e = 0;
        while (x % p == 0) { x /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (x > 1) out.emplace_back(x, 1);
    return out;
}

}  // namespace lightsout
