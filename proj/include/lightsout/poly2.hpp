#ifndef LIGHTSOUT_POLY2_HPP
#define LIGHTSOUT_POLY2_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lightsout {

// Polynomial over GF(2). Bit i of the mask is the coefficient of x^i;
// the zero polynomial has an empty mask.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 from_mask(std::uint64_t mask);
    static Poly2 zero() { return Poly2(); }
    static Poly2 one() { return from_mask(1); }
    static Poly2 x() { return from_mask(2); }
    static Poly2 monomial(std::size_t d);

    // -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return words_.empty(); }
    bool coeff(std::size_t i) const;
    void set_coeff(std::size_t i, bool v);
    std::uint64_t low_mask() const { return words_.empty() ? 0 : words_[0]; }

    bool operator==(const Poly2& o) const { return words_ == o.words_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 square() const;
    Poly2 pow(std::uint64_t e) const;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Poly2, Poly2> divmod(const Poly2& divisor) const;
    Poly2 mod(const Poly2& m) const { return divmod(m).second; }

    // Formal derivative (only odd-degree terms survive mod 2).
    Poly2 derivative() const;

    std::string to_string() const;  // "x^3+x+1"

private:
    void trim();
    void shift_xor(const Poly2& src, std::size_t k);  // *this ^= src * x^k

    std::vector<std::uint64_t> words_;  // trimmed: no trailing zero words
};

Poly2 poly_gcd(Poly2 a, Poly2 b);
Poly2 poly_mulmod(const Poly2& a, const Poly2& b, const Poly2& m);
bool is_irreducible(const Poly2& f);
// Lexicographically smallest irreducible polynomial of degree m
// (smallest coefficient mask with the top bit set). Deterministic.
Poly2 find_modulus(unsigned m);

// x = 2^a * b with b odd; returns (a, b). x must be >= 1.
std::pair<unsigned, std::uint64_t> split_pow2(std::uint64_t x);

// Least j >= 1 with 2^j = 1 (mod b); 1 for b = 1. b must be odd.
unsigned ord2(std::uint64_t b);
// Least j >= 1 with 2^j = +-1 (mod b); 1 for b in {1, 3}. b must be odd.
unsigned sord2(std::uint64_t b);
// Full factorization by trial division (factors divided out as found).
std::vector<std::pair<std::uint64_t, int>> factor_small(std::uint64_t x);

}  // namespace lightsout

#endif
