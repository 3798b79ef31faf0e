#ifndef LIGHTSOUT_FIELD_HPP
#define LIGHTSOUT_FIELD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lightsout/poly2.hpp"

namespace lightsout {

class FieldCtx;

// Element of GF(2^m) in polynomial basis; repr bit i is the coefficient of x^i.
// Elements of different contexts must not be mixed.
struct FieldElem {
    const FieldCtx* ctx = nullptr;
    std::uint64_t repr = 0;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    FieldElem pow(std::uint64_t e) const;
    FieldElem inverse() const;
    bool is_zero() const { return repr == 0; }
    bool is_one() const { return repr == 1; }
};

// GF(2^m) defined by an irreducible degree-m modulus. Degree is capped at 62
// so the group order 2^m - 1 stays within 64-bit arithmetic.
class FieldCtx {
public:
    static constexpr unsigned kDegreeCap = 62;

    explicit FieldCtx(unsigned m);           // uses find_modulus(m)
    FieldCtx(unsigned m, const Poly2& modulus);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    unsigned degree() const { return m_; }
    std::uint64_t modulus_mask() const { return modulus_mask_; }
    std::uint64_t group_order() const { return group_order_; }
    const std::vector<std::pair<std::uint64_t, int>>& group_order_factors() const {
        return factors_;
    }
    std::uint64_t generator_repr() const { return generator_; }

    FieldElem elem(std::uint64_t repr) const;
    FieldElem zero() const { return {this, 0}; }
    FieldElem one() const { return {this, 1}; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

private:
    void init();

    unsigned m_;
    std::uint64_t modulus_mask_;
    std::uint64_t group_order_;
    std::vector<std::pair<std::uint64_t, int>> factors_;
    std::uint64_t generator_;
};

// Multiplicative order of a nonzero element.
std::uint64_t elem_order(const FieldElem& x);
// Element of exact order b (odd, >= 3), computed as g^((2^m-1)/b) from the
// deterministic smallest generator g. Requires b | group order.
FieldElem root_of_unity(std::uint64_t b, const FieldCtx& ctx);

// Evaluate a GF(2)[x] polynomial at a field element (Horner).
FieldElem poly_eval(const Poly2& p, const FieldElem& x);

// Arithmetic-only field for degrees beyond FieldCtx's cap (up to 120), used
// where eigenvalue identities must be checked in fields whose group order
// exceeds 64 bits. Provides no order/generator machinery: roots of unity are
// built as z^((2^m-1)/b), with exactness checked through the factors of b.
class WideFieldCtx {
public:
    static constexpr unsigned kDegreeCap = 120;
    using Repr = unsigned __int128;

    explicit WideFieldCtx(unsigned m);

    unsigned degree() const { return m_; }
    Repr mul(Repr a, Repr b) const;
    Repr pow(Repr a, Repr e) const;
    // Deterministic element of exact order b (b odd >= 3, b | 2^m - 1).
    Repr root_of_unity(std::uint64_t b) const;
    Repr inverse(Repr a) const;

private:
    unsigned m_;
    Repr modulus_;
};

}  // namespace lightsout

#endif
