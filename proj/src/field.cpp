#include "lightsout/field.hpp"

#include <bit>
#include <stdexcept>

#include "lightsout/errors.hpp"

namespace lightsout {

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (ctx != o.ctx) throw std::invalid_argument("FieldElem: mixing elements of different fields");
    return {ctx, repr ^ o.repr};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (ctx != o.ctx) throw std::invalid_argument("FieldElem: mixing elements of different fields");
    return {ctx, ctx->mul(repr, o.repr)};
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (ctx != o.ctx) throw std::invalid_argument("FieldElem: mixing elements of different fields");
    return repr == o.repr;
}

FieldElem FieldElem::pow(std::uint64_t e) const { return {ctx, ctx->pow(repr, e)}; }

FieldElem FieldElem::inverse() const {
    if (repr == 0) throw std::invalid_argument("FieldElem::inverse: zero has no inverse");
    return pow(ctx->group_order() - 1);  // x^(q-2)
}

namespace {

// The cap must gate the modulus search itself; an uncapped find_modulus on a
// huge degree would run far too long to ever reach the constructor body.
unsigned checked_degree(unsigned m) {
    if (m < 1 || m > FieldCtx::kDegreeCap)
        throw CapExceeded("FieldCtx: degree " + std::to_string(m) + " exceeds cap " +
                          std::to_string(FieldCtx::kDegreeCap));
    return m;
}

}  // namespace

FieldCtx::FieldCtx(unsigned m) : FieldCtx(m, find_modulus(checked_degree(m))) {}

FieldCtx::FieldCtx(unsigned m, const Poly2& modulus) : m_(m) {
    checked_degree(m);
    if (modulus.degree() != int(m) || !is_irreducible(modulus))
        throw std::invalid_argument("FieldCtx: modulus must be irreducible of degree m");
    modulus_mask_ = modulus.low_mask();
    init();
}

void FieldCtx::init() {
    group_order_ = (std::uint64_t(1) << m_) - 1;
    factors_ = factor_small(group_order_);
    // Deterministic smallest generator: scan reprs ascending.
    generator_ = 0;
    for (std::uint64_t r = 2; r <= group_order_; ++r) {
        if (elem_order(FieldElem{this, r}) == group_order_) {
            generator_ = r;
            break;
        }
    }
    if (generator_ == 0 && m_ == 1) generator_ = 1;  // GF(2)*: trivial group
    if (generator_ == 0) throw std::logic_error("FieldCtx: no generator found");
}

FieldElem FieldCtx::elem(std::uint64_t repr) const {
    if (m_ < 64 && (repr >> m_) != 0)
        throw std::invalid_argument("FieldCtx::elem: repr has bits at or above degree");
    return {this, repr};
}

std::uint64_t FieldCtx::mul(std::uint64_t a, std::uint64_t b) const {
    // Carry-less multiply into 128 bits, then reduce by the modulus.
    unsigned __int128 acc = 0;
    std::uint64_t aa = a;
    while (aa) {
        unsigned shift = unsigned(std::countr_zero(aa));
        acc ^= (unsigned __int128)b << shift;
        aa &= aa - 1;
    }
    unsigned __int128 mod = modulus_mask_;
    for (int bit = 2 * int(m_) - 2; bit >= int(m_); --bit) {
        if ((acc >> bit) & 1) acc ^= mod << (bit - int(m_));
    }
    return std::uint64_t(acc);
}

std::uint64_t FieldCtx::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = 1, base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

std::uint64_t elem_order(const FieldElem& x) {
    if (x.repr == 0) throw std::invalid_argument("elem_order: zero element");
    const FieldCtx& ctx = *x.ctx;
    std::uint64_t e = ctx.group_order();
    for (auto [p, mult] : ctx.group_order_factors()) {
        for (int i = 0; i < mult; ++i) {
            if (ctx.pow(x.repr, e / p) == 1) e /= p;
            else break;
        }
    }
    return e;
}

FieldElem root_of_unity(std::uint64_t b, const FieldCtx& ctx) {
    if (b < 3 || b % 2 == 0) throw std::invalid_argument("root_of_unity: b must be odd and >= 3");
    if (ctx.group_order() % b != 0)
        throw std::invalid_argument("root_of_unity: b does not divide the group order");
    return ctx.elem(ctx.pow(ctx.generator_repr(), ctx.group_order() / b));
}

FieldElem poly_eval(const Poly2& p, const FieldElem& x) {
    FieldElem acc = x.ctx->zero();
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x;
        if (p.coeff(std::size_t(i))) acc = acc + x.ctx->one();
    }
    return acc;
}

WideFieldCtx::WideFieldCtx(unsigned m) : m_(m) {
    if (m < 1 || m > kDegreeCap)
        throw CapExceeded("WideFieldCtx: degree " + std::to_string(m) + " exceeds cap " +
                          std::to_string(kDegreeCap));
    Poly2 mod = find_modulus(m);
    modulus_ = 0;
    for (unsigned i = 0; i <= m; ++i)
        if (mod.coeff(i)) modulus_ |= (Repr)1 << i;
}

WideFieldCtx::Repr WideFieldCtx::mul(Repr a, Repr b) const {
    // 256-bit carry-less product as (hi, lo) halves, then reduce top-down.
    Repr lo = 0, hi = 0;
    for (unsigned i = 0; i < 128 && (a >> i); ++i) {
        if ((a >> i) & 1) {
            lo ^= b << i;
            if (i) hi ^= b >> (128 - i);
        }
    }
    // Product degree <= 2m-2 <= 238. Clearing bit k xors modulus << (k - m),
    // and k - m <= m - 2 < 128, so the shifted modulus always spans (hi, lo).
    for (int bit = 2 * int(m_) - 2; bit >= int(m_); --bit) {
        bool set = bit >= 128 ? ((hi >> (bit - 128)) & 1) : ((lo >> bit) & 1);
        if (!set) continue;
        int pos = bit - int(m_);
        lo ^= modulus_ << pos;
        if (pos) hi ^= modulus_ >> (128 - pos);
    }
    if (hi) throw std::logic_error("WideFieldCtx::mul: reduction failed");
    return lo;
}

WideFieldCtx::Repr WideFieldCtx::pow(Repr a, Repr e) const {
    Repr result = 1, base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

WideFieldCtx::Repr WideFieldCtx::root_of_unity(std::uint64_t b) const {
    if (b < 3 || b % 2 == 0) throw std::invalid_argument("root_of_unity: b must be odd and >= 3");
    Repr order = ((Repr)1 << m_) - 1;
    if (order % b != 0)
        throw std::invalid_argument("root_of_unity: b does not divide the group order");
    auto b_factors = factor_small(b);
    for (Repr z = 2;; ++z) {
        Repr alpha = pow(z, order / b);
        if (alpha == 1) continue;
        bool exact = true;
        for (auto [p, mult] : b_factors) {
            (void)mult;
            if (pow(alpha, b / p) == 1) { exact = false; break; }
        }
        if (exact) return alpha;
    }
}

WideFieldCtx::Repr WideFieldCtx::inverse(Repr a) const {
    if (a == 0) throw std::invalid_argument("WideFieldCtx::inverse: zero");
    Repr order = ((Repr)1 << m_) - 1;
    return pow(a, order - 1);
}

}  // namespace lightsout
