#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "rankdec/fe127.hpp"

// GF(2^127) in the polynomial basis modulo the trinomial x^127 + x + 1.
// Bit i of the limb pair is the coefficient of x^i.  Multiplication is a
// right-to-left comb over 4-bit windows of the second operand with a
// 16-entry table of partial products; reduction uses
// x^(127+i) = x^(i+1) + x^i.

namespace rankdec {

// Unreduced product of two elements, degree <= 252.
struct UnreducedProduct {
    std::array<std::uint64_t, 4> w{};
};

namespace detail {

// 8-bit -> 16-bit zero interleave, bit j -> bit 2j.
inline const std::array<std::uint16_t, 256>& interleave_table() {
    static const std::array<std::uint16_t, 256> table = [] {
        std::array<std::uint16_t, 256> t{};
        for (int b = 0; b < 256; ++b) {
            std::uint16_t v = 0;
            for (int j = 0; j < 8; ++j)
                if (b & (1 << j)) v |= std::uint16_t(1) << (2 * j);
            t[b] = v;
        }
        return t;
    }();
    return table;
}

inline std::uint64_t interleave32(std::uint32_t x) {
    const auto& t = interleave_table();
    return std::uint64_t(t[x & 0xff]) | (std::uint64_t(t[(x >> 8) & 0xff]) << 16) |
           (std::uint64_t(t[(x >> 16) & 0xff]) << 32) | (std::uint64_t(t[(x >> 24) & 0xff]) << 48);
}

}  // namespace detail

inline PolyElem poly_add(PolyElem a, PolyElem b) {
    return PolyElem{a.lo ^ b.lo, a.hi ^ b.hi};
}

inline UnreducedProduct poly_mul_unreduced(PolyElem a, PolyElem b) {
    // partial products a*u for all polynomials u of degree < 4,
    // three limbs each (degree <= 129)
    std::uint64_t t[16][3];
    t[0][0] = t[0][1] = t[0][2] = 0;
    t[1][0] = a.lo;
    t[1][1] = a.hi;
    t[1][2] = 0;
    for (int s = 1; s <= 3; ++s) {
        int u = 1 << s;
        t[u][0] = a.lo << s;
        t[u][1] = (a.hi << s) | (a.lo >> (64 - s));
        t[u][2] = a.hi >> (64 - s);
    }
    for (int u = 3; u < 16; ++u) {
        if ((u & (u - 1)) == 0) continue;
        int p = u & (u - 1), q = u & -u;
        t[u][0] = t[p][0] ^ t[q][0];
        t[u][1] = t[p][1] ^ t[q][1];
        t[u][2] = t[p][2] ^ t[q][2];
    }

    UnreducedProduct c;
    const std::uint64_t bw[2] = {b.lo, b.hi};
    for (int k = 15; k >= 0; --k) {
        for (int j = 0; j < 2; ++j) {
            const std::uint64_t* e = t[(bw[j] >> (4 * k)) & 0xf];
            c.w[j] ^= e[0];
            c.w[j + 1] ^= e[1];
            c.w[j + 2] ^= e[2];
        }
        if (k) {
            c.w[3] = (c.w[3] << 4) | (c.w[2] >> 60);
            c.w[2] = (c.w[2] << 4) | (c.w[1] >> 60);
            c.w[1] = (c.w[1] << 4) | (c.w[0] >> 60);
            c.w[0] <<= 4;
        }
    }
    return c;
}

// Fold the coefficients of x^127..x^252 back down.  With h the upper part,
// the result is low ^ h ^ x*h; x*h has degree <= 126, so one pass suffices.
inline PolyElem poly_reduce(const UnreducedProduct& u) {
    std::uint64_t h0 = (u.w[1] >> 63) | (u.w[2] << 1);
    std::uint64_t h1 = (u.w[2] >> 63) | (u.w[3] << 1);
    PolyElem r;
    r.lo = u.w[0] ^ h0 ^ (h0 << 1);
    r.hi = (u.w[1] & kHiMask) ^ h1 ^ (h1 << 1) ^ (h0 >> 63);
    return r;
}

inline PolyElem poly_mul(PolyElem a, PolyElem b) {
    return poly_reduce(poly_mul_unreduced(a, b));
}

inline PolyElem poly_square(PolyElem a) {
    UnreducedProduct u;
    u.w[0] = detail::interleave32(std::uint32_t(a.lo));
    u.w[1] = detail::interleave32(std::uint32_t(a.lo >> 32));
    u.w[2] = detail::interleave32(std::uint32_t(a.hi));
    u.w[3] = detail::interleave32(std::uint32_t(a.hi >> 32));
    return poly_reduce(u);
}

namespace detail {

// working register for the EEA, degree <= 127
struct Poly128 {
    std::uint64_t w0 = 0, w1 = 0;
};

inline int poly128_degree(const Poly128& p) {
    if (p.w1) return 127 - std::countl_zero(p.w1);
    if (p.w0) return 63 - std::countl_zero(p.w0);
    return -1;
}

inline Poly128 poly128_shl(const Poly128& p, int s) {
    Poly128 r;
    if (s == 0) {
        r = p;
    } else if (s < 64) {
        r.w0 = p.w0 << s;
        r.w1 = (p.w1 << s) | (p.w0 >> (64 - s));
    } else {
        r.w0 = 0;
        r.w1 = p.w0 << (s - 64);
    }
    return r;
}

}  // namespace detail

// Extended Euclidean inversion over GF(2)[x] mod the trinomial.
inline PolyElem poly_inv(PolyElem a) {
    if (coords_is_zero(a)) throw std::domain_error("inverse of zero");
    using detail::Poly128;
    using detail::poly128_degree;
    using detail::poly128_shl;

    Poly128 u{a.lo, a.hi};
    Poly128 v{3, 1ULL << 63};  // x^127 + x + 1
    Poly128 g1{1, 0};
    Poly128 g2{0, 0};

    while (poly128_degree(u) > 0) {
        int j = poly128_degree(u) - poly128_degree(v);
        if (j < 0) {
            std::swap(u, v);
            std::swap(g1, g2);
            j = -j;
        }
        Poly128 sv = poly128_shl(v, j);
        u.w0 ^= sv.w0;
        u.w1 ^= sv.w1;
        Poly128 sg = poly128_shl(g2, j);
        g1.w0 ^= sg.w0;
        g1.w1 ^= sg.w1;
    }
    return PolyElem{g1.w0, g1.w1 & kHiMask};
}

// q-power a^(2^i) by repeated squaring; i reduced mod 127.
inline PolyElem poly_qpow(PolyElem a, int i) {
    int j = i % kExtDegree;
    if (j < 0) j += kExtDegree;
    for (int s = 0; s < j; ++s) a = poly_square(a);
    return a;
}

// Trace to GF(2), via a precomputed mask of Tr(x^j).
inline bool poly_trace(PolyElem a) {
    static const PolyElem mask = [] {
        PolyElem m;
        for (int j = 0; j < kExtDegree; ++j) {
            PolyElem v;
            coords_set_bit(v, j, true);
            PolyElem t = v;
            for (int s = 1; s < kExtDegree; ++s) {
                v = poly_square(v);
                t = poly_add(t, v);
            }
            coords_set_bit(m, j, t.lo & 1);
        }
        return m;
    }();
    return (std::popcount(a.lo & mask.lo) + std::popcount(a.hi & mask.hi)) & 1;
}

// Field backend for the generic decoder/polynomial templates.
class PolyField {
public:
    using Elem = PolyElem;

    Elem zero() const { return Elem{}; }
    Elem one() const { return Elem{1, 0}; }
    bool is_zero(Elem a) const { return coords_is_zero(a); }

    Elem add(Elem a, Elem b) const { return poly_add(a, b); }
    Elem mul(Elem a, Elem b) const { return poly_mul(a, b); }
    Elem square(Elem a) const { return poly_square(a); }
    Elem inv(Elem a) const { return poly_inv(a); }
    Elem qpow(Elem a, int i) const { return poly_qpow(a, i); }

    Elem random(std::mt19937_64& rng) const { return random_coords<poly_basis_tag>(rng); }
};

}  // namespace rankdec
