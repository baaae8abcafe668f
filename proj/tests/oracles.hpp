#pragma once

#include <array>
#include <vector>

#include "rankdec/gf127_normal.hpp"
#include "rankdec/gf127_poly.hpp"

// Deliberately slow, branch-simple reference implementations the fast code
// is checked against.  These stay independent of the comb/table paths.

namespace rankdec::oracle {

// bit-by-bit shift-and-add over 253 coefficients, then coefficient-wise
// reduction by x^(127+i) = x^(i+1) + x^i
inline PolyElem schoolbook_mul(PolyElem a, PolyElem b) {
    std::array<bool, 256> c{};
    for (int i = 0; i < 127; ++i) {
        if (!coords_get_bit(a, i)) continue;
        for (int j = 0; j < 127; ++j)
            if (coords_get_bit(b, j)) c[i + j] = !c[i + j];
    }
    for (int deg = 252; deg >= 127; --deg) {
        if (!c[deg]) continue;
        c[deg] = false;
        int i = deg - 127;
        c[i + 1] = !c[i + 1];
        c[i] = !c[i];
    }
    PolyElem r;
    for (int i = 0; i < 127; ++i)
        if (c[i]) coords_set_bit(r, i, true);
    return r;
}

// term-by-term evaluation, each q-power recomputed from scratch
inline PolyElem eval_linpoly_direct(const std::vector<PolyElem>& coeffs, PolyElem x) {
    PolyElem acc{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        PolyElem p = x;
        for (std::size_t s = 0; s < i; ++s) p = schoolbook_mul(p, p);
        acc = poly_add(acc, schoolbook_mul(coeffs[i], p));
    }
    return acc;
}

// product through the conversion matrices; the ground truth for nb_mul
inline NormalElem cross_basis_mul(const NormalBasisCtx& ctx, NormalElem a, NormalElem b) {
    return ctx.to_normal(poly_mul(ctx.to_poly(a), ctx.to_poly(b)));
}

}  // namespace rankdec::oracle
