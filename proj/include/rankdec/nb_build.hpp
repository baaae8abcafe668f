#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankdec/gf127_normal.hpp"
#include "rankdec/gf127_poly.hpp"
#include "rankdec/gf2.hpp"

// Construction of a low-complexity self-dual normal basis of GF(2^127).
//
// Candidates are Gauss periods of type (127, k) with r = 127k + 1 prime and
// 2 primitive modulo r.  The minimal polynomial of the period is computed
// in the group algebra GF(2)[Z/r], a root is located in the polynomial
// basis field by equal-degree splitting, and the multiplication table M is
// derived by expressing alpha * alpha^[t] in the basis.  Every candidate is
// verified (normality, self-duality, product identity) before acceptance;
// seeded random elements follow if no structured candidate qualifies.

namespace rankdec {

namespace nbbuild {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

inline bool two_is_primitive_root(std::uint64_t r) {
    std::uint64_t phi = r - 1;
    std::uint64_t n = phi;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            if (pow_mod(2, phi / p, r) == 1) return false;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1 && pow_mod(2, phi / n, r) == 1) return false;
    return true;
}

// r-bit vectors in the group algebra GF(2)[Z/r]
struct CycVec {
    int r;
    std::vector<std::uint64_t> w;

    explicit CycVec(int r_) : r(r_), w((r_ + 63) / 64, 0) {}

    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }

    void xor_with(const CycVec& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    }

    bool is_zero() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    // cyclic rotation by u positions upward (y^i -> y^{i+u})
    CycVec rotated(int u) const {
        CycVec out(r);
        for (int i = 0; i < r; ++i)
            if (get(i)) out.set(int((i + u) % r));
        return out;
    }
};

// minimal polynomial over GF(2) of the type (m, k) Gauss period for r = mk+1,
// returned as 128 coefficient bits (degree m = 127); empty on failure
inline std::vector<int> coset_of(std::uint64_t start, const std::vector<std::uint64_t>& subgroup,
                                 std::uint64_t r) {
    std::vector<int> s;
    s.reserve(subgroup.size());
    for (auto e : subgroup) s.push_back(int((start * e) % r));
    std::sort(s.begin(), s.end());
    return s;
}

inline bool gauss_period_min_poly(int k, std::array<std::uint64_t, 2>& out_bits) {
    const int m = kExtDegree;
    const std::uint64_t r = std::uint64_t(m) * k + 1;
    if (!is_prime(r) || !two_is_primitive_root(r)) return false;

    // order-k subgroup K generated by 2^((r-1)/k)
    std::uint64_t w = pow_mod(2, (r - 1) / std::uint64_t(k), r);
    std::vector<std::uint64_t> K;
    std::uint64_t x = 1;
    for (int i = 0; i < k; ++i) {
        K.push_back(x);
        x = (x * w) % r;
    }
    if (x != 1) return false;

    // cosets 2^j K must be pairwise distinct and cover (Z/r)*
    std::vector<char> seen(r, 0);
    std::vector<std::vector<int>> cosets(m);
    std::uint64_t pw = 1;
    for (int j = 0; j < m; ++j) {
        cosets[j] = coset_of(pw, K, r);
        for (int e : cosets[j]) {
            if (seen[e]) return false;
            seen[e] = 1;
        }
        pw = (pw * 2) % r;
    }

    // product of (x + sum_{e in coset_j} y^e) over all cosets
    std::vector<CycVec> c;
    c.emplace_back(int(r));
    c[0].set(0);  // constant polynomial 1
    for (int j = 0; j < m; ++j) {
        std::vector<CycVec> next(c.size() + 1, CycVec(int(r)));
        for (std::size_t t = 0; t < c.size(); ++t) {
            next[t + 1].xor_with(c[t]);
            for (int e : cosets[j]) next[t].xor_with(c[t].rotated(e));
        }
        c = std::move(next);
    }

    // each coefficient must evaluate to 0 or 1 at a primitive r-th root:
    // {0, all-ones} -> 0, {e_0, complement of e_0} -> 1
    CycVec allones{int(r)};
    for (int i = 0; i < int(r); ++i) allones.set(i);
    out_bits = {0, 0};
    for (int t = 0; t <= m; ++t) {
        CycVec v = c[t];
        bool bit;
        if (v.is_zero()) {
            bit = false;
        } else {
            CycVec vc = v;
            vc.xor_with(allones);
            if (vc.is_zero()) {
                bit = false;
            } else {
                v.w[0] ^= 1;  // remove y^0
                CycVec v1 = v;
                v.xor_with(allones);
                if (v1.is_zero() || v.is_zero())
                    bit = true;
                else
                    return false;
            }
        }
        if (bit) out_bits[t >> 6] |= 1ULL << (t & 63);
    }
    return (out_bits[1] >> 63) & 1;  // monic of degree 127
}

// ---- polynomials over GF(2^127) (polynomial basis) for root finding -----

using FPoly = std::vector<PolyElem>;

inline void fp_trim(FPoly& p) {
    while (!p.empty() && coords_is_zero(p.back())) p.pop_back();
}

inline int fp_deg(const FPoly& p) { return int(p.size()) - 1; }

inline void fp_make_monic(FPoly& p) {
    if (p.empty()) return;
    PolyElem lead = p.back();
    if (lead == PolyElem{1, 0}) return;
    PolyElem li = poly_inv(lead);
    for (auto& c : p) c = poly_mul(c, li);
}

// reduce p in place modulo monic f
inline void fp_mod(FPoly& p, const FPoly& f) {
    int df = fp_deg(f);
    fp_trim(p);
    while (fp_deg(p) >= df) {
        int shift = fp_deg(p) - df;
        PolyElem c = p.back();
        for (int i = 0; i < df; ++i)
            p[i + shift] = poly_add(p[i + shift], poly_mul(c, f[i]));
        p.pop_back();
        fp_trim(p);
    }
}

inline FPoly fp_square_mod(const FPoly& p, const FPoly& f) {
    FPoly s(p.size() * 2 - 1);
    if (p.empty()) return {};
    for (std::size_t i = 0; i < p.size(); ++i) s[2 * i] = poly_square(p[i]);
    fp_mod(s, f);
    return s;
}

inline FPoly fp_gcd(FPoly a, FPoly b) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        fp_make_monic(b);
        fp_mod(a, b);
        std::swap(a, b);
    }
    fp_make_monic(a);
    return a;
}

inline FPoly fp_divide_exact(FPoly num, const FPoly& den) {
    FPoly q(num.size() - den.size() + 1);
    int dd = fp_deg(den);
    fp_trim(num);
    while (fp_deg(num) >= dd) {
        int shift = fp_deg(num) - dd;
        PolyElem c = num.back();  // den monic
        q[shift] = c;
        for (int i = 0; i <= dd; ++i)
            num[i + shift] = poly_add(num[i + shift], poly_mul(c, den[i]));
        fp_trim(num);
    }
    fp_trim(q);
    return q;
}

inline PolyElem fp_eval(const FPoly& p, PolyElem x) {
    PolyElem acc{};
    for (int i = fp_deg(p); i >= 0; --i) acc = poly_add(poly_mul(acc, x), p[i]);
    return acc;
}

// one root of a monic polynomial that splits into distinct linear factors
// over GF(2^127), by gcds with trace maps of random multiples of z
inline PolyElem fp_find_root(FPoly f, std::mt19937_64& rng) {
    fp_make_monic(f);
    while (fp_deg(f) > 1) {
        PolyElem gamma = random_nonzero_coords<poly_basis_tag>(rng);
        FPoly w{PolyElem{}, gamma};  // gamma * z
        fp_mod(w, f);
        FPoly acc = w;
        acc.resize(std::max<std::size_t>(acc.size(), 1));
        for (int s = 1; s < kExtDegree; ++s) {
            w = fp_square_mod(w, f);
            acc.resize(std::max(acc.size(), w.size()));
            for (std::size_t i = 0; i < w.size(); ++i) acc[i] = poly_add(acc[i], w[i]);
            fp_trim(acc);
        }
        FPoly g = fp_gcd(f, acc);
        int dg = fp_deg(g);
        if (dg <= 0 || dg >= fp_deg(f)) continue;
        FPoly other = fp_divide_exact(f, g);
        f = (fp_deg(g) <= fp_deg(other)) ? std::move(g) : std::move(other);
        fp_make_monic(f);
    }
    if (fp_deg(f) != 1) throw std::runtime_error("root finding failed");
    return f[0];  // monic z + c has root c
}

// Frobenius splitting test: z^(2^127) == z (mod f)
inline bool fp_splits_completely(const FPoly& f) {
    FPoly w{PolyElem{}, PolyElem{1, 0}};
    fp_mod(w, f);
    FPoly z = w;
    for (int s = 0; s < kExtDegree; ++s) w = fp_square_mod(w, f);
    fp_trim(w);
    fp_trim(z);
    return w == z;
}

// Derive the full context from a candidate normal element; returns false if
// the element is not normal or the basis is not self-dual.
inline bool derive_ctx_from_alpha(PolyElem alpha, NormalBasisCtx& out) {
    std::array<PolyElem, kExtDegree> conj;
    conj[0] = alpha;
    for (int i = 1; i < kExtDegree; ++i) conj[i] = poly_square(conj[i - 1]);

    BitMat b(kExtDegree, kExtDegree);
    for (int i = 0; i < kExtDegree; ++i) b.row(i) = coords_to_bits(conj[i]);
    if (b.rank() != kExtDegree) return false;  // not normal

    // self-duality: Tr(alpha * alpha^[l]) must be delta_{l,0}
    for (int l = 0; l < kExtDegree; ++l) {
        bool tr = poly_trace(poly_mul(alpha, conj[l]));
        if (tr != (l == 0)) return false;
    }

    BitMat binv = b.inverted();
    auto to_normal = [&](PolyElem p) {
        BitVec bits = coords_to_bits(p);
        NormalElem a;
        for (int j = 0; j < kExtDegree; ++j)
            if (bits.get(j)) a = nb_add(a, bits_to_coords<normal_basis_tag>(binv.row(j)));
        return a;
    };

    // column t of M holds the coordinates of alpha * alpha^[t]
    std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
    for (int t = 0; t < kExtDegree; ++t) {
        NormalElem col = to_normal(poly_mul(alpha, conj[t]));
        for (int s = 0; s < kExtDegree; ++s)
            if (coords_get_bit(col, s)) pairs.emplace_back(std::uint8_t(s), std::uint8_t(t));
    }
    std::sort(pairs.begin(), pairs.end());

    out = NormalBasisCtx{};
    out.alpha = alpha;
    out.self_dual = true;
    out.mult_pairs = std::move(pairs);
    out.rebuild_derived();
    if (out.complexity < 2 * kExtDegree - 1) throw std::runtime_error("multiplication table below rank bound");
    return true;
}

// product identity check against the polynomial basis
inline bool verify_ctx_products(const NormalBasisCtx& ctx, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        NormalElem a = random_coords<normal_basis_tag>(rng);
        NormalElem b = random_coords<normal_basis_tag>(rng);
        NormalElem c = nb_mul(a, b, ctx);
        PolyElem want = poly_mul(ctx.to_poly(a), ctx.to_poly(b));
        if (ctx.to_poly(c) != want) return false;
    }
    return true;
}

}  // namespace nbbuild

// Search for a verified self-dual normal basis.  Gauss-period candidates
// are tried in order of increasing k, then seeded random elements up to the
// given budget.
inline NormalBasisCtx build_normal_basis(std::uint64_t search_seed, int random_budget = 64,
                                         int max_complexity = 600) {
    std::mt19937_64 rng(search_seed);

    for (int k = 2; k <= 40; ++k) {
        std::array<std::uint64_t, 2> gbits;
        if (!nbbuild::gauss_period_min_poly(k, gbits)) continue;

        nbbuild::FPoly g(kExtDegree + 1);
        for (int t = 0; t <= kExtDegree; ++t)
            if ((gbits[t >> 6] >> (t & 63)) & 1) g[t] = PolyElem{1, 0};
        if (!nbbuild::fp_splits_completely(g)) continue;

        PolyElem alpha = nbbuild::fp_find_root(g, rng);
        NormalBasisCtx ctx;
        if (!nbbuild::derive_ctx_from_alpha(alpha, ctx)) continue;
        if (ctx.complexity > max_complexity) continue;
        if (!nbbuild::verify_ctx_products(ctx, 1000, search_seed ^ 0x9e3779b97f4a7c15ULL))
            throw std::runtime_error("normal basis product verification failed");
        return ctx;
    }

    for (int i = 0; i < random_budget; ++i) {
        PolyElem alpha = random_nonzero_coords<poly_basis_tag>(rng);
        NormalBasisCtx ctx;
        if (!nbbuild::derive_ctx_from_alpha(alpha, ctx)) continue;
        if (ctx.complexity > max_complexity) continue;
        if (!nbbuild::verify_ctx_products(ctx, 1000, search_seed ^ 0x9e3779b97f4a7c15ULL))
            continue;
        return ctx;
    }

    throw std::runtime_error("normal basis search exhausted after " +
                             std::to_string(random_budget) +
                             " random candidates beyond the Gauss-period list");
}

}  // namespace rankdec
