#pragma once

#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankdec/gf127_normal.hpp"
#include "rankdec/gf127_poly.hpp"
#include "rankdec/gf2.hpp"
#include "rankdec/linpoly.hpp"

// Gabidulin codes over GF(2^127): construction from random GF(2)-independent
// generating elements, Moore-matrix encoding, dual (parity-check) support,
// rank-exact error sampling, and the precomputation the transform domain
// decoder needs.  The polynomial basis is the canonical representation;
// conversions to normal coordinates happen at the decoder boundary.

namespace rankdec {

struct decode_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GabidulinCode {
    int n = 0;
    int k = 0;
    std::vector<PolyElem> g;  // n generating elements, GF(2)-rank n
    std::vector<PolyElem> h;  // n dual generating elements with H' G^T = 0

    int d() const { return n - k + 1; }
    int tau_max() const { return (n - k) / 2; }
};

// GF(2)-rank of a received/error word's coordinate matrix
template <class T>
inline int rank_of(const std::vector<Coords127<T>>& v) {
    return gf2_rank_of(v);
}

namespace detail {

// kernel vector of the (n-1) x n Moore system sum_j u_j g_j^[t] = 0,
// t = 0..n-2; the kernel is one-dimensional for independent g
inline std::vector<PolyElem> moore_kernel(const std::vector<PolyElem>& g) {
    const int n = int(g.size());
    const int rows = n - 1;
    std::vector<std::vector<PolyElem>> a(rows, std::vector<PolyElem>(n));
    for (int j = 0; j < n; ++j) {
        PolyElem p = g[j];
        for (int t = 0; t < rows; ++t) {
            a[t][j] = p;
            p = poly_square(p);
        }
    }
    // echelon form over the field, eliminating below each pivot only
    std::vector<int> pivot_col(rows, -1);
    std::vector<char> used(n, 0);
    for (int r = 0; r < rows; ++r) {
        int pc = -1;
        for (int cidx = 0; cidx < n && pc < 0; ++cidx)
            if (!used[cidx] && !coords_is_zero(a[r][cidx])) pc = cidx;
        if (pc < 0) throw std::runtime_error("moore system lost rank");
        used[pc] = 1;
        pivot_col[r] = pc;
        PolyElem inv = poly_inv(a[r][pc]);
        for (int c = 0; c < n; ++c)
            if (!used[c] || c == pc) a[r][c] = poly_mul(a[r][c], inv);
        for (int rr = r + 1; rr < rows; ++rr) {
            if (coords_is_zero(a[rr][pc])) continue;
            PolyElem f = a[rr][pc];
            a[rr][pc] = PolyElem{};
            for (int c = 0; c < n; ++c)
                if (!used[c]) a[rr][c] = poly_add(a[rr][c], poly_mul(f, a[r][c]));
        }
    }
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!used[c]) free_col = c;
    std::vector<PolyElem> u(n);
    u[free_col] = PolyElem{1, 0};
    for (int r = rows - 1; r >= 0; --r) {
        PolyElem acc = a[r][free_col];
        for (int rr = r + 1; rr < rows; ++rr) {
            const PolyElem& coef = a[r][pivot_col[rr]];
            if (!coords_is_zero(coef))
                acc = poly_add(acc, poly_mul(coef, u[pivot_col[rr]]));
        }
        u[pivot_col[r]] = acc;
    }
    return u;
}

}  // namespace detail

// Dual support: h with sum_j h_j g_j^[l] = 0 for l = -(n-k-1)..k-1, which
// gives H' G^T = 0 for the Moore matrices of h and g.
inline void dual_support(GabidulinCode& code) {
    const int s = code.n - code.k - 1;
    std::vector<PolyElem> u = detail::moore_kernel(code.g);
    code.h.resize(code.n);
    for (int j = 0; j < code.n; ++j) code.h[j] = poly_qpow(u[j], kExtDegree - s);
    if (gf2_rank_of(code.h) != code.n)
        throw std::runtime_error("dual support is GF(2)-dependent; regenerate the code");
}

inline GabidulinCode gen_code(int n, int k, std::uint64_t seed) {
    if (!(0 < k && k < n && n <= kExtDegree))
        throw std::invalid_argument("gabidulin code needs 0 < k < n <= 127");
    std::mt19937_64 rng(seed);
    GabidulinCode code;
    code.n = n;
    code.k = k;
    for (int attempt = 0; attempt < 64; ++attempt) {
        code.g.resize(n);
        for (auto& e : code.g) e = random_coords<poly_basis_tag>(rng);
        if (gf2_rank_of(code.g) != n) continue;
        try {
            dual_support(code);
        } catch (const std::runtime_error&) {
            continue;
        }
        return code;
    }
    throw std::runtime_error("could not sample an independent generating set");
}

// c_j = sum_i msg_i g_j^[i]; evaluation of the message polynomial at g_j
template <class F>
std::vector<typename F::Elem> encode(const F& f, const GabidulinCode& code,
                                     const std::vector<typename F::Elem>& msg)
    requires std::is_same_v<typename F::Elem, PolyElem>
{
    if (int(msg.size()) != code.k) throw std::invalid_argument("message length must be k");
    LinPoly<F> mp;
    mp.c = msg;
    mp.trim(f);
    std::vector<PolyElem> c(code.n);
    for (int j = 0; j < code.n; ++j) c[j] = qp_eval(f, mp, code.g[j]);
    return c;
}

inline std::vector<PolyElem> encode(const GabidulinCode& code, const std::vector<PolyElem>& msg) {
    PolyField f;
    return encode(f, code, msg);
}

// error word of GF(2)-rank exactly tau: e = a B with independent field
// elements a and a full-rank tau x n bit matrix B
inline std::vector<PolyElem> sample_error(int n, int tau, std::uint64_t seed) {
    if (tau < 0 || tau > n) throw std::invalid_argument("error rank out of range");
    std::vector<PolyElem> e(n);
    if (tau == 0) return e;
    std::mt19937_64 rng(seed);
    std::vector<PolyElem> a(tau);
    do {
        for (auto& x : a) x = random_coords<poly_basis_tag>(rng);
    } while (gf2_rank_of(a) != tau);
    BitMat b(tau, n);
    do {
        for (int t = 0; t < tau; ++t)
            for (int j = 0; j < n; ++j) b.set(t, j, rng() & 1);
    } while (b.rank() != tau);
    for (int j = 0; j < n; ++j) {
        PolyElem acc{};
        for (int t = 0; t < tau; ++t)
            if (b.get(t, j)) acc = poly_add(acc, a[t]);
        e[j] = acc;
    }
    return e;
}

// ---- transform domain decoder precomputation -----------------------------

struct TddPrecomp {
    int n = 0;
    int k = 0;
    BitMat a;     // m x n, column j = normal coordinates of h_j, so H' = H A
    BitMat adag;  // n x m left-inverse of a
    std::vector<std::vector<NormalElem>> gsub_inv;  // k x k inverse of the Moore submatrix
    std::vector<NormalElem> g_nb;                   // generating elements in normal coordinates
};

namespace detail {

// invert a small matrix over GF(2^127) by Gauss-Jordan elimination
template <class F>
std::vector<std::vector<typename F::Elem>> field_mat_inverse(
    const F& f, std::vector<std::vector<typename F::Elem>> a) {
    const int n = int(a.size());
    auto inv = std::vector<std::vector<typename F::Elem>>(n,
                                                          std::vector<typename F::Elem>(n, f.zero()));
    for (int i = 0; i < n; ++i) inv[i][i] = f.one();
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int r = col; r < n && p < 0; ++r)
            if (!f.is_zero(a[r][col])) p = r;
        if (p < 0) throw std::runtime_error("singular matrix over GF(2^127)");
        std::swap(a[col], a[p]);
        std::swap(inv[col], inv[p]);
        typename F::Elem pi = f.inv(a[col][col]);
        for (int c = 0; c < n; ++c) {
            a[col][c] = f.mul(a[col][c], pi);
            inv[col][c] = f.mul(inv[col][c], pi);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || f.is_zero(a[r][col])) continue;
            typename F::Elem x = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] = f.add(a[r][c], f.mul(x, a[col][c]));
                inv[r][c] = f.add(inv[r][c], f.mul(x, inv[col][c]));
            }
        }
    }
    return inv;
}

}  // namespace detail

inline TddPrecomp tdd_precompute(const GabidulinCode& code, const NormalBasisCtx& ctx) {
    if (code.h.empty()) throw std::invalid_argument("code has no dual support");
    TddPrecomp pre;
    pre.n = code.n;
    pre.k = code.k;
    pre.a = BitMat(kExtDegree, code.n);
    for (int j = 0; j < code.n; ++j) {
        NormalElem hn = ctx.to_normal(code.h[j]);
        for (int t = 0; t < kExtDegree; ++t)
            if (coords_get_bit(hn, t)) pre.a.set(t, j, true);
    }
    pre.adag = pre.a.left_inverse();

    NormalField f(ctx);
    pre.g_nb.resize(code.n);
    for (int j = 0; j < code.n; ++j) pre.g_nb[j] = ctx.to_normal(code.g[j]);
    std::vector<std::vector<NormalElem>> gsub(code.k, std::vector<NormalElem>(code.k));
    for (int j = 0; j < code.k; ++j) {
        NormalElem p = pre.g_nb[j];
        for (int i = 0; i < code.k; ++i) {
            gsub[i][j] = p;
            p = nb_qpow(p, 1);
        }
    }
    pre.gsub_inv = detail::field_mat_inverse(f, std::move(gsub));
    return pre;
}

// ---- hex serialization for reproducible cross-decoder tests --------------

inline std::string code_serialize(const GabidulinCode& code) {
    std::ostringstream os;
    os << "gabidulin-code v1 " << code.n << " " << code.k << "\n";
    for (const auto& e : code.g) os << to_hex(e) << "\n";
    for (const auto& e : code.h) os << to_hex(e) << "\n";
    return os.str();
}

inline GabidulinCode code_parse(const std::string& text) {
    std::istringstream is(text);
    std::string magic, ver;
    GabidulinCode code;
    is >> magic >> ver >> code.n >> code.k;
    if (magic != "gabidulin-code" || ver != "v1")
        throw std::invalid_argument("bad code serialization header");
    std::string hex;
    code.g.resize(code.n);
    for (auto& e : code.g) {
        if (!(is >> hex)) throw std::invalid_argument("truncated code serialization");
        e = from_hex<poly_basis_tag>(hex);
    }
    code.h.resize(code.n);
    for (auto& e : code.h) {
        if (!(is >> hex)) throw std::invalid_argument("truncated code serialization");
        e = from_hex<poly_basis_tag>(hex);
    }
    return code;
}

}  // namespace rankdec
