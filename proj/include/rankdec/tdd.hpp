#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankdec/code.hpp"
#include "rankdec/linpoly.hpp"

// Transform domain decoder over the normal basis: syndromes as the leading
// transform-domain error coefficients, Berlekamp-Massey key-equation solver
// for the error span polynomial, recursive completion of the transform
// vector, inverse q-transform and message recovery.
//
// All products run on shift tables.  Tables of the error span coefficients
// are cached across the places that reuse them; q-powered operands are
// materialized and get a fresh table.

namespace rankdec {

template <class F>
struct TddWork {
    std::vector<typename F::Elem> syndromes;  // d-1 entries
    LinPoly<F> gamma;                         // error span polynomial, gamma_0 = 1
    std::vector<typename F::Elem> e_tilde;    // length m
    std::vector<typename F::Elem> e_time;     // length m
    std::vector<typename F::Elem> msg;
};

// r = A r', then s_i = sum_j r_j alpha^[i+j] for i = 0..d-2
template <ShiftTableBackend F>
std::vector<typename F::Elem> tdd_syndromes(const F& f,
                                            const std::vector<typename F::Elem>& r_prime,
                                            const TddPrecomp& pre) {
    if (int(r_prime.size()) != pre.n) throw std::invalid_argument("received word length must be n");
    const int dminus1 = pre.n - pre.k;
    std::vector<typename F::Elem> r(kExtDegree, f.zero());
    for (int i = 0; i < kExtDegree; ++i) {
        typename F::Elem acc = f.zero();
        for (int j = 0; j < pre.n; ++j)
            if (pre.a.get(i, j)) acc = f.add(acc, r_prime[j]);
        r[i] = acc;
    }
    std::vector<typename F::Elem> s(dminus1, f.zero());
    for (int i = 0; i < dminus1; ++i) {
        typename F::Elem acc = f.mul_alpha_pow(r[0], i);
        for (int j = 1; j < kExtDegree; ++j) {
            int e = i + j;
            if (e >= kExtDegree) e -= kExtDegree;
            acc = f.add(acc, f.mul_alpha_pow(r[j], e));
        }
        s[i] = acc;
    }
    return s;
}

// Berlekamp-Massey over linearized polynomials: finds monic-at-zero Gamma
// with sum_i gamma_i s_{j-i}^[i] = 0 for j = tau..d-2.  The auxiliary
// polynomial ages by one Frobenius twist per step, its scalar by one
// squaring; one inversion per length change.
template <ShiftTableBackend F>
LinPoly<F> tdd_bma(const F& f, const std::vector<typename F::Elem>& s, int tau_max) {
    LinPoly<F> gamma = LinPoly<F>::identity(f);
    LinPoly<F> b = LinPoly<F>::identity(f);
    typename F::Elem inv_db = f.one();
    int len = 0;

    std::vector<ShiftTable> tg;  // tables of gamma_1..gamma_len
    auto rebuild_gamma_tables = [&] {
        tg.clear();
        for (int i = 1; i <= gamma.qdeg(); ++i) tg.push_back(f.make_table(gamma.c[i]));
    };

    for (int j = 0; j < int(s.size()); ++j) {
        b = qp_frobenius_twist(f, b);
        inv_db = f.square(inv_db);

        typename F::Elem delta = s[j];
        int terms = std::min(len, j);
        for (int i = 1; i <= terms; ++i) {
            if (f.is_zero(gamma.c[i])) continue;
            typename F::Elem v = f.qpow(s[j - i], i);
            ShiftTable tv = f.make_table(v);
            delta = f.add(delta, f.mul_tables(tg[i - 1], 0, tv, 0));
        }
        if (f.is_zero(delta)) continue;

        ShiftTable td = f.make_table(delta);
        ShiftTable ti = f.make_table(inv_db);
        typename F::Elem c = f.mul_tables(td, 0, ti, 0);
        ShiftTable tc = f.make_table(c);

        LinPoly<F> updated = gamma;
        updated.c.resize(std::max(updated.c.size(), b.c.size()), f.zero());
        for (int i = 0; i <= b.qdeg(); ++i) {
            if (f.is_zero(b.c[i])) continue;
            ShiftTable tb = f.make_table(b.c[i]);
            updated.c[i] = f.add(updated.c[i], f.mul_tables(tc, 0, tb, 0));
        }
        updated.trim(f);

        if (2 * len <= j) {
            len = j + 1 - len;
            b = gamma;
            inv_db = f.inv(delta);
        }
        gamma = std::move(updated);
        rebuild_gamma_tables();
    }

    if (gamma.qdeg() > tau_max)
        throw decode_failure("bma: error span degree exceeds correctable rank");
    return gamma;
}

// e~_j = sum_{i=1..tau} gamma_i e~_{j-i}^[i] for j = d-1..m-1 (cyclic indices)
template <ShiftTableBackend F>
std::vector<typename F::Elem> tdd_extend(const F& f, const LinPoly<F>& gamma,
                                         const std::vector<typename F::Elem>& s) {
    std::vector<typename F::Elem> et(kExtDegree, f.zero());
    for (std::size_t i = 0; i < s.size(); ++i) et[i] = s[i];

    const int tau = gamma.qdeg();
    std::vector<ShiftTable> tg;
    for (int i = 1; i <= tau; ++i) tg.push_back(f.make_table(gamma.c[i]));

    for (int j = int(s.size()); j < kExtDegree; ++j) {
        typename F::Elem acc = f.zero();
        for (int i = 1; i <= tau; ++i) {
            if (f.is_zero(gamma.c[i])) continue;
            int src = j - i;
            if (src < 0) src += kExtDegree;
            typename F::Elem v = f.qpow(et[src], i);
            ShiftTable tv = f.make_table(v);
            acc = f.add(acc, f.mul_tables(tg[i - 1], 0, tv, 0));
        }
        et[j] = acc;
    }
    return et;
}

// inverse transform (self-dual: the forward transform), undo the code
// transformation, subtract the error and solve for the message
template <ShiftTableBackend F>
std::vector<typename F::Elem> tdd_recover(const F& f, const std::vector<typename F::Elem>& e_tilde,
                                          const TddPrecomp& pre,
                                          const std::vector<typename F::Elem>& r_prime) {
    std::vector<typename F::Elem> e = q_transform(f, e_tilde);

    std::vector<typename F::Elem> c_prime(pre.n, f.zero());
    for (int j = 0; j < pre.n; ++j) {
        typename F::Elem acc = f.zero();
        for (int t = 0; t < kExtDegree; ++t)
            if (pre.adag.get(j, t)) acc = f.add(acc, e[t]);
        c_prime[j] = f.add(r_prime[j], acc);
    }

    std::vector<typename F::Elem> msg(pre.k, f.zero());
    std::vector<ShiftTable> tc;
    tc.reserve(pre.k);
    for (int i = 0; i < pre.k; ++i) tc.push_back(f.make_table(c_prime[i]));
    for (int t = 0; t < pre.k; ++t) {
        typename F::Elem acc = f.zero();
        for (int i = 0; i < pre.k; ++i) {
            ShiftTable tgi = f.make_table(pre.gsub_inv[i][t]);
            acc = f.add(acc, f.mul_tables(tc[i], 0, tgi, 0));
        }
        msg[t] = acc;
    }
    return msg;
}

template <ShiftTableBackend F>
std::vector<typename F::Elem> tdd_decode(const F& f, const TddPrecomp& pre,
                                         const std::vector<typename F::Elem>& r_prime) {
    auto s = tdd_syndromes(f, r_prime, pre);
    auto gamma = tdd_bma(f, s, (pre.n - pre.k) / 2);
    auto e_tilde = tdd_extend(f, gamma, s);
    return tdd_recover(f, e_tilde, pre, r_prime);
}

// Convenience entry from the canonical polynomial-basis representation:
// converts the received word at the boundary, decodes in normal
// coordinates, converts the message back.
inline std::vector<PolyElem> tdd_decode_poly(const GabidulinCode& code, const TddPrecomp& pre,
                                             const NormalBasisCtx& ctx,
                                             const std::vector<PolyElem>& r_prime) {
    NormalField f(ctx);
    std::vector<NormalElem> r(code.n);
    for (int j = 0; j < code.n; ++j) r[j] = ctx.to_normal(r_prime[j]);
    auto msg = tdd_decode(f, pre, r);
    std::vector<PolyElem> out(msg.size());
    for (std::size_t i = 0; i < msg.size(); ++i) out[i] = ctx.to_poly(msg[i]);
    return out;
}

}  // namespace rankdec
