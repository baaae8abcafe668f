#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rankdec/code.hpp"
#include "rankdec/linpoly.hpp"

// Welch-Berlekamp interpolation decoder over the polynomial basis, in the
// constant-time shape used by RQC: a fixed iteration count with nominal
// updates throughout, seeded random continuation values once the active
// discrepancy vector is exhausted.  An early-exit mode with dummy steps is
// kept for cross-checking.  Constant time here means the fixed schedule;
// branch-free arithmetic is not claimed.

namespace rankdec {

enum class WbaMode { constant_time, early_exit };

template <class F>
struct WbaState {
    using Elem = typename F::Elem;

    int n = 0;
    int k = 0;
    LinPoly<F> p0, q0, p1, q1;
    LinPoly<F> annih, interp;
    std::vector<Elem> u0, u1;  // discrepancy vectors
    int iterations = 0;
    bool finished = false;
};

template <class F>
WbaState<F> wba_init(const F& f, const GabidulinCode& code,
                     const std::vector<typename F::Elem>& r) {
    if (int(r.size()) != code.n) throw std::invalid_argument("received word length must be n");
    WbaState<F> st;
    st.n = code.n;
    st.k = code.k;

    std::vector<typename F::Elem> pts(code.g.begin(), code.g.begin() + code.k);
    std::vector<typename F::Elem> vals(r.begin(), r.begin() + code.k);
    st.annih = annihilator_poly(f, pts);
    st.interp = interpolation_poly(f, pts, vals);

    st.p0 = LinPoly<F>::identity(f);
    st.q0 = LinPoly<F>::zero();
    st.p1 = LinPoly<F>::zero();
    st.q1 = LinPoly<F>::identity(f);

    st.u0.assign(code.n, f.zero());
    st.u1.assign(code.n, f.zero());
    for (int i = code.k; i < code.n; ++i) {
        st.u0[i] = qp_eval(f, st.annih, code.g[i]);
        st.u1[i] = f.add(qp_eval(f, st.interp, code.g[i]), r[i]);
    }
    return st;
}

namespace detail {

template <class T>
inline Coords127<T> mask_elem(Coords127<T> e, std::uint64_t mask) {
    return Coords127<T>{e.lo & mask, e.hi & mask};
}

// Branching pivot search: first index d in [l, n) with u1[d] != 0 or
// u0[d] == 0; entries at l and d are swapped.  Returns false if no index
// qualifies.
template <class F>
bool pivot_search(const F& f, WbaState<F>& st, int l) {
    for (int d = l; d < st.n; ++d) {
        if (!f.is_zero(st.u1[d]) || f.is_zero(st.u0[d])) {
            std::swap(st.u0[l], st.u0[d]);
            std::swap(st.u1[l], st.u1[d]);
            return true;
        }
    }
    return false;
}

// Fixed-schedule pivot: scan the whole tail, folding the first qualifying
// entry into position l through value masks, then store the displaced
// entry back.
template <class F>
bool pivot_masked(const F& f, WbaState<F>& st, int l) {
    typename F::Elem save0 = st.u0[l];
    typename F::Elem save1 = st.u1[l];
    std::uint64_t found = 0;
    int dstar = -1;
    for (int d = l; d < st.n; ++d) {
        bool qual = !f.is_zero(st.u1[d]) || f.is_zero(st.u0[d]);
        std::uint64_t m = (qual ? ~0ULL : 0ULL) & ~found;
        if (m && dstar < 0) dstar = d;
        typename F::Elem t0 = f.add(st.u0[l], st.u0[d]);
        st.u0[l] = f.add(st.u0[l], mask_elem(t0, m));
        typename F::Elem t1 = f.add(st.u1[l], st.u1[d]);
        st.u1[l] = f.add(st.u1[l], mask_elem(t1, m));
        found |= qual ? ~0ULL : 0ULL;
    }
    if (dstar > l) {
        st.u0[dstar] = save0;
        st.u1[dstar] = save1;
    }
    return dstar >= 0;
}

}  // namespace detail

// Interpolation loop, iterations l = k..n-1.  Each iteration pivots, applies
// the nominal update
//   pair0' <- (x^[1] o P1 + u1l P1, ...)        (the paper's P^2 reading)
//   pair1' <- (P0 + (u0l/u1l) P1, ...)
// (the role swap is built into the assignment), then refreshes the
// discrepancy tails double-buffered.  A dummy step is the same update with
// both scalars zero and no inversion.
template <class F>
void wba_interpolate(const F& f, WbaState<F>& st, WbaMode mode, std::uint64_t rng_seed) {
    // The random-continuation schedule swaps the pair holding the solution
    // once per padded iteration, so the padding length n - k - 2*rank must
    // stay even.  RQC's n - k = 110 satisfies this.
    if (mode == WbaMode::constant_time && (st.n - st.k) % 2 != 0)
        throw std::invalid_argument("constant-time interpolation needs even n - k");
    std::mt19937_64 rng(rng_seed);
    for (int l = st.k; l < st.n; ++l) {
        bool have_pivot = (mode == WbaMode::constant_time)
                              ? detail::pivot_masked(f, st, l)
                              : detail::pivot_search(f, st, l);
        if (mode == WbaMode::early_exit && !have_pivot) break;

        typename F::Elem u1l = st.u1[l];
        typename F::Elem u0l = st.u0[l];
        bool dummy = false;
        if (f.is_zero(u1l)) {
            if (mode == WbaMode::constant_time) {
                u1l = random_nonzero_coords<poly_basis_tag>(rng);
            } else {
                dummy = true;  // pivot gave u0l = 0 = u1l
            }
        }

        typename F::Elem ratio, s;
        if (dummy) {
            ratio = f.zero();
            s = f.zero();
        } else {
            ratio = u1l;  // the displayed u1l^2 / u1l
            s = f.mul(u0l, f.inv(u1l));
        }

        LinPoly<F> np0 = qp_add(f, qp_frobenius_twist(f, st.p1), qp_scale(f, ratio, st.p1));
        LinPoly<F> nq0 = qp_add(f, qp_frobenius_twist(f, st.q1), qp_scale(f, ratio, st.q1));
        LinPoly<F> np1 = qp_add(f, st.p0, qp_scale(f, s, st.p1));
        LinPoly<F> nq1 = qp_add(f, st.q0, qp_scale(f, s, st.q1));
        st.p0 = std::move(np0);
        st.q0 = std::move(nq0);
        st.p1 = std::move(np1);
        st.q1 = std::move(nq1);

        for (int i = l + 1; i < st.n; ++i) {
            typename F::Elem n0 = f.add(f.square(st.u1[i]), f.mul(ratio, st.u1[i]));
            typename F::Elem n1 = f.add(st.u0[i], f.mul(s, st.u1[i]));
            st.u0[i] = n0;
            st.u1[i] = n1;
        }
        st.u0[l] = f.zero();
        st.u1[l] = f.zero();
        ++st.iterations;
    }
    st.finished = true;
}

// Message = first k coefficients of F = Q1 \ (P1 . A) + I.
template <class F>
std::vector<typename F::Elem> wba_finalize(const F& f, const WbaState<F>& st) {
    if (st.q1.is_zero()) throw decode_failure("wba: Q1 vanished, cannot divide");
    LinPoly<F> num = qp_compose(f, st.p1, st.annih);
    auto division = qp_left_divide(f, num, st.q1, st.k);
    LinPoly<F> fpoly = qp_add(f, division.q, st.interp);
    std::vector<typename F::Elem> msg(st.k, f.zero());
    for (int i = 0; i < st.k && i < int(fpoly.c.size()); ++i) msg[i] = fpoly.c[i];
    return msg;
}

template <class F>
std::vector<typename F::Elem> wba_decode(const F& f, const GabidulinCode& code,
                                         const std::vector<typename F::Elem>& r, WbaMode mode,
                                         std::uint64_t seed) {
    WbaState<F> st = wba_init(f, code, r);
    wba_interpolate(f, st, mode, seed);
    return wba_finalize(f, st);
}

inline std::vector<PolyElem> wba_decode(const GabidulinCode& code, const std::vector<PolyElem>& r,
                                        WbaMode mode = WbaMode::constant_time,
                                        std::uint64_t seed = 0) {
    PolyField f;
    return wba_decode(f, code, r, mode, seed);
}

}  // namespace rankdec
