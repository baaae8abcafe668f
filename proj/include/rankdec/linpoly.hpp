#pragma once

#include <stdexcept>
#include <vector>

#include "rankdec/counting.hpp"
#include "rankdec/fe127.hpp"

// Linearized (q-) polynomials over GF(2^127): P(x) = sum_i c[i] * x^[i].
// The field backend is a template parameter, so the same algebra runs over
// either basis and over the instrumented wrappers; mixing bases is a type
// error.

namespace rankdec {

template <class F>
struct LinPoly {
    using Elem = typename F::Elem;

    std::vector<Elem> c;  // c[i] is the coefficient of x^[i]; trailing zeros trimmed

    int qdeg() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c.empty(); }

    static LinPoly zero() { return {}; }

    static LinPoly identity(const F& f) {
        LinPoly p;
        p.c.push_back(f.one());
        return p;
    }

    static LinPoly monomial(const F& f, Elem coeff, int qdegree) {
        LinPoly p;
        p.c.assign(qdegree + 1, f.zero());
        p.c[qdegree] = coeff;
        return p;
    }

    void trim(const F& f) {
        while (!c.empty() && f.is_zero(c.back())) c.pop_back();
    }

    friend bool operator==(const LinPoly&, const LinPoly&) = default;
};

template <class F>
typename F::Elem qp_eval(const F& f, const LinPoly<F>& p, typename F::Elem x) {
    if (p.is_zero()) return f.zero();
    typename F::Elem xp = x;
    typename F::Elem acc = f.mul(p.c[0], x);
    for (int i = 1; i <= p.qdeg(); ++i) {
        xp = f.qpow(xp, 1);
        acc = f.add(acc, f.mul(p.c[i], xp));
    }
    return acc;
}

template <class F>
LinPoly<F> qp_add(const F& f, const LinPoly<F>& a, const LinPoly<F>& b) {
    LinPoly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), f.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size() && i < b.c.size())
            r.c[i] = f.add(a.c[i], b.c[i]);
        else if (i < a.c.size())
            r.c[i] = a.c[i];
        else
            r.c[i] = b.c[i];
    }
    r.trim(f);
    return r;
}

template <class F>
LinPoly<F> qp_scale(const F& f, typename F::Elem s, const LinPoly<F>& a) {
    LinPoly<F> r;
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = f.mul(s, a.c[i]);
    r.trim(f);
    return r;
}

// left-composition with the Frobenius: coefficients squared, q-degrees up one
template <class F>
LinPoly<F> qp_frobenius_twist(const F& f, const LinPoly<F>& a) {
    if (a.is_zero()) return {};
    LinPoly<F> r;
    r.c.resize(a.c.size() + 1, f.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + 1] = f.square(a.c[i]);
    return r;
}

// symbolic composition (A o B)(x) = A(B(x)); non-commutative
template <class F>
LinPoly<F> qp_compose(const F& f, const LinPoly<F>& a, const LinPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LinPoly<F> r;
    r.c.assign(a.c.size() + b.c.size() - 1, f.zero());
    std::vector<typename F::Elem> bt = b.c;  // B with coefficients raised to [i]
    for (int i = 0; i <= a.qdeg(); ++i) {
        if (i > 0)
            for (auto& e : bt) e = f.qpow(e, 1);
        for (int j = 0; j <= b.qdeg(); ++j) r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], bt[j]));
    }
    r.trim(f);
    return r;
}

template <class F>
struct QpDivision {
    LinPoly<F> q;
    LinPoly<F> r;
};

// Left Euclidean division N = D o Q + R with deg_q R < deg_q D.
// With wanted_coeffs >= 0 the remainder bookkeeping below deg_q D is
// skipped; Q is complete but R comes back zero.
template <class F>
QpDivision<F> qp_left_divide(const F& f, const LinPoly<F>& n, const LinPoly<F>& d,
                             int wanted_coeffs = -1) {
    if (d.is_zero()) throw std::invalid_argument("left division by the zero polynomial");
    const bool early = wanted_coeffs >= 0;
    QpDivision<F> out;
    if (n.qdeg() < d.qdeg()) {
        out.r = early ? LinPoly<F>{} : n;
        return out;
    }
    const int ed = d.qdeg();
    std::vector<typename F::Elem> rem = n.c;
    typename F::Elem lead_inv = f.inv(d.c[ed]);
    out.q.c.assign(n.qdeg() - ed + 1, f.zero());
    for (int t = n.qdeg(); t >= ed; --t) {
        if (f.is_zero(rem[t])) continue;
        int j = t - ed;
        typename F::Elem qc = f.qpow(f.mul(rem[t], lead_inv), kExtDegree - ed);
        out.q.c[j] = qc;
        // subtract D o (qc x^[j]) from positions i + j
        int i0 = early ? std::max(0, ed - j) : 0;
        typename F::Elem powered = f.qpow(qc, i0);
        for (int i = i0; i <= ed; ++i) {
            if (i > i0) powered = f.qpow(powered, 1);
            rem[i + j] = f.add(rem[i + j], f.mul(d.c[i], powered));
        }
    }
    if (!early) {
        out.r.c.assign(rem.begin(), rem.begin() + ed);
        out.r.trim(f);
    }
    out.q.trim(f);
    return out;
}

// Monic annihilator of the GF(2)-span of the points, q-degree = #points.
template <class F>
LinPoly<F> annihilator_poly(const F& f, const std::vector<typename F::Elem>& points) {
    LinPoly<F> a = LinPoly<F>::identity(f);
    for (const auto& g : points) {
        typename F::Elem v = qp_eval(f, a, g);
        if (f.is_zero(v))
            throw std::invalid_argument("annihilator points are GF(2)-dependent");
        a = qp_add(f, qp_frobenius_twist(f, a), qp_scale(f, v, a));
    }
    return a;
}

// Interpolation polynomial I with deg_q I < #points and I(points[i]) = values[i].
template <class F>
LinPoly<F> interpolation_poly(const F& f, const std::vector<typename F::Elem>& points,
                              const std::vector<typename F::Elem>& values) {
    if (points.size() != values.size())
        throw std::invalid_argument("interpolation needs as many values as points");
    LinPoly<F> a = LinPoly<F>::identity(f);
    LinPoly<F> interp;
    for (std::size_t i = 0; i < points.size(); ++i) {
        typename F::Elem va = qp_eval(f, a, points[i]);
        if (f.is_zero(va))
            throw std::invalid_argument("interpolation points are GF(2)-dependent");
        typename F::Elem vi = qp_eval(f, interp, points[i]);
        typename F::Elem corr = f.mul(f.add(values[i], vi), f.inv(va));
        interp = qp_add(f, interp, qp_scale(f, corr, a));
        a = qp_add(f, qp_frobenius_twist(f, a), qp_scale(f, va, a));
    }
    return interp;
}

// q-transform with respect to the (self-dual) normal element:
// out[i] = sum_j a[j] * alpha^[i+j].  Its own inverse for self-dual bases.
template <ShiftTableBackend F>
std::vector<typename F::Elem> q_transform(const F& f, const std::vector<typename F::Elem>& a) {
    if (int(a.size()) != kExtDegree)
        throw std::invalid_argument("q-transform needs a length-127 coefficient vector");
    std::vector<typename F::Elem> out(kExtDegree, f.zero());
    for (int i = 0; i < kExtDegree; ++i) {
        typename F::Elem acc = f.mul_alpha_pow(a[0], i);
        for (int j = 1; j < kExtDegree; ++j) {
            int e = i + j;
            if (e >= kExtDegree) e -= kExtDegree;
            acc = f.add(acc, f.mul_alpha_pow(a[j], e));
        }
        out[i] = acc;
    }
    return out;
}

}  // namespace rankdec
