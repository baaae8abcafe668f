#pragma once

#include <cstdint>

#include "rankdec/gf127_normal.hpp"
#include "rankdec/gf127_poly.hpp"

// Instrumented field backends.  A Counted<F> forwards every operation to F
// and bumps per-operation call counters in an externally owned OpCounts, so
// a report belongs to one run and the plain backends stay pure.

namespace rankdec {

struct OpCounts {
    std::uint64_t add = 0;
    std::uint64_t multiply = 0;
    std::uint64_t set_shift_table = 0;
    std::uint64_t multiply_shift_tables = 0;
    std::uint64_t mul_alpha_pow = 0;
    std::uint64_t q_power = 0;
    std::uint64_t square = 0;
    std::uint64_t invert = 0;

    OpCounts& operator+=(const OpCounts& o) {
        add += o.add;
        multiply += o.multiply;
        set_shift_table += o.set_shift_table;
        multiply_shift_tables += o.multiply_shift_tables;
        mul_alpha_pow += o.mul_alpha_pow;
        q_power += o.q_power;
        square += o.square;
        invert += o.invert;
        return *this;
    }
};

template <class F>
concept ShiftTableBackend = requires(const F& f, typename F::Elem e) {
    f.make_table(e);
    f.mul_alpha_pow(e, 1);
};

template <class F>
class Counted {
public:
    using Elem = typename F::Elem;

    Counted(const F& base, OpCounts& counts) : base_(base), c_(&counts) {}

    const F& base() const { return base_; }
    OpCounts& counts() const { return *c_; }

    Elem zero() const { return base_.zero(); }
    Elem one() const { return base_.one(); }
    bool is_zero(Elem a) const { return base_.is_zero(a); }
    Elem random(std::mt19937_64& rng) const { return base_.random(rng); }

    Elem add(Elem a, Elem b) const {
        ++c_->add;
        return base_.add(a, b);
    }

    Elem mul(Elem a, Elem b) const {
        ++c_->multiply;
        return base_.mul(a, b);
    }

    Elem square(Elem a) const {
        ++c_->square;
        return base_.square(a);
    }

    Elem qpow(Elem a, int i) const {
        if constexpr (ShiftTableBackend<F>) {
            ++c_->q_power;
            return base_.qpow(a, i);
        } else {
            // polynomial basis has no shift; a q-power is a squaring chain
            int j = i % kExtDegree;
            if (j < 0) j += kExtDegree;
            for (int s = 0; s < j; ++s) a = square(a);
            return a;
        }
    }

    Elem inv(Elem a) const {
        ++c_->invert;
        if constexpr (ShiftTableBackend<F>) {
            return nb_invert_chain(*this, a);  // chain runs through counted primitives
        } else {
            return base_.inv(a);
        }
    }

    ShiftTable make_table(Elem a) const
        requires ShiftTableBackend<F>
    {
        ++c_->set_shift_table;
        return base_.make_table(a);
    }

    Elem mul_tables(const ShiftTable& ta, int oa, const ShiftTable& tb, int ob) const
        requires ShiftTableBackend<F>
    {
        ++c_->multiply_shift_tables;
        return base_.mul_tables(ta, oa, tb, ob);
    }

    Elem mul_alpha_pow(Elem a, int i) const
        requires ShiftTableBackend<F>
    {
        ++c_->mul_alpha_pow;
        return base_.mul_alpha_pow(a, i);
    }

    const NormalBasisCtx& ctx() const
        requires ShiftTableBackend<F>
    {
        return base_.ctx();
    }

private:
    F base_;
    OpCounts* c_;
};

using CountedPolyField = Counted<PolyField>;
using CountedNormalField = Counted<NormalField>;

}  // namespace rankdec
