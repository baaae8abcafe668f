#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rankdec/fe127.hpp"
#include "rankdec/gf127_poly.hpp"
#include "rankdec/gf2.hpp"

// GF(2^127) in a low-complexity self-dual normal basis {a^[0],...,a^[126]}.
// Coordinate i of an element refers to a^[i]; q-powers are cyclic
// coordinate shifts.  Multiplication works on precomputed shift tables and
// the sparse multiplication-by-alpha table M.

namespace rankdec {

// cyclic coordinate shift upward by j in [1,63] (q-power), top bit left dirty
inline NormalElem nb_shift_up_raw(NormalElem a, int j) {
    NormalElem b;
    b.lo = (a.lo << j) | (a.hi >> (63 - j));
    b.hi = (a.hi << j) | (a.lo >> (64 - j));
    return b;
}

// cyclic coordinate shift downward by k in [1,63], top bit left dirty
inline NormalElem nb_shift_down_raw(NormalElem a, int k) {
    NormalElem b;
    b.lo = (a.lo >> k) | (a.hi << (64 - k));
    b.hi = (a.hi >> k) | (a.lo << (63 - k));
    return b;
}

// a^(q^i) without the final top-bit mask (for shift tables)
inline NormalElem nb_qpow_raw(NormalElem a, int i) {
    int j = i % kExtDegree;
    if (j < 0) j += kExtDegree;
    if (j == 0) return a;
    if (j <= 63) return nb_shift_up_raw(a, j);
    return nb_shift_down_raw(a, kExtDegree - j);
}

inline NormalElem nb_qpow(NormalElem a, int i) {
    NormalElem b = nb_qpow_raw(a, i);
    b.hi &= kHiMask;
    return b;
}

inline NormalElem nb_add(NormalElem a, NormalElem b) {
    return NormalElem{a.lo ^ b.lo, a.hi ^ b.hi};
}

// all m q-powers of one operand; entry i holds a^[m-i] with masking deferred
struct ShiftTable {
    std::array<NormalElem, kExtDegree> t;

    const NormalElem& operator[](int i) const { return t[i]; }
};

inline ShiftTable nb_make_shift_table(NormalElem a) {
    ShiftTable st;
    st.t[0] = a;
    for (int i = 1; i < kExtDegree; ++i) st.t[i] = nb_qpow_raw(a, kExtDegree - i);
    return st;
}

// Multiplication table M of the basis plus everything derived from it.
// M is the matrix of multiplication by alpha on normal coordinates; for a
// self-dual basis M_{r,c} = Tr(alpha * a^[r] * a^[c]) and M is symmetric.
struct NormalBasisCtx {
    int m = kExtDegree;
    int complexity = 0;  // C_M, number of nonzero entries of M
    bool self_dual = false;
    PolyElem alpha;  // polynomial-basis representation of the normal element

    std::vector<std::pair<std::uint8_t, std::uint8_t>> mult_pairs;  // sorted (row, col)

    // derived, rebuilt on load
    std::array<std::uint16_t, kExtDegree + 1> row_begin{};  // offsets into flat_cols per row
    std::vector<std::uint8_t> flat_cols;
    std::array<NormalElem, kExtDegree> row_mask{};    // row r as a 127-bit column mask
    std::array<PolyElem, kExtDegree> to_poly_row{};   // row i: poly coords of a^[i]
    std::array<NormalElem, kExtDegree> from_poly_row{};

    void rebuild_derived();

    NormalElem to_normal(PolyElem p) const {
        NormalElem a;
        for (int j = 0; j < kExtDegree; ++j)
            if (coords_get_bit(p, j)) a = nb_add(a, from_poly_row[j]);
        return a;
    }

    PolyElem to_poly(NormalElem a) const {
        PolyElem p;
        for (int i = 0; i < kExtDegree; ++i)
            if (coords_get_bit(a, i)) p = poly_add(p, to_poly_row[i]);
        return p;
    }
};

inline void NormalBasisCtx::rebuild_derived() {
    complexity = int(mult_pairs.size());
    flat_cols.clear();
    flat_cols.reserve(mult_pairs.size());
    for (auto& e : row_mask) e = NormalElem{};
    std::size_t idx = 0;
    for (int r = 0; r < kExtDegree; ++r) {
        row_begin[r] = std::uint16_t(flat_cols.size());
        while (idx < mult_pairs.size() && mult_pairs[idx].first == r) {
            flat_cols.push_back(mult_pairs[idx].second);
            coords_set_bit(row_mask[r], mult_pairs[idx].second, true);
            ++idx;
        }
    }
    row_begin[kExtDegree] = std::uint16_t(flat_cols.size());
    if (idx != mult_pairs.size())
        throw std::runtime_error("multiplication table pairs not sorted by row");

    // conversion matrices from the q-powers of alpha
    to_poly_row[0] = alpha;
    for (int i = 1; i < kExtDegree; ++i) to_poly_row[i] = poly_square(to_poly_row[i - 1]);
    BitMat b(kExtDegree, kExtDegree);
    for (int i = 0; i < kExtDegree; ++i) b.row(i) = coords_to_bits(to_poly_row[i]);
    BitMat binv = b.inverted();
    for (int j = 0; j < kExtDegree; ++j)
        from_poly_row[j] = bits_to_coords<normal_basis_tag>(binv.row(j));
}

// Shift-table product with cyclic offsets: computes x*y for x = a^[oa],
// y = b^[ob] given the tables of a and b.  The single mask application
// happens here.
inline NormalElem nb_mul_shift_tables(const ShiftTable& ta, int oa, const ShiftTable& tb, int ob,
                                      const NormalBasisCtx& ctx) {
    NormalElem acc{};
    int ia = (0 - oa % kExtDegree + kExtDegree) % kExtDegree;
    for (int r = 0; r < kExtDegree; ++r) {
        NormalElem inner{};
        for (int f = ctx.row_begin[r]; f < ctx.row_begin[r + 1]; ++f) {
            int ib = ctx.flat_cols[f] - ob;
            if (ib < 0) ib += kExtDegree;
            inner.lo ^= tb[ib].lo;
            inner.hi ^= tb[ib].hi;
        }
        acc.lo ^= ta[ia].lo & inner.lo;
        acc.hi ^= ta[ia].hi & inner.hi;
        if (++ia == kExtDegree) ia = 0;
    }
    acc.hi &= kHiMask;
    return acc;
}

inline NormalElem nb_mul_shift_tables(const ShiftTable& ta, const ShiftTable& tb,
                                      const NormalBasisCtx& ctx) {
    return nb_mul_shift_tables(ta, 0, tb, 0, ctx);
}

inline NormalElem nb_mul(NormalElem a, NormalElem b, const NormalBasisCtx& ctx) {
    ShiftTable ta = nb_make_shift_table(a);
    ShiftTable tb = nb_make_shift_table(b);
    return nb_mul_shift_tables(ta, 0, tb, 0, ctx);
}

// a * alpha^[i] via b = (M a^{<-i})^{->i}; only the nonzero rows of M are
// touched, using per-row column masks.
inline NormalElem nb_mul_alpha_pow(NormalElem a, int i, const NormalBasisCtx& ctx) {
    NormalElem ash = nb_qpow(a, kExtDegree - i);
    NormalElem v{};
    for (int r = 0; r < kExtDegree; ++r) {
        const NormalElem& m = ctx.row_mask[r];
        int p = std::popcount(ash.lo & m.lo) + std::popcount(ash.hi & m.hi);
        if (p & 1) coords_set_bit(v, r, true);
    }
    return nb_qpow(v, i);
}

// Chained-Frobenius inversion: nine multiplications, ten q-powers.
// Written against the backend so that an instrumented backend sees every
// primitive call.
template <class F>
typename F::Elem nb_invert_chain(const F& f, typename F::Elem a) {
    if (f.is_zero(a)) throw std::domain_error("inverse of zero");
    using E = typename F::Elem;

    ShiftTable t_a = f.make_table(a);
    E b1 = f.qpow(a, 1);
    ShiftTable t_b1 = f.make_table(b1);
    E a1 = f.mul_tables(t_a, 0, t_b1, 0);  // a * a^[1]

    E c2 = f.qpow(a1, 2);
    E c4 = f.qpow(a1, 4);
    E b2 = f.qpow(a, 1);
    ShiftTable t_b2 = f.make_table(b2);
    ShiftTable t_c2 = f.make_table(c2);
    E t = f.mul_tables(t_b2, 0, t_c2, 0);  // a^[1] * a1^[2]
    ShiftTable t_t = f.make_table(t);
    ShiftTable t_c4 = f.make_table(c4);
    E a2 = f.mul_tables(t_t, 0, t_c4, 0);  // ... * a1^[4]

    ShiftTable t_a2 = f.make_table(a2);
    E c5 = f.qpow(a2, 5);
    ShiftTable t_c5 = f.make_table(c5);
    E a3 = f.mul_tables(t_a2, 0, t_c5, 0);  // a2 * a2^[5]

    ShiftTable t_a3 = f.make_table(a3);
    E c10 = f.qpow(a3, 10);
    E u = f.mul_tables(t_a, 0, t_a3, 0);  // a * a3, reusing the table of a
    ShiftTable t_u = f.make_table(u);
    ShiftTable t_c10 = f.make_table(c10);
    E a4 = f.mul_tables(t_u, 0, t_c10, 0);  // ... * a3^[10]

    ShiftTable t_a4 = f.make_table(a4);
    E c21 = f.qpow(a4, 21);
    E c42 = f.qpow(a4, 42);
    ShiftTable t_c21 = f.make_table(c21);
    E v = f.mul_tables(t_a4, 0, t_c21, 0);  // a4 * a4^[21]
    ShiftTable t_v = f.make_table(v);
    ShiftTable t_c42 = f.make_table(c42);
    E a5 = f.mul_tables(t_v, 0, t_c42, 0);  // ... * a4^[42]

    ShiftTable t_a5 = f.make_table(a5);
    E c63 = f.qpow(a5, 63);
    ShiftTable t_c63 = f.make_table(c63);
    E w = f.mul_tables(t_a5, 0, t_c63, 0);  // a5 * a5^[63]

    return f.qpow(w, 1);
}

class NormalField {
public:
    using Elem = NormalElem;

    explicit NormalField(const NormalBasisCtx& ctx) : ctx_(&ctx) {}

    const NormalBasisCtx& ctx() const { return *ctx_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return Elem{~0ULL, kHiMask}; }  // all-ones coordinate vector
    bool is_zero(Elem a) const { return coords_is_zero(a); }

    Elem add(Elem a, Elem b) const { return nb_add(a, b); }
    Elem square(Elem a) const { return nb_qpow(a, 1); }
    Elem qpow(Elem a, int i) const { return nb_qpow(a, i); }
    Elem mul(Elem a, Elem b) const { return nb_mul(a, b, *ctx_); }
    Elem inv(Elem a) const { return nb_invert_chain(*this, a); }

    ShiftTable make_table(Elem a) const { return nb_make_shift_table(a); }
    Elem mul_tables(const ShiftTable& ta, int oa, const ShiftTable& tb, int ob) const {
        return nb_mul_shift_tables(ta, oa, tb, ob, *ctx_);
    }
    Elem mul_alpha_pow(Elem a, int i) const { return nb_mul_alpha_pow(a, i, *ctx_); }

    Elem random(std::mt19937_64& rng) const { return random_coords<normal_basis_tag>(rng); }

private:
    const NormalBasisCtx* ctx_;
};

// ---- context file format ------------------------------------------------
//
//   gf127-normal-basis-ctx v1
//   m 127
//   cm <C_M>
//   selfdual <0|1>
//   alpha <32 hex digits>
//   table <C_M entries "row:col" separated by spaces, sorted>
//   checksum <8 hex digits>
//
// The checksum is FNV-1a over every preceding line including newlines.

namespace detail {

inline std::uint32_t fnv1a(const std::string& s) {
    std::uint32_t h = 2166136261u;
    for (unsigned char c : s) {
        h ^= c;
        h *= 16777619u;
    }
    return h;
}

}  // namespace detail

inline std::string nb_ctx_serialize(const NormalBasisCtx& ctx) {
    std::ostringstream os;
    os << "gf127-normal-basis-ctx v1\n";
    os << "m " << ctx.m << "\n";
    os << "cm " << ctx.complexity << "\n";
    os << "selfdual " << (ctx.self_dual ? 1 : 0) << "\n";
    os << "alpha " << to_hex(ctx.alpha) << "\n";
    os << "table";
    for (auto [r, c] : ctx.mult_pairs) os << " " << int(r) << ":" << int(c);
    os << "\n";
    std::string body = os.str();
    std::uint32_t h = detail::fnv1a(body);
    std::ostringstream full;
    full << body << "checksum " << std::hex << h << "\n";
    return full.str();
}

inline NormalBasisCtx nb_ctx_parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string body;
    NormalBasisCtx ctx;
    bool saw_header = false, saw_alpha = false, saw_table = false, saw_checksum = false;
    int cm_declared = -1;
    while (std::getline(is, line)) {
        if (line.rfind("checksum ", 0) == 0) {
            std::uint32_t stored = std::uint32_t(std::stoul(line.substr(9), nullptr, 16));
            if (stored != detail::fnv1a(body))
                throw std::runtime_error("normal basis ctx: checksum mismatch");
            saw_checksum = true;
            break;
        }
        body += line;
        body += '\n';
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "gf127-normal-basis-ctx") {
            std::string ver;
            ls >> ver;
            if (ver != "v1") throw std::runtime_error("normal basis ctx: unsupported version " + ver);
            saw_header = true;
        } else if (key == "m") {
            int m;
            ls >> m;
            if (m != kExtDegree) throw std::runtime_error("normal basis ctx: unexpected extension degree");
        } else if (key == "cm") {
            ls >> cm_declared;
        } else if (key == "selfdual") {
            int sd;
            ls >> sd;
            ctx.self_dual = sd != 0;
        } else if (key == "alpha") {
            std::string hex;
            ls >> hex;
            ctx.alpha = from_hex<poly_basis_tag>(hex);
            saw_alpha = true;
        } else if (key == "table") {
            std::string ent;
            while (ls >> ent) {
                auto colon = ent.find(':');
                if (colon == std::string::npos)
                    throw std::runtime_error("normal basis ctx: bad table entry " + ent);
                int r = std::stoi(ent.substr(0, colon));
                int c = std::stoi(ent.substr(colon + 1));
                if (r < 0 || r >= kExtDegree || c < 0 || c >= kExtDegree)
                    throw std::runtime_error("normal basis ctx: table entry out of range");
                ctx.mult_pairs.emplace_back(std::uint8_t(r), std::uint8_t(c));
            }
            saw_table = true;
        }
    }
    if (!saw_header || !saw_alpha || !saw_table || !saw_checksum)
        throw std::runtime_error("normal basis ctx: incomplete file");
    ctx.rebuild_derived();
    if (cm_declared != ctx.complexity)
        throw std::runtime_error("normal basis ctx: declared C_M does not match table");
    return ctx;
}

}  // namespace rankdec
