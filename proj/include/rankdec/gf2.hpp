#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rankdec/fe127.hpp"

// Dense bit vectors/matrices over GF(2) for basis construction, code
// generation and rank computations.  Sizes here are at most a few hundred
// bits, so a plain word-packed representation is enough.

namespace rankdec {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int nbits) : bits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return bits_; }

    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        std::uint64_t m = 1ULL << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= 1ULL << (i & 63); }

    void xor_with(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    }

    bool is_zero() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    int popcount() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    int bits_ = 0;
    std::vector<std::uint64_t> w_;
};

template <class T>
inline BitVec coords_to_bits(const Coords127<T>& a) {
    BitVec v(kExtDegree);
    for (int i = 0; i < kExtDegree; ++i)
        if (coords_get_bit(a, i)) v.set(i, true);
    return v;
}

template <class T>
inline Coords127<T> bits_to_coords(const BitVec& v) {
    Coords127<T> a;
    for (int i = 0; i < kExtDegree; ++i)
        if (v.get(i)) coords_set_bit(a, i, true);
    return a;
}

class BitMat {
public:
    BitMat() = default;
    BitMat(int rows, int cols) : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

    static BitMat identity(int n) {
        BitMat m(n, n);
        for (int i = 0; i < n; ++i) m.r_[i].set(i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BitVec& row(int i) { return r_[i]; }
    const BitVec& row(int i) const { return r_[i]; }

    bool get(int i, int j) const { return r_[i].get(j); }
    void set(int i, int j, bool v) { r_[i].set(j, v); }

    BitMat transposed() const {
        BitMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    int rank() const {
        std::vector<BitVec> rows = r_;
        int rk = 0;
        for (int col = 0; col < cols_ && rk < rows_; ++col) {
            int p = -1;
            for (int i = rk; i < rows_; ++i)
                if (rows[i].get(col)) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(rows[rk], rows[p]);
            for (int i = 0; i < rows_; ++i)
                if (i != rk && rows[i].get(col)) rows[i].xor_with(rows[rk]);
            ++rk;
        }
        return rk;
    }

    // Inverse of a square matrix; throws if singular.
    BitMat inverted() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square bit matrix");
        std::vector<BitVec> a = r_;
        BitMat inv = identity(rows_);
        for (int col = 0; col < cols_; ++col) {
            int p = -1;
            for (int i = col; i < rows_; ++i)
                if (a[i].get(col)) {
                    p = i;
                    break;
                }
            if (p < 0) throw std::runtime_error("singular bit matrix");
            std::swap(a[col], a[p]);
            std::swap(inv.r_[col], inv.r_[p]);
            for (int i = 0; i < rows_; ++i) {
                if (i != col && a[i].get(col)) {
                    a[i].xor_with(a[col]);
                    inv.r_[i].xor_with(inv.r_[col]);
                }
            }
        }
        return inv;
    }

    // X with X*this = identity; requires full column rank.
    BitMat left_inverse() const {
        std::vector<BitVec> a = r_;
        BitMat e = identity(rows_);
        std::vector<int> pivot_row(cols_, -1);
        int rk = 0;
        for (int col = 0; col < cols_; ++col) {
            int p = -1;
            for (int i = rk; i < rows_; ++i)
                if (a[i].get(col)) {
                    p = i;
                    break;
                }
            if (p < 0) throw std::runtime_error("bit matrix does not have full column rank");
            std::swap(a[rk], a[p]);
            std::swap(e.r_[rk], e.r_[p]);
            for (int i = 0; i < rows_; ++i) {
                if (i != rk && a[i].get(col)) {
                    a[i].xor_with(a[rk]);
                    e.r_[i].xor_with(e.r_[rk]);
                }
            }
            pivot_row[col] = rk;
            ++rk;
        }
        BitMat x(cols_, rows_);
        for (int col = 0; col < cols_; ++col) x.r_[col] = e.r_[pivot_row[col]];
        return x;
    }

    BitMat times(const BitMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("bit matrix shape mismatch");
        BitMat c(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int t = 0; t < cols_; ++t)
                if (get(i, t)) c.r_[i].xor_with(o.r_[t]);
        return c;
    }

    BitVec times(const BitVec& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("bit matrix/vector shape mismatch");
        BitVec out(rows_);
        for (int i = 0; i < rows_; ++i) {
            // row.v as parity of the AND
            int acc = 0;
            for (int j = 0; j < cols_; ++j) acc ^= int(r_[i].get(j) & v.get(j));
            out.set(i, acc);
        }
        return out;
    }

    friend bool operator==(const BitMat&, const BitMat&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BitVec> r_;
};

// GF(2) rank of a list of field-element coordinate vectors.
template <class T>
inline int gf2_rank_of(const std::vector<Coords127<T>>& elems) {
    BitMat m(int(elems.size()), kExtDegree);
    for (std::size_t i = 0; i < elems.size(); ++i) m.row(int(i)) = coords_to_bits(elems[i]);
    return m.rank();
}

}  // namespace rankdec
