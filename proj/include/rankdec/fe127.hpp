#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

// Element storage shared by both basis representations of GF(2^127):
// 127 GF(2) coordinates packed into two 64-bit limbs.  Coordinate i lives
// at bit i of the pair (lo holds 0..63, hi holds 64..126).  Bit 63 of hi
// is kept zero by every public operation.

namespace rankdec {

inline constexpr int kExtDegree = 127;
inline constexpr std::uint64_t kHiMask = 0x7fffffffffffffffULL;

struct poly_basis_tag {};
struct normal_basis_tag {};

template <class BasisTag>
struct Coords127 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    friend bool operator==(const Coords127&, const Coords127&) = default;
};

using PolyElem = Coords127<poly_basis_tag>;
using NormalElem = Coords127<normal_basis_tag>;

template <class T>
inline bool coords_is_zero(const Coords127<T>& a) {
    return (a.lo | a.hi) == 0;
}

template <class T>
inline bool coords_get_bit(const Coords127<T>& a, int i) {
    return i < 64 ? (a.lo >> i) & 1 : (a.hi >> (i - 64)) & 1;
}

template <class T>
inline void coords_set_bit(Coords127<T>& a, int i, bool v) {
    if (i < 64) {
        a.lo = (a.lo & ~(1ULL << i)) | (std::uint64_t(v) << i);
    } else {
        a.hi = (a.hi & ~(1ULL << (i - 64))) | (std::uint64_t(v) << (i - 64));
    }
}

// 32 hex digits, high limb first; the interchange format for test vectors.
template <class T>
inline std::string to_hex(const Coords127<T>& a) {
    static const char* digits = "0123456789abcdef";
    std::string s(32, '0');
    for (int i = 0; i < 16; ++i) {
        s[15 - i] = digits[(a.hi >> (4 * i)) & 0xf];
        s[31 - i] = digits[(a.lo >> (4 * i)) & 0xf];
    }
    return s;
}

template <class T>
inline Coords127<T> from_hex(const std::string& s) {
    if (s.size() != 32) throw std::invalid_argument("field element hex must be 32 digits");
    auto nibble = [](char c) -> std::uint64_t {
        if (c >= '0' && c <= '9') return std::uint64_t(c - '0');
        if (c >= 'a' && c <= 'f') return std::uint64_t(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return std::uint64_t(c - 'A' + 10);
        throw std::invalid_argument("bad hex digit in field element");
    };
    Coords127<T> a;
    for (int i = 0; i < 16; ++i) {
        a.hi = (a.hi << 4) | nibble(s[i]);
        a.lo = (a.lo << 4) | nibble(s[16 + i]);
    }
    if (a.hi & ~kHiMask) throw std::invalid_argument("field element exceeds 127 bits");
    return a;
}

template <class T>
inline Coords127<T> random_coords(std::mt19937_64& rng) {
    Coords127<T> a;
    a.lo = rng();
    a.hi = rng() & kHiMask;
    return a;
}

template <class T>
inline Coords127<T> random_nonzero_coords(std::mt19937_64& rng) {
    Coords127<T> a = random_coords<T>(rng);
    while (coords_is_zero(a)) a = random_coords<T>(rng);
    return a;
}

}  // namespace rankdec
