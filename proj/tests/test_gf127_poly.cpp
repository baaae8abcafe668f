#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rankdec/gf127_poly.hpp"

using namespace rankdec;

namespace {
const PolyElem kOne{1, 0};
const PolyElem kX{2, 0};
}  // namespace

TEST_CASE("addition is xor of limbs") {
    std::mt19937_64 rng(1);
    PolyElem a = random_coords<poly_basis_tag>(rng);
    CHECK(poly_add(a, a) == PolyElem{});
    CHECK(poly_add(a, PolyElem{}) == a);
    CHECK(poly_add(PolyElem{3, 0}, PolyElem{5, 0}) == PolyElem{6, 0});
}

TEST_CASE("multiplication identities") {
    std::mt19937_64 rng(2);
    PolyElem a = random_coords<poly_basis_tag>(rng);
    CHECK(poly_mul(a, kOne) == a);

    // x^126 * x = x + 1, forced by the trinomial
    PolyElem x126{0, 1ULL << 62};
    CHECK(poly_mul(x126, kX) == PolyElem{3, 0});
}

TEST_CASE("reduction identity endpoints") {
    UnreducedProduct u;
    u.w[1] = 1ULL << 63;  // x^127
    CHECK(poly_reduce(u) == PolyElem{3, 0});

    u = UnreducedProduct{};
    u.w[3] = 1ULL << 60;  // x^252
    CHECK(poly_reduce(u) == PolyElem{0, (1ULL << 62) | (1ULL << 61)});

    // already-reduced inputs pass through
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        PolyElem a = random_coords<poly_basis_tag>(rng);
        UnreducedProduct v;
        v.w[0] = a.lo;
        v.w[1] = a.hi;
        CHECK(poly_reduce(v) == a);
    }
}

TEST_CASE("squaring via interleave table") {
    CHECK(poly_square(PolyElem{}) == PolyElem{});
    CHECK(poly_square(kOne) == kOne);
    CHECK(poly_square(PolyElem{3, 0}) == PolyElem{5, 0});       // (x+1)^2 = x^2+1
    CHECK(poly_square(PolyElem{0, 1}) == PolyElem{6, 0});       // (x^64)^2 = x^2+x

    std::mt19937_64 rng(4);
    for (int i = 0; i < 10000; ++i) {
        PolyElem a = random_coords<poly_basis_tag>(rng);
        PolyElem b = random_coords<poly_basis_tag>(rng);
        CHECK(poly_square(a) == poly_mul(a, a));
        CHECK(poly_square(poly_add(a, b)) == poly_add(poly_square(a), poly_square(b)));
    }
}

TEST_CASE("inversion") {
    CHECK(poly_inv(kOne) == kOne);
    // x * (x^126 + 1) = x^127 + x = 1
    CHECK(poly_inv(kX) == PolyElem{1, 1ULL << 62});
    CHECK_THROWS_AS(poly_inv(PolyElem{}), std::domain_error);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        PolyElem a = random_nonzero_coords<poly_basis_tag>(rng);
        CHECK(poly_mul(a, poly_inv(a)) == kOne);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 10000; ++i) {
        PolyElem a = random_coords<poly_basis_tag>(rng);
        PolyElem b = random_coords<poly_basis_tag>(rng);
        PolyElem c = random_coords<poly_basis_tag>(rng);
        CHECK(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
        CHECK(poly_mul(a, b) == poly_mul(b, a));
    }
}

TEST_CASE("comb multiplication matches the schoolbook oracle") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        PolyElem a = random_coords<poly_basis_tag>(rng);
        PolyElem b = random_coords<poly_basis_tag>(rng);
        CHECK(poly_mul(a, b) == oracle::schoolbook_mul(a, b));
    }
}

TEST_CASE("top bit stays clear") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 2000; ++i) {
        PolyElem a = random_coords<poly_basis_tag>(rng);
        PolyElem b = random_coords<poly_basis_tag>(rng);
        CHECK((poly_mul(a, b).hi & ~kHiMask) == 0);
        CHECK((poly_square(a).hi & ~kHiMask) == 0);
        CHECK((poly_add(a, b).hi & ~kHiMask) == 0);
        if (!coords_is_zero(a)) CHECK((poly_inv(a).hi & ~kHiMask) == 0);
    }
}

TEST_CASE("hex serialization round trip") {
    std::mt19937_64 rng(9);
    PolyElem a = random_coords<poly_basis_tag>(rng);
    CHECK(from_hex<poly_basis_tag>(to_hex(a)) == a);
    CHECK(to_hex(kOne) == "00000000000000000000000000000001");
    CHECK_THROWS_AS(from_hex<poly_basis_tag>("zz"), std::invalid_argument);
    // 2^127 would need the forbidden top bit
    CHECK_THROWS_AS(from_hex<poly_basis_tag>("80000000000000000000000000000000"),
                    std::invalid_argument);
}

TEST_CASE("q-powers are iterated squarings") {
    std::mt19937_64 rng(10);
    PolyElem a = random_coords<poly_basis_tag>(rng);
    CHECK(poly_qpow(a, 0) == a);
    CHECK(poly_qpow(a, 1) == poly_square(a));
    CHECK(poly_qpow(a, 127) == a);  // Frobenius order
    CHECK(poly_qpow(poly_qpow(a, 93), 127 - 93) == a);
}
