#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rankdec/bench.hpp"
#include "rankdec/counting.hpp"
#include "rankdec/gf127_normal.hpp"

using namespace rankdec;

namespace {

const NormalBasisCtx& ctx() { return default_ctx(); }

NormalElem unit(int i) {
    NormalElem e;
    coords_set_bit(e, i, true);
    return e;
}

}  // namespace

TEST_CASE("shipped context basics") {
    CHECK(ctx().m == 127);
    CHECK(ctx().complexity == 501);
    CHECK(ctx().self_dual);
    CHECK(ctx().complexity >= 2 * 127 - 1);
    // conversion matrices invert each other on all unit vectors
    for (int i = 0; i < 127; ++i) {
        CHECK(ctx().to_normal(ctx().to_poly(unit(i))) == unit(i));
        PolyElem p;
        coords_set_bit(p, i, true);
        CHECK(ctx().to_poly(ctx().to_normal(p)) == p);
    }
}

TEST_CASE("self-duality holds as trace orthogonality") {
    // Tr(a^[i] a^[j]) = Tr(a a^[j-i]); checking one row of shifts covers all
    PolyElem alpha = ctx().alpha;
    PolyElem conj = alpha;
    for (int l = 0; l < 127; ++l) {
        CHECK(poly_trace(poly_mul(alpha, conj)) == (l == 0));
        conj = poly_square(conj);
    }
}

TEST_CASE("addition") {
    std::mt19937_64 rng(1);
    NormalField f(ctx());
    NormalElem a = random_coords<normal_basis_tag>(rng);
    CHECK(nb_add(a, a) == NormalElem{});
    CHECK(nb_add(a, NormalElem{}) == a);
    CHECK(nb_add(f.one(), f.one()) == NormalElem{});
}

TEST_CASE("q-power is a cyclic coordinate shift") {
    std::mt19937_64 rng(2);
    NormalElem a = random_coords<normal_basis_tag>(rng);
    CHECK(nb_qpow(a, 0) == a);
    CHECK(nb_qpow(a, 127) == a);
    CHECK(nb_qpow(a, -1) == nb_qpow(a, 126));
    for (int j = 0; j < 127; ++j)
        for (int i : {1, 5, 63, 64, 100, 126})
            CHECK(nb_qpow(unit(j), i) == unit((j + i) % 127));
    // composition of shifts
    CHECK(nb_qpow(nb_qpow(a, 40), 87) == a);
}

TEST_CASE("shift table entries") {
    std::mt19937_64 rng(3);
    NormalElem a = random_coords<normal_basis_tag>(rng);
    ShiftTable t = nb_make_shift_table(a);

    NormalElem e0 = t[0];
    e0.hi &= kHiMask;
    CHECK(e0 == a);

    // table of the normal element itself: entry i is e_{(m-i) mod m}
    ShiftTable ta = nb_make_shift_table(unit(0));
    for (int i = 0; i < 127; ++i) {
        NormalElem v = ta[i];
        v.hi &= kHiMask;
        CHECK(v == unit((127 - i) % 127));
    }

    // re-masking entry i and shifting back up recovers a
    for (int i = 0; i < 127; ++i) {
        NormalElem v = t[i];
        v.hi &= kHiMask;
        CHECK(nb_qpow(v, i) == a);
    }
}

TEST_CASE("multiplication against the cross-basis oracle") {
    std::mt19937_64 rng(4);
    NormalField f(ctx());
    NormalElem a = random_coords<normal_basis_tag>(rng);
    CHECK(f.mul(a, f.one()) == a);

    for (int i = 0; i < 1000; ++i) {
        NormalElem x = random_coords<normal_basis_tag>(rng);
        NormalElem y = random_coords<normal_basis_tag>(rng);
        CHECK(f.mul(x, y) == oracle::cross_basis_mul(ctx(), x, y));
    }

    // products of basis elements through the polynomial basis
    for (int i : {0, 1, 17}) {
        for (int j : {0, 3, 126}) {
            PolyElem want = poly_mul(ctx().to_poly(unit(i)), ctx().to_poly(unit(j)));
            CHECK(ctx().to_poly(f.mul(unit(i), unit(j))) == want);
        }
    }
}

TEST_CASE("table product accepts cyclic offsets") {
    std::mt19937_64 rng(5);
    NormalField f(ctx());
    NormalElem a = random_coords<normal_basis_tag>(rng);
    NormalElem b = random_coords<normal_basis_tag>(rng);
    ShiftTable ta = f.make_table(a);
    ShiftTable tb = f.make_table(b);
    for (int oa : {0, 1, 50}) {
        for (int ob : {0, 99}) {
            NormalElem want = f.mul(nb_qpow(a, oa), nb_qpow(b, ob));
            CHECK(f.mul_tables(ta, oa, tb, ob) == want);
        }
    }
}

TEST_CASE("multiplication by powers of the normal element") {
    std::mt19937_64 rng(6);
    NormalField f(ctx());
    // 1 * a^[i] = a^[i]
    for (int i = 0; i < 127; ++i) CHECK(f.mul_alpha_pow(f.one(), i) == unit(i));
    // agreement with the generic product on random inputs
    for (int t = 0; t < 1000; ++t) {
        NormalElem a = random_coords<normal_basis_tag>(rng);
        int i = int(rng() % 127);
        CHECK(f.mul_alpha_pow(a, i) == f.mul(a, unit(i)));
    }
    // row pattern of M on basis vectors at i = 0
    for (int j : {0, 1, 60, 126}) {
        NormalElem got = f.mul_alpha_pow(unit(j), 0);
        NormalElem want{};
        for (auto [r, c] : ctx().mult_pairs)
            if (c == j) coords_set_bit(want, r, !coords_get_bit(want, r));
        CHECK(got == want);
    }
}

TEST_CASE("field axioms in normal coordinates") {
    std::mt19937_64 rng(7);
    NormalField f(ctx());
    for (int i = 0; i < 10000; ++i) {
        NormalElem a = random_coords<normal_basis_tag>(rng);
        NormalElem b = random_coords<normal_basis_tag>(rng);
        NormalElem c = random_coords<normal_basis_tag>(rng);
        CHECK(nb_add(nb_add(a, b), c) == nb_add(a, nb_add(b, c)));
        CHECK(f.mul(a, b) == f.mul(b, a));
        if (i < 2000) {
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, nb_add(b, c)) == nb_add(f.mul(a, b), f.mul(a, c)));
        }
    }
}

TEST_CASE("frobenius compatibility and squaring") {
    std::mt19937_64 rng(8);
    NormalField f(ctx());
    for (int i = 0; i < 1000; ++i) {
        NormalElem a = random_coords<normal_basis_tag>(rng);
        NormalElem b = random_coords<normal_basis_tag>(rng);
        CHECK(nb_qpow(f.mul(a, b), 1) == f.mul(nb_qpow(a, 1), nb_qpow(b, 1)));
        CHECK(nb_qpow(a, 1) == f.mul(a, a));
    }
}

TEST_CASE("cross-basis homomorphism") {
    std::mt19937_64 rng(9);
    NormalField f(ctx());
    for (int i = 0; i < 1000; ++i) {
        NormalElem a = random_coords<normal_basis_tag>(rng);
        NormalElem b = random_coords<normal_basis_tag>(rng);
        CHECK(ctx().to_poly(f.mul(a, b)) == poly_mul(ctx().to_poly(a), ctx().to_poly(b)));
        CHECK(ctx().to_poly(nb_add(a, b)) == poly_add(ctx().to_poly(a), ctx().to_poly(b)));
    }
}

TEST_CASE("inversion chain") {
    std::mt19937_64 rng(10);
    NormalField f(ctx());
    CHECK(f.inv(f.one()) == f.one());
    CHECK_THROWS_AS(f.inv(NormalElem{}), std::domain_error);

    // alpha itself through the polynomial basis
    CHECK(ctx().to_poly(f.inv(unit(0))) == poly_inv(ctx().to_poly(unit(0))));

    for (int i = 0; i < 200; ++i) {
        NormalElem a = random_nonzero_coords<normal_basis_tag>(rng);
        CHECK(f.mul(a, f.inv(a)) == f.one());
    }
}

TEST_CASE("inversion cost: nine multiplications, ten q-powers") {
    std::mt19937_64 rng(11);
    OpCounts c;
    NormalField base(ctx());
    Counted<NormalField> f(base, c);
    (void)f.inv(random_nonzero_coords<normal_basis_tag>(rng));
    CHECK(c.invert == 1);
    CHECK(c.multiply_shift_tables == 9);
    CHECK(c.q_power == 10);
}

TEST_CASE("context serialization") {
    std::string text = nb_ctx_serialize(ctx());
    NormalBasisCtx back = nb_ctx_parse(text);
    CHECK(back.complexity == ctx().complexity);
    CHECK(back.alpha == ctx().alpha);
    CHECK(back.mult_pairs == ctx().mult_pairs);
    CHECK(back.self_dual == ctx().self_dual);

    // checksum guards corruption
    std::string corrupted = text;
    auto pos = corrupted.find("selfdual 1");
    REQUIRE(pos != std::string::npos);
    corrupted[pos + 9] = '0';
    CHECK_THROWS_WITH(nb_ctx_parse(corrupted), Catch::Matchers::ContainsSubstring("checksum"));

    CHECK_THROWS_AS(nb_ctx_parse("gf127-normal-basis-ctx v1\n"), std::runtime_error);
}
