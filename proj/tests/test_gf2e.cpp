#include "sprank/gf2e.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace sprank;

TEST_CASE("modulus choice is the smallest irreducible with constant term") {
    CHECK(make_field(1).modulus() == 0b11u);        // x + 1
    CHECK(make_field(2).modulus() == 0b111u);       // x^2 + x + 1
    CHECK(make_field(3).modulus() == 0b1011u);      // x^3 + x + 1
    CHECK(make_field(4).modulus() == 0b10011u);     // x^4 + x + 1
    CHECK(make_field(2).q() == 4u);
    CHECK(make_field(3).q() == 8u);
}

TEST_CASE("degree bounds") {
    CHECK_THROWS_AS(make_field(0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(17), std::invalid_argument);
    CHECK_NOTHROW(make_field(16));
}

TEST_CASE("every nonzero element of GF(8) has e^7 = 1") {
    const FieldCtx f = make_field(3);
    for (Fel e = 1; e < 8; ++e) CHECK(f.pow(e, 7) == 1);
}

TEST_CASE("characteristic two and identities") {
    for (int t = 1; t <= 4; ++t) {
        const FieldCtx f = make_field(t);
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            CHECK(FieldCtx::add(static_cast<Fel>(a), static_cast<Fel>(a)) == 0);
            CHECK(f.mul(1, static_cast<Fel>(a)) == static_cast<Fel>(a));
        }
    }
}

TEST_CASE("GF(4): x * x = x + 1 under x^2+x+1") {
    const FieldCtx f = make_field(2);
    CHECK(f.mul(0b10, 0b10) == 0b11);
}

TEST_CASE("field axioms, exhaustively for q <= 16") {
    for (int t = 1; t <= 4; ++t) {
        const FieldCtx f = make_field(t);
        const Fel q = static_cast<Fel>(f.q());
        for (Fel a = 0; a < q; ++a) {
            for (Fel b = 0; b < q; ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (Fel c = 0; c < q; ++c) {
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, FieldCtx::add(b, c)) ==
                          FieldCtx::add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // Frobenius fixed point: t-fold squaring is the identity (a^q = a).
        for (Fel a = 0; a < q; ++a) {
            Fel v = a;
            for (int k = 0; k < t; ++k) v = f.mul(v, v);
            CHECK(v == a);
        }
    }
}

TEST_CASE("inverses") {
    for (int t : {1, 2, 3, 4, 8}) {
        const FieldCtx f = make_field(t);
        for (std::uint32_t a = 1; a < f.q(); ++a) {
            CHECK(f.mul(f.inv(static_cast<Fel>(a)), static_cast<Fel>(a)) == 1);
            CHECK(f.pow(static_cast<Fel>(a), static_cast<long long>(f.q()) - 1) == 1);
        }
        CHECK_THROWS_AS(f.inv(0), std::domain_error);
    }
}

TEST_CASE("table kernel agrees with shift-and-xor kernel") {
    for (int t : {2, 3, 8}) {
        const FieldCtx f = make_field(t);
        for (std::uint32_t a = 0; a < f.q(); ++a) {
            for (std::uint32_t b = 0; b < f.q(); ++b) {
                CHECK(f.mul(static_cast<Fel>(a), static_cast<Fel>(b)) ==
                      f.mul_notable(static_cast<Fel>(a), static_cast<Fel>(b)));
            }
        }
    }
}

TEST_CASE("large field without tables: GF(2^12)") {
    const FieldCtx f = make_field(12);
    const Fel a = 0x0abc, b = 0x0123;
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.mul(f.inv(a), a) == 1);
    CHECK(f.pow(a, static_cast<long long>(f.q()) - 1) == 1);
}
