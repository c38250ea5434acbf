#include "lrc/gf.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace lrc;

TEST_CASE("prime field GF(2): zeta is the unique nonzero element") {
    auto f = Field::make(2, 1, {1, 1});
    CHECK(f->q() == 2);
    CHECK(f->exp(0) == 1);
    CHECK(f->add(1, 1) == 0);
    CHECK(f->mul(1, 1) == 1);
}

TEST_CASE("GF(4) with x^2+x+1: alpha^2 = 1+alpha") {
    auto f = Field::make(2, 2, {1, 1, 1});
    const Elem alpha = 2, one_plus_alpha = 3;
    CHECK(f->mul(alpha, alpha) == one_plus_alpha);
    CHECK(f->add(alpha, 1) == one_plus_alpha);
    CHECK(f->add(alpha, alpha) == 0);  // characteristic 2
}

TEST_CASE("GF(5) prime field arithmetic") {
    auto f = Field::make_default(5);
    CHECK(f->add(3, 4) == 2);
    CHECK(f->mul(2, 4) == 3);
    CHECK(f->mul(3, f->inv(3)) == 1);
}

TEST_CASE("GF(8) tables agree with the polynomial-arithmetic oracle") {
    auto f = Field::make(2, 3, {1, 1, 0, 1});  // x^3 + x + 1
    testref::PolyField ref(2, 3, {1, 1, 0, 1});
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) {
            CHECK(f->mul(a, b) == ref.mul(a, b));
            CHECK(f->add(a, b) == ref.add(a, b));
        }
    // exp table against repeated oracle multiplication by beta (code 2)
    Elem x = 1;
    for (std::uint32_t e = 0; e < 7; ++e) {
        CHECK(f->exp(e) == x);
        x = ref.mul(x, 2);
    }
}

TEST_CASE("dlog: bottom marker and the worked exponents") {
    auto f = Field::make(2, 2, {1, 1, 1});
    CHECK(f->dlog(0) == Field::kLogZero);
    CHECK(f->dlog(1) == 0);
    CHECK(f->dlog(2) == 1);
    CHECK(f->dlog(3) == 2);  // 1+alpha = alpha^2
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Field::make(4, 1, {1, 1}), NotPrime);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 1}), DegreeMismatch);
    CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), NotPrimitive);   // x^2+1 = (x+1)^2
    CHECK_THROWS_AS(Field::make(2, 4, {1, 1, 1, 1, 1}), NotPrimitive);  // irreducible, order 5
    CHECK_THROWS_AS(Field::make(2, 1, {1, 1})->inv(0), DivisionByZero);
}

TEST_CASE("field axioms, exhaustive for q <= 16") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        CAPTURE(q);
        auto f = Field::make_default(q);
        for (Elem a = 0; a < q; ++a) {
            if (a != 0) {
                CHECK(f->mul(a, f->inv(a)) == 1);
                CHECK(f->mul(a, 1) == a);
                // dlog homomorphism
                for (Elem b = 1; b < q; ++b)
                    CHECK(f->dlog(f->mul(a, b)) ==
                          (f->dlog(a) + f->dlog(b)) % static_cast<int>(q - 1));
            }
            for (Elem b = 0; b < q; ++b) {
                for (Elem c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->sub(f->add(a, b), b) == a);
            }
        }
        // exp/log round trip over all nonzero codes
        for (Elem c = 1; c < q; ++c) CHECK(f->exp(static_cast<std::uint32_t>(f->dlog(c))) == c);
        for (std::uint32_t e = 0; e + 1 < q; ++e)
            CHECK(f->dlog(f->exp(e)) == static_cast<int>(e));
    }
}

TEST_CASE("pow including negative exponents") {
    auto f = Field::make_default(9);
    const Elem a = 5;
    CHECK(f->pow(a, 0) == 1);
    CHECK(f->pow(a, 8) == 1);
    CHECK(f->mul(f->pow(a, -1), a) == 1);
    CHECK(f->pow(0, 3) == 0);
    CHECK_THROWS_AS(f->pow(0, -1), DivisionByZero);
}

TEST_CASE("default fields exist up to 1024 and match the paper's small ones") {
    auto f4 = Field::make_default(4);
    CHECK(f4->primpoly() == std::vector<std::uint32_t>{1, 1, 1});
    auto f8 = Field::make_default(8);
    CHECK(f8->primpoly() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(Field::make_default(1024)->q() == 1024);
    CHECK(Field::make_default(729)->q() == 729);
    CHECK_THROWS_AS(Field::make_default(6), Error);  // not a prime power
}
