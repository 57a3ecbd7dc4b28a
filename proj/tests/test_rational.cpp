#include <doctest.h>

#include "jf/errors.hpp"
#include "jf/rational.hpp"

using namespace jf;

TEST_SUITE("rational") {

TEST_CASE("construction and printing") {
    CHECK(rational_str(rat(6, 4)) == "3/2");
    CHECK(rational_str(rat(-6, 4)) == "-3/2");
    CHECK(rational_str(rat(5)) == "5");
    CHECK(rational_str(rat(0, 7)) == "0");
    CHECK(rat(1, -2) == rat(-1, 2));
}

TEST_CASE("parse roundtrip") {
    for (const char* s : {"0", "1", "-1", "3/2", "-22/7", "123456789123456789"}) {
        CHECK(rational_str(parse_rational(s)) == s);
    }
    CHECK(parse_rational("4/6") == rat(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
}

TEST_CASE("floor and ceiling") {
    CHECK(rat_floor(rat(7, 2)) == 3);
    CHECK(rat_floor(rat(-7, 2)) == -4);
    CHECK(rat_floor(rat(4)) == 4);
    CHECK(rat_ceil(rat(7, 2)) == 4);
    CHECK(rat_ceil(rat(-7, 2)) == -3);
    CHECK(rat_ceil(rat(-4)) == -4);
    CHECK(floor_i64(rat(-1, 3)) == -1);
    CHECK(ceil_i64(rat(-1, 3)) == 0);
}

TEST_CASE("powers") {
    CHECK(pow_rat(rat(2, 3), 3) == rat(8, 27));
    CHECK(pow_rat(rat(5), 0) == rat(1));
    CHECK(pow_rat_signed(rat(2, 3), -2) == rat(9, 4));
    CHECK(pow_rat_signed(rat(-2), 3) == rat(-8));
    CHECK_THROWS_AS(pow_rat_signed(rat(0), -1), Error);
}

TEST_CASE("integer square roots") {
    CHECK(isqrt_i64(0) == 0);
    CHECK(isqrt_i64(1) == 1);
    CHECK(isqrt_i64(3) == 1);
    CHECK(isqrt_i64(4) == 2);
    CHECK(isqrt_i64(999999999999) == 999999);
    CHECK(isqrt_i64(1000000000000) == 1000000);
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    Integer r = isqrt_floor(big);
    CHECK(r * r <= big);
    CHECK((r + 1) * (r + 1) > big);
}

TEST_CASE("exact rational square roots") {
    Rational root;
    CHECK(rational_square_root(rat(49, 4), &root));
    CHECK(root == rat(7, 2));
    CHECK(rational_square_root(rat(0), &root));
    CHECK(root == rat(0));
    CHECK(rational_square_root(rat(1, 9), &root));
    CHECK(root == rat(1, 3));
    CHECK_FALSE(rational_square_root(rat(2), &root));
    CHECK_FALSE(rational_square_root(rat(49, 8), &root));
    CHECK_FALSE(rational_square_root(rat(-4), &root));
}

TEST_CASE("to_i64 bounds") {
    CHECK(to_i64(Integer(42)) == 42);
    CHECK(to_i64(Integer(-42)) == -42);
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 2, 80);
    CHECK_THROWS_AS(to_i64(big), Error);
}

} // TEST_SUITE
