#include <doctest.h>

#include "jf/errors.hpp"
#include "jf/expansion.hpp"

using namespace jf;

namespace {

// 1 - q at integral exponents
FourierExpansion one_minus_q(i64 prec) {
    FourierExpansion f(0, 1, 1, prec);
    f.set({0, {0, 0}}, rat(1));
    f.set({1, {0, 0}}, rat(-1));
    return f;
}

} // namespace

TEST_SUITE("expansion") {

TEST_CASE("prec semantics: coefficients live strictly below prec") {
    FourierExpansion f(1, 1, 1, 3);
    f.set({2, {1, 0}}, rat(5));
    CHECK(f.coeff(rat(2), {1}) == rat(5));
    CHECK(f.coeff(rat(2), {-1}) == rat(0)); // absent but inside prec
    CHECK_THROWS_AS(f.set({3, {0, 0}}, rat(1)), Error);
    CHECK_THROWS_AS(f.coeff(rat(3), {0}), PrecisionError);
    CHECK_THROWS_AS(f.coeff(rat(7, 2), {0}), PrecisionError);
}

TEST_CASE("zero and constant") {
    FourierExpansion z = FourierExpansion::zero(1, 4);
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);
    FourierExpansion c = FourierExpansion::constant(rat(3, 2), 4);
    CHECK(c.rank() == 0);
    CHECK(c.coeff(rat(0)) == rat(3, 2));
    CHECK_FALSE(c.is_zero());
}

TEST_CASE("addition aligns denominators") {
    FourierExpansion a(0, 8, 1, 4); // exponents n/8, n < 4
    a.set({1, {0, 0}}, rat(1));     // q^(1/8)
    FourierExpansion b(0, 24, 1, 6); // exponents n/24, n < 6
    b.set({2, {0, 0}}, rat(1));      // q^(1/12)
    FourierExpansion s = a + b;
    CHECK(s.den_q() == 24);
    CHECK(s.coeff(rat(1, 8)) == rat(1));
    CHECK(s.coeff(rat(1, 12)) == rat(1));
    // prec = min(4/8, 6/24) = 1/4
    CHECK(rat(s.prec_num(), s.den_q()) == rat(1, 4));
}

TEST_CASE("multiplication truncates at min(Pa + lead_b, Pb + lead_a)") {
    FourierExpansion a(0, 1, 1, 5);
    a.set({2, {0, 0}}, rat(1)); // q^2, prec 5
    FourierExpansion b(0, 1, 1, 3);
    b.set({1, {0, 0}}, rat(1)); // q^1, prec 3
    FourierExpansion p = a * b;
    // cut = min(5 + 1, 3 + 2) = 5
    CHECK(p.prec_num() == 5);
    CHECK(p.coeff(rat(3)) == rat(1));
}

TEST_CASE("product of truncated geometric series") {
    FourierExpansion u = one_minus_q(6);
    FourierExpansion inv = invert_unit(u);
    FourierExpansion prod = u * inv;
    for (i64 n = 1; n < 6; ++n) CHECK(prod.coeff(rat(n)) == rat(0));
    CHECK(prod.coeff(rat(0)) == rat(1));
    for (i64 n = 0; n < 6; ++n) CHECK(inv.coeff(rat(n)) == rat(1));
    FourierExpansion nu = FourierExpansion::zero(0, 4);
    CHECK_THROWS_AS(invert_unit(nu), Error); // no unit term
}

TEST_CASE("pow") {
    FourierExpansion u = one_minus_q(5);
    FourierExpansion u3 = pow(u, 3);
    CHECK(u3.coeff(rat(0)) == rat(1));
    CHECK(u3.coeff(rat(1)) == rat(-3));
    CHECK(u3.coeff(rat(2)) == rat(3));
    CHECK(u3.coeff(rat(3)) == rat(-1));
    FourierExpansion u0 = pow(u, 0);
    CHECK(u0.coeff(rat(0)) == rat(1));
    CHECK(u0.term_count() == 1);
    REQUIRE(u0.weight.has_value());
    CHECK(*u0.weight == 0);
    CHECK_THROWS_AS(pow(u, -1), Error);
}

TEST_CASE("typed metadata flows through arithmetic") {
    FourierExpansion a(1, 1, 1, 4);
    a.weight = 4;
    a.index = std::vector<i64>{1};
    a.set({0, {1, 0}}, rat(1));
    FourierExpansion b = a * a;
    REQUIRE(b.weight.has_value());
    CHECK(*b.weight == 8);
    REQUIRE(b.index.has_value());
    CHECK(*b.index == std::vector<i64>{2});
    FourierExpansion s = a + a;
    REQUIRE(s.weight.has_value());
    CHECK(*s.weight == 4);
    CHECK(s.coeff(rat(0), {1}) == rat(2));
}

TEST_CASE("mismatched types drop to untyped") {
    FourierExpansion a(1, 1, 1, 4);
    a.weight = 4;
    FourierExpansion b(1, 1, 1, 4);
    b.weight = 6;
    b.set({0, {1, 0}}, rat(1));
    FourierExpansion s = a + b;
    CHECK_FALSE(s.weight.has_value());
    CHECK(s.coeff(rat(0), {1}) == rat(1));
}

TEST_CASE("scalar multiple and negation") {
    FourierExpansion u = one_minus_q(4);
    FourierExpansion v = rat(-2) * u;
    CHECK(v.coeff(rat(0)) == rat(-2));
    CHECK(v.coeff(rat(1)) == rat(2));
    CHECK((-u + u).is_zero());
    CHECK((rat(0) * u).is_zero());
}

TEST_CASE("q_derivative uses exact exponents") {
    FourierExpansion f(0, 24, 1, 48); // grid n/24
    f.set({1, {0, 0}}, rat(1));       // q^(1/24)
    f.set({25, {0, 0}}, rat(-1));     // q^(25/24)
    FourierExpansion d = q_derivative(f);
    CHECK(d.coeff(rat(1, 24)) == rat(1, 24));
    CHECK(d.coeff(rat(25, 24)) == rat(-25, 24));
}

TEST_CASE("scale_elliptic") {
    FourierExpansion f(1, 1, 1, 3);
    f.index = std::vector<i64>{1};
    f.set({0, {1, 0}}, rat(1));
    f.set({1, {-2, 0}}, rat(7));
    FourierExpansion g = scale_elliptic(f, 2);
    CHECK(g.coeff(rat(0), {2}) == rat(1));
    CHECK(g.coeff(rat(1), {-4}) == rat(7));
    REQUIRE(g.index.has_value());
    CHECK(*g.index == std::vector<i64>{4});
}

TEST_CASE("tensor product of rank-1 factors") {
    FourierExpansion a(1, 1, 1, 3);
    a.weight = -2;
    a.index = std::vector<i64>{1};
    a.set({0, {1, 0}}, rat(1));
    a.set({1, {0, 0}}, rat(2));
    FourierExpansion b(1, 1, 1, 3);
    b.weight = -2;
    b.index = std::vector<i64>{3};
    b.set({0, {-1, 0}}, rat(5));
    FourierExpansion t = tensor_product(a, b);
    CHECK(t.rank() == 2);
    CHECK(t.coeff(rat(0), {1, -1}) == rat(5));
    CHECK(t.coeff(rat(1), {0, -1}) == rat(10));
    REQUIRE(t.weight.has_value());
    CHECK(*t.weight == -4);
    REQUIRE(t.index.has_value());
    CHECK(*t.index == std::vector<i64>{1, 3});
}

TEST_CASE("weak support validation") {
    FourierExpansion f(1, 1, 1, 3);
    f.index = std::vector<i64>{1};
    f.set({0, {1, 0}}, rat(1)); // r^2 = 1 <= 4nm + m^2 = 1
    CHECK_NOTHROW(validate_weak_support(f));
    f.set({0, {2, 0}}, rat(1)); // r^2 = 4 > 1
    CHECK_THROWS_AS(validate_weak_support(f), DomainError);
}

TEST_CASE("agree compares on the overlap") {
    FourierExpansion a = one_minus_q(3);
    FourierExpansion b = one_minus_q(7);
    CHECK(agree(a, b));
    b.set({4, {0, 0}}, rat(9)); // outside a's window (cut is at 3)
    CHECK(agree(a, b));
    FourierExpansion c = one_minus_q(7);
    c.set({1, {0, 0}}, rat(5)); // conflicts inside the overlap
    CHECK_FALSE(agree(a, c));
}

TEST_CASE("lead and truncation") {
    FourierExpansion f(0, 1, 1, 9);
    f.set({4, {0, 0}}, rat(1));
    f.set({6, {0, 0}}, rat(2));
    CHECK(f.lead_nq() == 4);
    FourierExpansion t = f.truncated(rat(5));
    CHECK(t.prec_num() == 5);
    CHECK(t.coeff(rat(4)) == rat(1));
    CHECK(t.term_count() == 1);
}

TEST_CASE("normalize reduces exponent denominators when possible") {
    FourierExpansion f(0, 24, 1, 72);
    f.set({24, {0, 0}}, rat(5)); // q^1 on the 24-grid
    f.set({48, {0, 0}}, rat(7)); // q^2
    f.normalize();
    CHECK(f.den_q() == 1);
    CHECK(f.prec_num() == 3);
    CHECK(f.coeff(rat(1)) == rat(5));
    CHECK(f.coeff(rat(2)) == rat(7));
}

} // TEST_SUITE
