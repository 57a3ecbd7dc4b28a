#include <doctest.h>

#include "jf/linalg.hpp"

using namespace jf;

TEST_SUITE("linalg") {

TEST_CASE("kernel of the identity is trivial") {
    std::vector<RatRow> rows = {{rat(1), rat(0)}, {rat(0), rat(1)}};
    NullspaceResult r = nullspace(rows, 2);
    CHECK(r.rank == 2);
    CHECK(r.basis.empty());
}

TEST_CASE("kernel of the zero map is everything") {
    NullspaceResult r = nullspace({}, 3);
    CHECK(r.rank == 0);
    REQUIRE(r.basis.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(r.basis[i][j] == (i == j ? rat(1) : rat(0)));
}

TEST_CASE("single row") {
    NullspaceResult r = nullspace({{rat(1), rat(2), rat(3)}}, 3);
    CHECK(r.rank == 1);
    REQUIRE(r.basis.size() == 2);
    for (const auto& v : r.basis) {
        Rational dot = rat(0);
        dot += v[0] * rat(1) + v[1] * rat(2) + v[2] * rat(3);
        CHECK(dot == rat(0));
        // primitive with positive leading entry
        Integer g = 0;
        bool leading_seen = false;
        for (const auto& x : v) {
            CHECK(x.get_den() == 1);
            if (!leading_seen && x != 0) {
                CHECK(x > 0);
                leading_seen = true;
            }
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
        }
        CHECK(g == 1);
    }
}

TEST_CASE("dependent rows collapse to one pivot") {
    std::vector<RatRow> rows = {{rat(1), rat(2)}, {rat(2), rat(4)}, {rat(-3), rat(-6)}};
    NullspaceResult r = nullspace(rows, 2);
    CHECK(r.rank == 1);
    REQUIRE(r.basis.size() == 1);
    CHECK(r.basis[0][0] * rat(1) + r.basis[0][1] * rat(2) == rat(0));
}

TEST_CASE("rational entries are cleared exactly") {
    std::vector<RatRow> rows = {{rat(1, 2), rat(1, 3), rat(1, 6)},
                                {rat(1, 5), rat(2, 5), rat(0)}};
    NullspaceResult r = nullspace(rows, 3);
    CHECK(r.rank == 2);
    REQUIRE(r.basis.size() == 1);
    const auto& v = r.basis[0];
    CHECK(rat(1, 2) * v[0] + rat(1, 3) * v[1] + rat(1, 6) * v[2] == rat(0));
    CHECK(rat(1, 5) * v[0] + rat(2, 5) * v[1] == rat(0));
}

TEST_CASE("deterministic output") {
    std::vector<RatRow> rows = {{rat(2), rat(0), rat(-1), rat(3)}};
    NullspaceResult a = nullspace(rows, 4);
    NullspaceResult b = nullspace(rows, 4);
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
}

TEST_CASE("solve_square") {
    auto x = solve_square({{rat(2), rat(1)}, {rat(1), rat(3)}}, {rat(5), rat(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == rat(1));
    CHECK((*x)[1] == rat(3));
    auto none = solve_square({{rat(1), rat(2)}, {rat(2), rat(4)}}, {rat(1), rat(1)});
    CHECK_FALSE(none.has_value());
}

} // TEST_SUITE
