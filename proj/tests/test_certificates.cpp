#include <doctest.h>

#include "jf/bounds.hpp"
#include "jf/certificates.hpp"
#include "jf/spaces.hpp"

using namespace jf;

namespace {

SpaceSpec filtered(i64 k, i64 m, i64 n) {
    SpaceSpec s;
    s.weight = k;
    s.index = m;
    s.min_ord = rat(n);
    s.flavor = Flavor::holomorphic;
    return s;
}

} // namespace

TEST_SUITE("certificates") {

TEST_CASE("the worked example at weight 4, index 2, order 2") {
    auto c = certify_vanishing(4, 2, 2);
    REQUIRE(c.has_value());
    CHECK_FALSE(c->squared);
    CHECK(c->k_eff == 4);
    CHECK(c->m_eff == 2);
    CHECK(c->n_eff == 2);
    REQUIRE(c->entries.size() == 1);
    CHECK(c->entries[0].t == 1);
    CHECK(c->entries[0].n_t == 19);
    CHECK(c->entries[0].lhs == rat(2)); // N at t = 1
    CHECK(c->total == rat(20));
    CHECK(c->target == 4); // 2 m_eff
    CHECK(c->total > rat(c->target));
    CHECK(verify_certificate(*c));
    // and the space really is zero
    CHECK(dim_report(filtered(4, 2, 2)).dim == 0);
}

TEST_CASE("certificates only exist for genuinely empty spaces") {
    // dim J_{10,1}[q^1] = 1, so no certificate can exist
    CHECK_FALSE(certify_vanishing(10, 1, 1).has_value());
    CHECK_FALSE(certify_vanishing(12, 1, 1).has_value());
    // agreement with realized dimensions on a grid
    for (i64 k = 4; k <= 12; k += 2)
        for (i64 m = 1; m <= 3; ++m)
            for (i64 n = 1; n <= 2; ++n) {
                auto c = certify_vanishing(k, m, n);
                if (c) {
                    CHECK(verify_certificate(*c));
                    CHECK(dim_report(filtered(k, m, n)).dim == 0);
                }
            }
}

TEST_CASE("lemma data is recomputed by the verifier") {
    auto c = certify_vanishing(4, 2, 2);
    REQUIRE(c.has_value());

    VanishingCertificate tampered = *c;
    tampered.total += rat(1);
    CHECK_FALSE(verify_certificate(tampered));

    tampered = *c;
    tampered.entries[0].n_t += 1; // more than the inequality supports
    CHECK_FALSE(verify_certificate(tampered));

    tampered = *c;
    tampered.entries[0].lhs += rat(1, 2);
    CHECK_FALSE(verify_certificate(tampered));

    tampered = *c;
    tampered.target = 3;
    CHECK_FALSE(verify_certificate(tampered));

    tampered = *c;
    tampered.entries.push_back(tampered.entries[0]); // duplicate torsion level
    CHECK_FALSE(verify_certificate(tampered));

    tampered = *c;
    tampered.entries.clear();
    CHECK_FALSE(verify_certificate(tampered));

    tampered = *c;
    tampered.k_eff = 8; // parity bookkeeping must match
    CHECK_FALSE(verify_certificate(tampered));
}

TEST_CASE("odd weights go through the squared form") {
    bool found = false;
    for (i64 k = 5; k <= 15 && !found; k += 2)
        for (i64 m = 1; m <= 4 && !found; ++m)
            for (i64 n = 1; n <= 3 && !found; ++n) {
                auto c = certify_vanishing(k, m, n);
                if (!c) continue;
                found = true;
                CHECK(c->squared);
                CHECK(c->k_eff == 2 * k);
                CHECK(c->m_eff == 2 * m);
                CHECK(c->n_eff == 2 * n);
                CHECK(verify_certificate(*c));
                CHECK(dim_report(filtered(k, m, n)).dim == 0);
            }
    CHECK(found);
}

TEST_CASE("certified vanishing scales with the order") {
    // large enough N relative to k and m always certifies
    auto c = certify_vanishing(4, 1, 3);
    REQUIRE(c.has_value());
    CHECK(verify_certificate(*c));
    // and fails when the dimension is visibly positive
    CHECK_FALSE(certify_vanishing(20, 1, 1).has_value());
}

TEST_CASE("torsion scan window") {
    auto narrow = certify_vanishing(4, 2, 2, 1);
    REQUIRE(narrow.has_value());
    CHECK(narrow->entries.size() == 1);
    CHECK(verify_certificate(*narrow));
    // widening the window cannot destroy an existing certificate
    auto wide = certify_vanishing(4, 2, 2, 6);
    REQUIRE(wide.has_value());
    CHECK(verify_certificate(*wide));
}

TEST_CASE("entries carry strict per-level inequalities") {
    auto c = certify_vanishing(6, 3, 3);
    if (c) {
        for (const auto& e : c->entries) {
            CHECK(e.lhs > e.threshold);
            CHECK(e.n_t >= 0);
            Rational implied =
                rat(e.t * (c->k_eff + e.n_t), 12) * psi2(e.t);
            CHECK(e.lhs > implied); // n_t is the maximal admissible choice
            Rational next =
                rat(e.t * (c->k_eff + e.n_t + 1), 12) * psi2(e.t);
            CHECK_FALSE(e.lhs > next);
        }
        CHECK(verify_certificate(*c));
    }
    auto big = certify_vanishing(8, 4, 5);
    REQUIRE(big.has_value());
    Rational sum = rat(0);
    for (const auto& e : big->entries)
        sum += rat(e.t * e.t) * psi2(e.t) * rat(e.n_t + 1);
    CHECK(sum == big->total);
    CHECK(big->total > rat(big->target));
    CHECK(verify_certificate(*big));
}

TEST_CASE("input guards") {
    CHECK_THROWS_AS(certify_vanishing(0, 1, 1), DomainError);
    CHECK_THROWS_AS(certify_vanishing(4, 0, 1), DomainError);
    CHECK_THROWS_AS(certify_vanishing(4, -1, 1), DomainError);
    // order zero is legal but can never certify a nonzero space
    CHECK_FALSE(certify_vanishing(4, 1, 0).has_value());
}

} // TEST_SUITE
