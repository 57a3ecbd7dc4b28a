#include <doctest.h>

#include "jf/errors.hpp"
#include "jf/generators.hpp"
#include "jf/orders.hpp"
#include "jf/spaces.hpp"

using namespace jf;

namespace {

bool no_singular_terms(const FourierExpansion& f, i64 m) {
    for (const auto& [key, value] : f.terms())
        if (4 * key.nq * m < key.r[0] * key.r[0]) return false;
    return true;
}

SpaceSpec hol_spec(i64 k, i64 m, i64 min_ord = 0) {
    SpaceSpec s;
    s.weight = k;
    s.index = m;
    s.min_ord = rat(min_ord);
    s.flavor = Flavor::holomorphic;
    return s;
}

} // namespace

TEST_SUITE("spaces") {

TEST_CASE("level one modular dimensions") {
    const i64 table[] = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2};
    for (i64 k = 0; k <= 26; k += 2) CHECK(dim_modular(k) == table[k / 2]);
    CHECK(dim_modular(5) == 0);
    CHECK(dim_modular(-4) == 0);
    for (i64 k = 0; k <= 40; k += 2) CHECK(count_monomials(k) == static_cast<i64>(eisenstein_monomials(k).size()));
    // E4^a E6^b exponents, descending in a
    auto mono = eisenstein_monomials(12);
    REQUIRE(mono.size() == 2);
    CHECK(mono[0] == std::pair<i64, i64>{3, 0});
    CHECK(mono[1] == std::pair<i64, i64>{0, 2});
}

TEST_CASE("monomial series are modular of the right weight") {
    auto ms = modular_monomials(8, 10);
    REQUIRE(ms.size() == 1); // E4^2 spans M_8
    CHECK(ms[0].coeff(rat(1)) == rat(480)); // E8 = E4^2
    CHECK(is_modular_form(ms[0], 8).modular);
}

TEST_CASE("weak index-1 bases over the modular ring") {
    // dim Jweak_{k,1} = dim M_k + dim M_{k+2} for even k
    for (i64 k = -2; k <= 12; k += 2) {
        SpaceBasis b = weak_basis(k, 1, 6);
        CHECK(b.dim() == dim_modular(k) + dim_modular(k + 2));
        for (const auto& el : b.elements) {
            REQUIRE(el.weight.has_value());
            CHECK(*el.weight == k);
            CHECK_NOTHROW(validate_weak_support(el));
        }
    }
    CHECK(weak_basis(10, 3, 6).dim() == 6);
    CHECK(weak_basis(0, 0, 6).dim() == 1); // constants
    CHECK(weak_basis(-2, 0, 6).dim() == 0);
}

TEST_CASE("odd weights reduce through the index-2 generator") {
    // Jweak_{k,m} odd = phi_{-1,2} * Jweak_{k+1,m-2}
    CHECK(weak_basis(11, 2, 6).dim() == weak_basis(12, 0, 6).dim());
    CHECK(weak_basis(-1, 2, 6).dim() == 1);
    CHECK(weak_basis(7, 1, 6).dim() == 0); // no odd forms at index 1
    SpaceBasis b = weak_basis(-1, 2, 6);
    REQUIRE(b.dim() == 1);
    CHECK(agree(b.elements[0], generator(GeneratorId::phi_m1_2, 6)));
}

TEST_CASE("holomorphic index-1 dimension table") {
    const i64 expected[] = {1, 1, 1, 2, 2, 2, 3};
    for (i64 i = 0; i < 7; ++i) {
        i64 k = 4 + 2 * i;
        DimReport rep = dim_report(hol_spec(k, 1));
        CHECK(rep.dim == expected[i]);
    }
    CHECK(dim_report(hol_spec(2, 1)).dim == 0);
    CHECK(dim_report(hol_spec(0, 1)).dim == 0);
}

TEST_CASE("holomorphic basis elements have no singular coefficients") {
    for (i64 k : {4, 10, 12}) {
        for (i64 m : {1, 2, 3}) {
            SpaceBasis b = holomorphic_subspace(k, m, 8);
            for (const auto& el : b.elements) {
                CHECK(no_singular_terms(el, m));
                CHECK_FALSE(el.is_zero());
            }
        }
    }
}

TEST_CASE("vanishing-order filtration at index 1") {
    CHECK(dim_report(hol_spec(10, 1, 1)).dim == 1);
    CHECK(dim_report(hol_spec(10, 1, 2)).dim == 0);
    CHECK(dim_report(hol_spec(12, 1, 1)).dim == 1);
    CHECK(dim_report(hol_spec(16, 1, 1)).dim == 2);
    CHECK(dim_report(hol_spec(4, 2, 2)).dim == 0);
    // filtration is decreasing in min_ord
    for (i64 k : {10, 12, 16}) {
        i64 prev = dim_report(hol_spec(k, 1, 0)).dim;
        for (i64 n = 1; n <= 3; ++n) {
            i64 cur = dim_report(hol_spec(k, 1, n)).dim;
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("min_ord elements really vanish to the required order") {
    SpaceBasis b = holomorphic_subspace(16, 1, 8, rat(1));
    REQUIRE(b.dim() == 2);
    for (const auto& el : b.elements) {
        OrdResult o = ord_infty(el);
        REQUIRE(o.finite);
        CHECK(o.value >= rat(1));
        CHECK(no_singular_terms(el, 1));
    }
}

TEST_CASE("plus invariance cuts the odd part") {
    SpaceBasis all = holomorphic_subspace(10, 1, 8);
    SpaceBasis plus = holomorphic_subspace(10, 1, 8, rat(0), Invariance::plus);
    CHECK(plus.dim() <= all.dim());
    for (const auto& el : plus.elements)
        for (const auto& [key, value] : el.terms())
            CHECK(value == el.coeff_key({key.nq, {-key.r[0], 0}}));
    // at index 1 every form is already symmetric
    CHECK(plus.dim() == all.dim());
}

TEST_CASE("rank-2 tensor bases at index 1") {
    SpaceBasis b = weak_basis_rank2(-4, 1, 1, 5);
    REQUIRE(b.dim() == 1);
    CHECK(b.elements[0].rank() == 2);
    REQUIRE(b.elements[0].index.has_value());
    CHECK(*b.elements[0].index == std::vector<i64>{1, 1});
    // phi_{-2,1} tensor phi_{-2,1}
    CHECK(b.elements[0].coeff(rat(0), {-1, -1}) == rat(1));
    CHECK(b.elements[0].coeff(rat(0), {0, 0}) == rat(4));
    CHECK(weak_basis_rank2(-4, 1, 2, 5).dim() == 2);
    CHECK(weak_basis_rank2(-6, 2, 2, 5).dim() == 2);
    CHECK(weak_basis_rank2(-8, 2, 2, 5).dim() == 1);
    CHECK(weak_basis_rank2(-3, 1, 1, 5).dim() == 0); // odd weight, no factorization
    i64 d0 = weak_basis_rank2(0, 1, 1, 5).dim();
    CHECK(d0 == 2); // phi0 (x) phi0 ... wait: pairs (k1,k2) with k1+k2=0
}

TEST_CASE("basis_for dispatches on the spec") {
    SpaceSpec s;
    s.weight = 10;
    s.lattice = LatticeDescriptor::A1(1);
    s.index = 1;
    s.flavor = Flavor::holomorphic;
    SpaceBasis b = basis_for(s, 8);
    CHECK(b.dim() == 2);
    CHECK(b.spec.flavor == Flavor::holomorphic);
    s.flavor = Flavor::weak;
    CHECK(basis_for(s, 8).dim() == weak_basis(10, 1, 8).dim());
    s.lattice = {{1, 1}};
    s.index = 1;
    // rank-2 weak index 1 is supported
    CHECK(basis_for(s, 8).dim() == weak_basis_rank2(10, 1, 1, 8).dim());
    s.flavor = Flavor::holomorphic;
    CHECK_THROWS_AS(basis_for(s, 8), DomainError); // rank-2 only as weak index-1
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(weak_basis(10, -1, 6), DomainError);
    SpaceSpec s;
    s.weight = 4;
    s.index = -2;
    CHECK_THROWS_AS(dim_report(s), DomainError);
    s.index = 1;
    s.lattice = {{1, 1, 1}};
    CHECK_THROWS_AS(dim_report(s), DomainError);
}

TEST_CASE("index scaling enters through the lattice descriptor") {
    // J_{k, A1(2), 1} = J_{k, A1(1), 2}
    SpaceSpec a = hol_spec(10, 2);
    SpaceSpec b = hol_spec(10, 1);
    b.lattice = LatticeDescriptor::A1(2);
    CHECK(dim_report(a).dim == dim_report(b).dim);
}

TEST_CASE("class consistency of singular coefficients") {
    FourierExpansion f = generator(GeneratorId::phi_m2_1, 6);
    CHECK(singular_class_consistent(f, 1));
    FourierExpansion g(1, 1, 1, 3);
    g.index = std::vector<i64>{1};
    g.set({0, {-1, 0}}, rat(1)); // breaks c(n,r)=c(n',r') on the class
    g.set({0, {1, 0}}, rat(2));
    CHECK_FALSE(singular_class_consistent(g, 1));
}

TEST_CASE("minimal precision formula") {
    CHECK(minimal_holomorphic_prec(1, rat(0)) == 3);
    CHECK(minimal_holomorphic_prec(1, rat(1)) == 4);
    CHECK(minimal_holomorphic_prec(4, rat(0)) == 3);
    CHECK(minimal_holomorphic_prec(5, rat(0)) == 4);
    CHECK(minimal_holomorphic_prec(2, rat(5, 2)) == 4 + 2);
}

TEST_CASE("reports carry methods and constraint counts") {
    DimReport closed = dim_report(hol_spec(10, 1));
    CHECK(closed.dim == 2);
    DimReport realized = dim_report(hol_spec(10, 1, 1));
    CHECK(realized.dim == 1);
    CHECK_FALSE(realized.method.empty());
    CHECK_FALSE(closed.method.empty());
}

} // TEST_SUITE
