#include "jf/selfcheck.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "jf/bounds.hpp"
#include "jf/certificates.hpp"
#include "jf/ffj.hpp"
#include "jf/generators.hpp"
#include "jf/orders.hpp"
#include "jf/spaces.hpp"

namespace jf {

namespace {

CheckResult pass(const std::string& detail) { return {true, detail}; }
CheckResult fail(const std::string& detail) { return {false, detail}; }

std::string fmt_cell(i64 k, i64 m, i64 n) {
    std::ostringstream os;
    os << "(k=" << k << ", m=" << m << ", N=" << n << ")";
    return os.str();
}

// 1: leading rows of the three generators, theta's two constructions, and the
// discriminant identity, all exact to q-precision 200.
CheckResult check_generators() {
    clear_generator_cache();
    auto p21 = generator(GeneratorId::phi_m2_1, 4);
    auto p01 = generator(GeneratorId::phi_0_1, 4);
    auto p12 = generator(GeneratorId::phi_m1_2, 4);
    auto row = [](const FourierExpansion& f, i64 r) { return f.coeff(rat(0), {r}); };
    if (row(p21, -1) != 1 || row(p21, 0) != -2 || row(p21, 1) != 1)
        return fail("phi_{-2,1} q^0 row is not zeta - 2 + zeta^{-1}");
    if (row(p01, -1) != 1 || row(p01, 0) != 10 || row(p01, 1) != 1)
        return fail("phi_{0,1} q^0 row is not zeta + 10 + zeta^{-1}");
    if (row(p12, -1) != -1 || row(p12, 0) != 0 || row(p12, 1) != 1)
        return fail("phi_{-1,2} q^0 row is not zeta - zeta^{-1}");
    // the builders cross-check theta sum vs product and eta^24 vs
    // (E4^3 - E6^2)/1728 internally and throw on any mismatch
    generator(GeneratorId::theta, 200);
    generator(GeneratorId::delta, 200);
    return pass("q^0 rows exact; theta dual construction and the discriminant "
                "identity agree to q-precision 200");
}

// 2: |weak_basis(k, m)| matches the structure-theorem count.
CheckResult check_structure_dims() {
    i64 cells = 0;
    for (i64 k = -12; k <= 20; k += 2)
        for (i64 m = 0; m <= 6; ++m) {
            i64 expect = 0;
            for (i64 j = 0; j <= m; ++j) {
                i64 kk = k + 2 * j;
                expect += count_monomials(kk);
                if (count_monomials(kk) != dim_modular(kk))
                    return fail("monomial count disagrees with dim M at weight " +
                                std::to_string(kk));
            }
            if (weak_basis(k, m, 2).dim() != expect)
                return fail("weak basis size mismatch at " + fmt_cell(k, m, 0));
            ++cells;
        }
    for (i64 k = -11; k <= 19; k += 2)
        for (i64 m = 0; m <= 6; ++m) {
            i64 expect = m >= 2 ? weak_basis(k + 1, m - 2, 2).dim() : 0;
            if (weak_basis(k, m, 2).dim() != expect)
                return fail("odd-weight reduction mismatch at " + fmt_cell(k, m, 0));
            ++cells;
        }
    return pass(std::to_string(cells) + " (k, m) cells match the structure-theorem count");
}

// 3: ord_at(phi_{-2,1}, x) = -(x - [x])(1 - x + [x]) at every a/t, t <= 12.
CheckResult check_order_closed_form() {
    auto f = generator(GeneratorId::phi_m2_1, 8);
    i64 points = 0;
    for (i64 t = 1; t <= 12; ++t)
        for (i64 a = 0; a < t; ++a) {
            Rational x = rat(a, t);
            Rational expect = -x * (1 - x);
            OrdResult o = ord_at(f, x);
            if (!o.finite || o.value != expect)
                return fail("ord_at(phi_{-2,1}, " + rational_str(x) + ") != " +
                            rational_str(expect));
            ++points;
        }
    return pass(std::to_string(points) + " torsion points match the closed form exactly");
}

// 4: every basis element of J_{k,m}[q^N] meets the Heisenberg lower bound at
// every torsion point a/t, t <= 8.
CheckResult check_heisenberg() {
    std::set<Rational> xs;
    for (i64 t = 1; t <= 8; ++t)
        for (i64 a = 0; a < t; ++a) xs.insert(rat(a, t));
    i64 comparisons = 0, elements = 0;
    for (i64 k = 1; k <= 16; ++k)
        for (i64 m = 1; m <= 4; ++m)
            for (i64 n = 0; n <= 2; ++n) {
                auto basis = holomorphic_subspace(k, m, 24, rat(n));
                for (const auto& el : basis.elements) {
                    ++elements;
                    for (const auto& x : xs) {
                        OrdResult o = ord_at(el, x);
                        Rational lower = heisenberg_lower_bound(rat(n), m, x);
                        Rational attained = o.value; // finite: exact; else certified lower bound
                        if (attained < lower)
                            return fail("Heisenberg violation at " + fmt_cell(k, m, n) +
                                        ", x = " + rational_str(x));
                        ++comparisons;
                    }
                }
            }
    return pass(std::to_string(comparisons) + " order comparisons over " +
                std::to_string(elements) + " basis elements, zero violations");
}

// 5: xi_hat development coefficients are modular of weight k + nu for even nu
// and vanish for odd nu.
CheckResult check_xi_modularity() {
    i64 checks = 0;
    for (i64 k = 4; k <= 16; k += 2)
        for (i64 m = 1; m <= 3; ++m) {
            auto basis = holomorphic_subspace(k, m, 8);
            for (const auto& el : basis.elements) {
                for (i64 nu : {0, 2, 4}) {
                    auto xs = xi_hat(el, nu);
                    if (!is_modular_form(xs).modular)
                        return fail("xi_hat nu=" + std::to_string(nu) + " not modular at " +
                                    fmt_cell(k, m, 0));
                    ++checks;
                }
                for (i64 nu : {1, 3}) {
                    if (!xi_hat(el, nu).series.is_zero())
                        return fail("odd xi_hat nonzero at " + fmt_cell(k, m, 0));
                    ++checks;
                }
            }
        }
    return pass(std::to_string(checks) + " modularity/vanishing checks, zero failures");
}

// 6: every certificate the prover finds is confirmed by an exact kernel
// computation, and the (4, 2, 2) worked example certifies.
CheckResult check_certificates() {
    auto c422 = certify_vanishing(4, 2, 2);
    if (!c422 || !verify_certificate(*c422)) return fail("certify_vanishing(4, 2, 2) failed");
    i64 successes = 0, cells = 0;
    for (i64 k = 4; k <= 16; k += 2)
        for (i64 m = 1; m <= 6; ++m)
            for (i64 n = 1; n <= 3; ++n) {
                ++cells;
                auto c = certify_vanishing(k, m, n);
                if (!c) continue;
                if (!verify_certificate(*c))
                    return fail("verifier rejects fresh certificate at " + fmt_cell(k, m, n));
                SpaceSpec spec;
                spec.weight = k;
                spec.index = m;
                spec.min_ord = rat(n);
                spec.flavor = Flavor::holomorphic;
                if (dim_report(spec).dim != 0)
                    return fail("certified space has nonzero kernel at " + fmt_cell(k, m, n));
                ++successes;
            }
    return pass(std::to_string(successes) + " certificates over " + std::to_string(cells) +
                " cells, all confirmed by kernel dim 0; (4,2,2) certified");
}

// 7: dimension sums and the small-t number-theoretic inequalities.
CheckResult check_psi_and_sums() {
    i64 direct = 0;
    for (i64 n = 0; n <= 1000; ++n) {
        direct += dim_M(2 * n);
        if (sum_dim_M(n) != direct)
            return fail("sum_dim_M closed form breaks at n = " + std::to_string(n));
    }
    for (i64 t = 1; t <= 10000; ++t)
        if (!psi2_exceeds_basel(t))
            return fail("psi2(t) > 6/pi^2 not certified at t = " + std::to_string(t));
    for (i64 t = 3; t <= 10000; ++t)
        if (!robin_f_dominates_psi_ratio(t))
            return fail("robin_f(t) >= psi2/psi1 not certified at t = " + std::to_string(t));
    for (i64 t = 1; t <= 3; ++t)
        if (psi2(t) / psi1(t) > 2)
            return fail("psi2/psi1 exceeds 2 at t = " + std::to_string(t));
    return pass("sum_dim_M = direct sum to n = 1000; psi/robin inequalities certified to 10^4");
}

// 8: closed-form bound evaluators: exact linearity, rejection, exact slopes.
CheckResult check_bounds() {
    for (auto [k, m] : {std::pair<i64, i64>{10, 512}, {12, 100}, {4, 7}}) {
        auto b1 = bound_refined(k, m, 1), b2 = bound_refined(k, m, 2);
        Interval doubled = Interval::of(2) * *b1.value;
        if (b2.value->lo.cmp(doubled.lo) != 0 || b2.value->hi.cmp(doubled.hi) != 0)
            return fail("bound_refined is not exactly linear in the index multiplier");
    }
    auto b = bound_refined(10, 512, 1);
    if (!(b.value->gt(rat(80)) && b.value->lt(rat(95))))
        return fail("bound_refined(10, 512, 1) outside (80, 95): " + b.value->str(12));
    if (bound_general(10, 512, 1, rat(1, 12), rat(13)).applicable)
        return fail("bound_general accepted C1 = 1/12 > 1/24");
    if (!bound_general(10, 512, 1, rat(1, 24), rat(13)).applicable)
        return fail("bound_general rejected (C1, C2) = (1/24, 13)");
    if (slope_bound_exact(LatticeDescriptor::A1(1)) != 6)
        return fail("slope_bound(A1(1)) != 6");
    if (slope_bound_exact(LatticeDescriptor{{1, 1}}) != rat(3, 2))
        return fail("slope_bound(A1(1) + A1(1)) != 3/2");
    if (aip_threshold(4, 1) != rat(2, 3)) return fail("aip_threshold(4, 1) != 2/3");
    return pass("index linearity exact; C1 > 1/24 rejected; slopes 6 and 3/2 and "
                "threshold 2/3 exact");
}

// 9: symmetric truncation solver vs the FM dimension ceiling.
CheckResult check_ffj() {
    if (dim_upper_FM(10, 1) != 2) return fail("dim_upper_FM(10, 1) != 2");
    if (dim_upper_FM(4, 1) != 1) return fail("dim_upper_FM(4, 1) != 1");
    i64 prev = -1;
    std::ostringstream dims;
    for (i64 M = 2; M <= 6; ++M) {
        auto tr = build_truncated_space(10, 1, M);
        if (tr.solved_dim > 2)
            return fail("solved_dim exceeds the ceiling at M = " + std::to_string(M));
        if (prev >= 0 && tr.solved_dim > prev)
            return fail("solved_dim increased from M = " + std::to_string(M - 1));
        for (const auto& psi : tr.elements)
            if (!leading_coefficient_ord_check(tr, psi))
                return fail("leading-coefficient check failed at M = " + std::to_string(M));
        prev = tr.solved_dim;
        dims << (M > 2 ? ", " : "") << tr.solved_dim;
    }
    return pass("ceilings 2 and 1 computed; solved dims M=2..6: " + dims.str() +
                "; all leading-coefficient checks hold");
}

// 10: an explicit nonzero element of J_{16,1}[q^1] and interval positivity of
// the cubic dimension lower bound from its onset m0 on.
CheckResult check_nontrivial() {
    auto h = holomorphic_subspace(4, 1, 10);
    if (h.dim() < 1) return fail("J_{4,1} came out empty");
    FourierExpansion el = generator(GeneratorId::delta, 10) * h.elements[0];
    if (!el.weight || *el.weight != 16 || !el.index || *el.index != std::vector<i64>{1})
        return fail("explicit element is not typed as weight 16, index 1");
    if (el.is_zero()) return fail("explicit element vanishes");
    OrdResult o = ord_infty(el);
    if (!o.finite || o.value < 1) return fail("explicit element has order < 1 at infinity");
    for (const auto& [key, value] : el.terms())
        if (key.r[0] * key.r[0] > 4 * key.nq)
            return fail("explicit element has a nonzero singular coefficient");
    SpaceSpec spec;
    spec.weight = 16;
    spec.index = 1;
    spec.min_ord = rat(1);
    spec.flavor = Flavor::holomorphic;
    i64 d = dim_report(spec).dim;
    if (d < 1) return fail("dim J_{16,1}[q^1] < 1");
    i64 m0 = -1;
    for (i64 m = 1; m <= 1000; ++m) {
        auto r = dim_lower_nontrivial(10, m, rat(1, 8));
        if (r.applicable && r.positive) {
            m0 = m;
            break;
        }
    }
    if (m0 < 0) return fail("dim_lower_nontrivial(10, m, 1/8) never certified positive");
    for (i64 m = m0; m <= m0 + 100; ++m) {
        auto r = dim_lower_nontrivial(10, m, rat(1, 8));
        if (!r.applicable || !r.positive)
            return fail("positivity lost at m = " + std::to_string(m));
    }
    return pass("Delta * (J_{4,1} basis element) is a nonzero element of J_{16,1}[q^1], dim = " +
                std::to_string(d) + "; cubic lower bound interval-positive from m0 = " +
                std::to_string(m0));
}

} // namespace

const std::vector<NamedCheck>& acceptance_checks() {
    static const std::vector<NamedCheck> checks = {
        {"generator-rows-and-identities", 10.0, check_generators},
        {"structure-theorem-dimensions", 60.0, check_structure_dims},
        {"torsion-order-closed-form", 10.0, check_order_closed_form},
        {"heisenberg-lower-bound", 300.0, check_heisenberg},
        {"xi-modularity", 120.0, check_xi_modularity},
        {"certificate-soundness", 300.0, check_certificates},
        {"psi-and-dimension-sums", 30.0, check_psi_and_sums},
        {"bound-evaluators", 10.0, check_bounds},
        {"ffj-truncation-vs-ceiling", 300.0, check_ffj},
        {"nontrivial-filtered-space", 60.0, check_nontrivial},
    };
    return checks;
}

CheckResult run_check(const NamedCheck& check) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
        r = check.run();
    } catch (const std::exception& e) {
        r = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << r.detail << " [" << std::fixed;
    os.precision(2);
    os << secs << "s / " << check.budget_seconds << "s budget]";
    if (r.pass && secs > check.budget_seconds) {
        r.pass = false;
        os << " OVER BUDGET";
    }
    r.detail = os.str();
    return r;
}

} // namespace jf
