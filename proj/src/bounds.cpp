#include "jf/bounds.hpp"

namespace jf {

const char* bound_theorem_name(BoundTheorem t) {
    switch (t) {
        case BoundTheorem::refined: return "refined";
        case BoundTheorem::general: return "general";
        case BoundTheorem::lattice: return "lattice";
        case BoundTheorem::slope: return "slope";
        case BoundTheorem::aip: return "aip";
        case BoundTheorem::ffj_dim: return "ffj_dim";
    }
    return "?";
}

namespace {

std::vector<std::pair<i64, i64>> factorize(i64 t) {
    std::vector<std::pair<i64, i64>> f;
    for (i64 p = 2; p * p <= t; ++p) {
        if (t % p) continue;
        i64 a = 0;
        while (t % p == 0) { t /= p; ++a; }
        f.emplace_back(p, a);
    }
    if (t > 1) f.emplace_back(t, 1);
    return f;
}

Rational psi(i64 t, int j) {
    if (t < 1) throw DomainError("psi: t must be >= 1");
    Rational out(1);
    for (auto [p, a] : factorize(t)) {
        (void)a;
        Rational pj = pow_rat(rat(p), j);
        out *= 1 - 1 / pj;
    }
    return out;
}

} // namespace

Rational psi1(i64 t) { return psi(t, 1); }
Rational psi2(i64 t) { return psi(t, 2); }

Rational sigma_over(i64 t) {
    if (t < 1) throw DomainError("sigma_over: t must be >= 1");
    Rational s(1);
    for (auto [p, a] : factorize(t)) {
        // (p^(a+1) - 1) / (p - 1) / p^a
        Rational pa = pow_rat(rat(p), a);
        s *= (pa * p - 1) / ((p - 1) * pa);
    }
    return s;
}

namespace {

Interval robin_eval(const Interval& x) {
    Interval ll = x.log().log();
    Interval eg = Interval::euler_gamma().exp();
    return eg * ll + Interval::exact(rat(6483, 10000)) / ll;
}

} // namespace

Interval robin_f(const Rational& x) {
    if (x < 3) throw DomainError("robin_f: defined here for x >= 3");
    return robin_eval(Interval::exact(x));
}

bool psi2_exceeds_basel(i64 t) {
    Interval pi2 = Interval::pi() * Interval::pi();
    return (Interval::exact(psi2(t)) * pi2).gt(rat(6));
}

bool robin_f_dominates_psi_ratio(i64 t) {
    if (t < 3) throw DomainError("robin_f_dominates_psi_ratio: t >= 3");
    return robin_f(rat(t)).ge(psi2(t) / psi1(t));
}

i64 dim_M(i64 k) { return dim_modular(k); }

i64 sum_dim_M(i64 n) {
    if (n < 0) throw DomainError("sum_dim_M: n must be >= 0");
    switch (n % 6) {
        case 3: return (n + 3) * (n + 3) / 12;
        case 1:
        case 5: return (n + 1) * (n + 5) / 12;
        case 2:
        case 4: return (n + 2) * (n + 4) / 12;
        default: return (n * n + 6 * n + 12) / 12;
    }
}

BoundReport bound_refined(i64 k, i64 m, i64 idx) {
    if (k < 1 || m < 1 || idx < 1) throw DomainError("bound_refined: k, m, idx must be >= 1");
    BoundReport rep;
    rep.theorem = BoundTheorem::refined;
    rep.weight = k;
    rep.index = m;
    rep.index_multiplier = idx;
    Interval pi2 = Interval::pi() * Interval::pi();
    Interval x = Interval::of(2) * pi2.cbrt() * Interval::of(m).cbrt() /
                     Interval::of(k).cbrt() +
                 Interval::of(13);
    rep.value = Interval::exact(rat(k * idx, 4)) * x * x.log().log();
    return rep;
}

namespace {

// g(t) = (t+c)^2 (t+c-2)/8 - (t+c)(t+c+1)(t+c+2)/12 - C1 t^3, expanded in t.
std::array<Rational, 4> validity_cubic(const Rational& c1, const Rational& c2) {
    const Rational& c = c2;
    Rational a3 = rat(1, 24) - c1;
    Rational a2 = (c - 4) / 8;
    Rational a1 = (3 * c * c - 24 * c - 4) / 24;
    Rational a0 = (c * c * c - 12 * c * c - 4 * c) / 24;
    return {a0, a1, a2, a3};
}

Rational eval_cubic(const std::array<Rational, 4>& a, const Rational& t) {
    return ((a[3] * t + a[2]) * t + a[1]) * t + a[0];
}

} // namespace

BoundReport bound_general(i64 k, i64 m, i64 idx, const Rational& c1, const Rational& c2) {
    if (k < 1 || m < 1 || idx < 1) throw DomainError("bound_general: k, m, idx must be >= 1");
    BoundReport rep;
    rep.theorem = BoundTheorem::general;
    rep.weight = k;
    rep.index = m;
    rep.index_multiplier = idx;
    rep.c1 = c1;
    rep.c2 = c2;
    if (c1 <= 0) {
        rep.applicable = false;
        rep.reason = "C1 must be positive";
        return rep;
    }
    auto a = validity_cubic(c1, c2);
    if (a[3] < 0) {
        rep.applicable = false;
        rep.reason = "leading coefficient 1/24 - C1 = " + rational_str(a[3]) + " is negative";
        return rep;
    }
    bool all_nonneg = a[0] >= 0 && a[1] >= 0 && a[2] >= 0;
    if (!all_nonneg) {
        // fall back to the documented grid check t = 0, 1/4, ..., 100
        for (i64 j = 0; j <= 400; ++j) {
            Rational t = rat(j, 4);
            Rational g = eval_cubic(a, t);
            if (g < 0) {
                rep.applicable = false;
                rep.reason = "validity cubic is negative at t = " + rational_str(t) + ": " +
                             rational_str(g);
                return rep;
            }
        }
        rep.reason = "cubic nonnegativity grid-checked on [0, 100] step 1/4 "
                     "with nonnegative leading coefficient";
    }
    Interval pi2 = Interval::pi() * Interval::pi();
    Interval A = (pi2 * Interval::of(m) / Interval::exact(3 * c1 * k)).cbrt();
    Interval x = A + Interval::exact(c2);
    if (!x.ge(rat(3))) {
        rep.applicable = false;
        rep.reason = "A + C2 is below the loglog domain (needs >= 3)";
        return rep;
    }
    rep.value = Interval::exact(rat(k * idx, 12)) * x * robin_eval(x);
    return rep;
}

BoundReport bound_lattice(i64 k, i64 m, const LatticeDescriptor& lat, i64 idx) {
    if (k < 1 || m < 1 || idx < 1) throw DomainError("bound_lattice: k, m, idx must be >= 1");
    if (lat.rank() < 1) throw DomainError("bound_lattice: empty lattice");
    for (i64 d : lat.scalings)
        if (d < 1) throw DomainError("bound_lattice: scalings must be positive");
    BoundReport rep;
    rep.theorem = BoundTheorem::lattice;
    rep.weight = k;
    rep.lattice = lat;
    rep.index = m;
    rep.index_multiplier = idx;
    const int l = lat.rank();
    const i64 twol = i64(1) << l;
    Rational cap = 3 * pow_rat_signed(rat(2), 3 - twol) * lat.scalings[0] * m;
    if (!(rat(k) < cap)) {
        rep.applicable = false;
        rep.reason = "needs k < 3*2^(3-2^l)*d1*m = " + rational_str(cap);
        return rep;
    }
    Interval v = Interval::of(3).pow(rat(-1, twol)) *
                 Interval::of(2).pow(rat(twol - 3, twol)) * Interval::of(idx);
    for (int j = 1; j <= l; ++j)
        v = v * Interval::of(lat.scalings[j - 1]).pow(rat(i64(1) << (j - 1), twol));
    v = v * Interval::of(k).pow(rat(1, twol)) * Interval::of(m).pow(rat(twol - 1, twol));
    rep.value = v;
    return rep;
}

Rational slope_bound_exact(const LatticeDescriptor& lat) {
    if (lat.rank() < 1) throw DomainError("slope_bound: empty lattice");
    const int l = lat.rank();
    Rational v = 3 * pow_rat_signed(rat(2), 3 - (i64(1) << l));
    for (int j = 1; j <= l; ++j)
        v *= pow_rat_signed(rat(lat.scalings[j - 1]), -(i64(1) << (j - 1)));
    return v;
}

BoundReport slope_bound(const LatticeDescriptor& lat) {
    BoundReport rep;
    rep.theorem = BoundTheorem::slope;
    rep.lattice = lat;
    rep.exact_value = slope_bound_exact(lat);
    rep.value = Interval::exact(*rep.exact_value);
    return rep;
}

Rational aip_threshold(i64 k, i64 d) {
    if (k < 1 || d < 1) throw DomainError("aip_threshold: k, d must be >= 1");
    return rat(d * k, 6);
}

BoundReport aip_threshold_report(i64 k, i64 d) {
    BoundReport rep;
    rep.theorem = BoundTheorem::aip;
    rep.weight = k;
    rep.lattice = LatticeDescriptor::A1(d);
    rep.exact_value = aip_threshold(k, d);
    rep.value = Interval::exact(*rep.exact_value);
    return rep;
}

PolyLowerBound dim_lower_nontrivial(i64 k, i64 m, const Rational& C) {
    if (C <= 0) throw DomainError("dim_lower_nontrivial: C must be positive");
    PolyLowerBound out;
    if (k % 2 != 0 || k <= 9) {
        out.reason = "needs even k > 9";
        return out;
    }
    // k - 9 > 16 C^(3/2)  <=>  (k-9)^2 > 256 C^3, exactly in rationals
    if (!(rat((k - 9) * (k - 9)) > 256 * C * C * C)) {
        out.reason = "needs k - 9 > 16 C^(3/2)";
        return out;
    }
    out.applicable = true;
    Rational sqrtC;
    bool exact = rational_square_root(C, &sqrtC);
    if (exact) {
        Rational C32 = C * sqrtC;
        Rational v = (rat(k - 9) - 16 * C32) / 12 * rat(m * m * m) +
                     (3 * C * C + 2 * sqrtC) * rat(m * m) - (C * k / 2 + 2 * C) * rat(m) +
                     rat(k * k + 12 * k + 20, 48);
        out.exact_value = v;
        out.value = Interval::exact(v);
        out.positive = v > 0;
        return out;
    }
    Interval S = Interval::exact(C).sqrt();
    Interval Ci = Interval::exact(C);
    Interval C32 = Ci * S;
    Interval v = (Interval::of(k - 9) - Interval::of(16) * C32) / Interval::of(12) *
                     Interval::of(m * m * m) +
                 (Interval::exact(3 * C * C) + Interval::of(2) * S) * Interval::of(m * m) -
                 Interval::exact(C * k / rat(2) + 2 * C) * Interval::of(m) +
                 Interval::exact(rat(k * k + 12 * k + 20, 48));
    out.value = v;
    out.positive = v.gt(rat(0));
    return out;
}

i64 r_count(i64 m, const Rational& C) {
    if (m < 1) throw DomainError("r_count: m must be >= 1");
    if (m > 200) throw DomainError("r_count: brute-force enumerator is meant for small m");
    Rational n0r = C * m;
    if (n0r.get_den() != 1) throw DomainError("r_count: C*m must be an integer");
    if (n0r < 0) throw DomainError("r_count: C must be nonnegative");
    i64 n0 = to_i64(n0r.get_num());
    const i64 m3 = m * m * m;
    i64 total = 0;
    for (i64 n = n0; 4 * n < m3; ++n) {
        i64 rmin = isqrt_i64(4 * n * m3) + 1; // smallest r with r^2 > 4 n m^3
        if (rmin <= m3) total += m3 - rmin + 1;
    }
    return total;
}

} // namespace jf
