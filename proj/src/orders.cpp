#include "jf/orders.hpp"

#include <algorithm>

#include "jf/linalg.hpp"
#include "jf/spaces.hpp"

namespace jf {

OrdResult ord_infty(const FourierExpansion& f) {
    OrdResult out;
    if (f.is_zero()) {
        out.finite = false;
        out.value = f.prec();
        return out;
    }
    out.finite = true;
    out.witness = f.terms().begin()->first;
    out.value = rat(out.witness.nq, f.den_q());
    return out;
}

namespace {

// Exact test for n + m x^2 - best >= x sqrt(4 n m + m^2), the statement that
// no term at q-row n or later can beat `best` under the weak-support bound.
bool row_cannot_improve(const Rational& n, i64 m, const Rational& x, const Rational& best,
                        bool strict) {
    Rational lhs = n + m * x * x - best;
    if (lhs < 0) return false;
    Rational l2 = lhs * lhs;
    Rational r2 = x * x * (4 * n * m + Rational(m) * m);
    return strict ? l2 > r2 : l2 >= r2;
}

bool row_is_monotone(const Rational& n, i64 m, const Rational& x) {
    // d/dn of n - x sqrt(4nm + m^2) is nonnegative once 4nm + m^2 >= 4 x^2 m^2
    return 4 * n * m + Rational(m) * m >= 4 * x * x * Rational(m) * m;
}

// Certified rational lower bound for n + r x + m x^2 over all weak-support
// terms at q-rows >= n0.
Rational tail_lower_bound(const Rational& n0, i64 m, const Rational& x) {
    auto at = [&](const Rational& n) {
        Integer s = isqrt_floor(rat_ceil(4 * n * m + Rational(m) * m)) + 1;
        return n + m * x * x - x * Rational(s);
    };
    Rational vertex = Rational(m) * x * x - rat(m, 4);
    Rational n1 = std::max(n0, vertex);
    return std::min(at(n0), at(n1));
}

} // namespace

OrdResult ord_at(const FourierExpansion& f, const Rational& x) {
    if (f.rank() != 1) throw DomainError("ord_at: rank-1 expansion required");
    if (!f.index || f.index->size() != 1)
        throw DomainError("ord_at: typed index required");
    i64 m = (*f.index)[0];
    if (m < 0) throw DomainError("ord_at: negative index");
    if (x < 0 || x >= 1) throw DomainError("ord_at: x must lie in [0,1)");
    validate_weak_support(f);

    OrdResult out;
    bool have_best = false;
    Rational best;
    ExponentKey witness;

    auto row_it = f.terms().begin();
    while (row_it != f.terms().end()) {
        i64 row_nq = row_it->first.nq;
        Rational n = rat(row_nq, f.den_q());
        if (have_best && row_is_monotone(n, m, x) && row_cannot_improve(n, m, x, best, false))
            break;
        while (row_it != f.terms().end() && row_it->first.nq == row_nq) {
            Rational v = n + rat(row_it->first.r[0], f.den_z()) * x + m * x * x;
            if (!have_best || v < best) {
                best = v;
                witness = row_it->first;
                have_best = true;
            }
            ++row_it;
        }
    }

    Rational P = f.prec();
    if (!have_best) {
        out.finite = false;
        out.value = tail_lower_bound(P, m, x);
        return out;
    }
    if (row_it == f.terms().end()) {
        // scanned everything; certify that unseen rows beyond prec cannot win
        if (!(row_is_monotone(P, m, x) && row_cannot_improve(P, m, x, best, false))) {
            Rational n = P;
            while (!(row_is_monotone(n, m, x) && row_cannot_improve(n, m, x, best, false)))
                n += 1;
            throw PrecisionError("ord_at: precision " + rational_str(P) +
                                 " cannot separate the minimum; need q-precision " +
                                 rational_str(n));
        }
    }
    out.finite = true;
    out.value = best;
    out.witness = witness;
    return out;
}

Rational heisenberg_lower_bound(const Rational& N, i64 m, const Rational& x) {
    if (m < 0) throw DomainError("heisenberg_lower_bound: negative index");
    Rational fx = x - Rational(rat_floor(x));
    Rational v = N - m * fx * (1 - fx);
    return std::max(v, Rational(0));
}

XiSeries taylor_z(const FourierExpansion& f, i64 nu) {
    if (nu < 0) throw DomainError("taylor_z: negative order");
    if (f.rank() != 1) throw DomainError("taylor_z: rank-1 expansion required");
    if (f.den_z() != 1)
        throw DomainError("taylor_z: half-integral elliptic exponents not supported");
    if (!f.weight) throw DomainError("taylor_z: typed weight required");
    XiSeries out;
    out.nu = nu;
    out.claimed_weight = *f.weight + nu;
    FourierExpansion s(0, static_cast<i64>(f.den_q()), 1, f.prec_num());
    Integer fact(1);
    for (i64 i = 2; i <= nu; ++i) fact *= i;
    for (const auto& [k, v] : f.terms()) {
        Integer rp(1);
        for (i64 i = 0; i < nu; ++i) rp *= Integer(static_cast<long>(k.r[0]));
        if (rp == 0) continue;
        Rational add = v * Rational(rp) / Rational(fact);
        ExponentKey key{k.nq, {0, 0}};
        Rational cur = s.coeff_key(key);
        s.set(key, cur + add);
    }
    out.series = std::move(s);
    return out;
}

XiSeries xi_hat(const FourierExpansion& f, i64 nu) {
    if (nu < 0) throw DomainError("xi_hat: negative order");
    if (!f.weight) throw DomainError("xi_hat: typed weight required");
    if (f.rank() != 1 || !f.index || f.index->size() != 1)
        throw DomainError("xi_hat: rank-1 expansion with typed index required");
    i64 k = *f.weight;
    i64 m = (*f.index)[0];
    XiSeries out;
    out.nu = nu;
    out.claimed_weight = k + nu;
    FourierExpansion acc(0, static_cast<i64>(f.den_q()), 1, f.prec_num());
    for (i64 mu = 0; 2 * mu <= nu; ++mu) {
        if (mu >= 1 && k + nu - mu - 1 < 1)
            throw DomainError("xi_hat: weight " + std::to_string(k) +
                              " is too small for development order " + std::to_string(nu));
        Rational q(1);
        for (i64 i = 2; i <= mu; ++i) q /= i;
        for (i64 i = k + nu - mu - 1; i <= k + nu - 2; ++i) q /= i;
        Rational c = pow_rat_signed(rat(-m), mu) * q;
        FourierExpansion layer = taylor_z(f, nu - 2 * mu).series;
        for (i64 d = 0; d < mu; ++d) layer = q_derivative(layer);
        acc = acc + c * layer;
    }
    out.series = std::move(acc);
    return out;
}

ModularityCheck is_modular_form(const FourierExpansion& s, i64 k) {
    for (const auto& [key, v] : s.terms())
        if (key.r[0] != 0 || key.r[1] != 0)
            throw DomainError("is_modular_form: pure q-series required");
    if (s.den_q() != 1) throw DomainError("is_modular_form: integer q-exponents required");
    ModularityCheck out;
    if (k < 0 || k % 2 != 0) {
        out.modular = s.is_zero();
        return out;
    }
    i64 dim = dim_modular(k);
    i64 prec = s.prec_num();
    if (prec < dim + 2)
        throw PrecisionError("is_modular_form: need q-precision >= " + std::to_string(dim + 2));
    if (dim == 0) {
        out.modular = s.is_zero();
        return out;
    }
    auto mons = modular_monomials(k, prec);
    std::vector<RatRow> mat(static_cast<std::size_t>(dim));
    RatRow rhs(static_cast<std::size_t>(dim));
    for (i64 n = 0; n < dim; ++n) {
        RatRow row;
        for (const auto& mon : mons) row.push_back(mon.coeff_key(ExponentKey{n, {0, 0}}));
        mat[static_cast<std::size_t>(n)] = std::move(row);
        rhs[static_cast<std::size_t>(n)] = s.coeff_key(ExponentKey{n, {0, 0}});
    }
    auto sol = solve_square(mat, rhs);
    if (!sol) throw InternalError("monomial basis singular on its leading segment");
    FourierExpansion combo = FourierExpansion::zero(0, prec);
    for (std::size_t i = 0; i < mons.size(); ++i)
        combo = combo + (*sol)[i] * mons[i];
    if (agree(combo, s)) {
        out.modular = true;
        out.coords = std::move(*sol);
    }
    return out;
}

ModularityCheck is_modular_form(const XiSeries& s) {
    return is_modular_form(s.series, s.claimed_weight);
}

std::optional<i64> zero_order_at_origin(const FourierExpansion& f, i64 nu_max) {
    if (nu_max < 0) {
        if (!f.index || f.index->size() != 1)
            throw DomainError("zero_order_at_origin: typed index required for the default range");
        nu_max = 2 * (*f.index)[0] + 2;
    }
    for (i64 nu = 0; nu <= nu_max; ++nu)
        if (!taylor_z(f, nu).series.is_zero()) return nu;
    return std::nullopt;
}

} // namespace jf
