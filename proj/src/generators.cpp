#include "jf/generators.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace jf {

namespace {

std::mutex cache_mutex;
bool cache_enabled = true;
std::map<std::pair<int, i64>, FourierExpansion> cache;

FourierExpansion build_eta(i64 prec) {
    FourierExpansion f(0, 24, 1, 24 * prec);
    // pentagonal numbers: exponent (6j-1)^2/24, sign (-1)^j, j over all integers
    for (i64 j = 0;; ++j) {
        i64 lo = (6 * j - 1) * (6 * j - 1);
        i64 hi = (6 * j + 1) * (6 * j + 1);
        if (lo >= 24 * prec && hi >= 24 * prec) break;
        Rational s = rat((j % 2 == 0) ? 1 : -1);
        if (lo < 24 * prec) f.set(ExponentKey{lo, {0, 0}}, s);
        if (j > 0 && hi < 24 * prec) f.set(ExponentKey{hi, {0, 0}}, s);
    }
    f.index = std::vector<i64>{};
    return f;
}

FourierExpansion build_theta_sum(i64 prec) {
    FourierExpansion f(1, 8, 2, 8 * prec);
    for (i64 n = 1; n * n < 8 * prec; n += 2) {
        Rational sp = rat(n % 4 == 1 ? 1 : -1);
        Rational sm = rat((-n % 4 + 4) % 4 == 1 ? 1 : -1);
        f.set(ExponentKey{n * n, {n, 0}}, sp);
        f.set(ExponentKey{n * n, {-n, 0}}, sm);
    }
    return f;
}

FourierExpansion build_theta_product(i64 prec) {
    // -q^(1/8) zeta^(-1/2) prod_n (1-q^(n-1) zeta)(1-q^n zeta^-1)(1-q^n)
    i64 margin = 8 * (prec + 2);
    FourierExpansion acc(1, 8, 2, margin);
    acc.set(ExponentKey{1, {-1, 0}}, rat(-1));
    auto binomial = [&](i64 nq, i64 r) {
        FourierExpansion b(1, 8, 2, margin);
        b.set(ExponentKey{0, {0, 0}}, rat(1));
        b.set(ExponentKey{nq, {r, 0}}, rat(-1));
        return b;
    };
    for (i64 n = 1; n <= prec + 1; ++n) {
        acc = acc * binomial(8 * (n - 1), 2);
        acc = acc * binomial(8 * n, -2);
        acc = acc * binomial(8 * n, 0);
    }
    return acc.truncated(prec);
}

FourierExpansion build_theta(i64 prec) {
    FourierExpansion s = build_theta_sum(prec);
    FourierExpansion p = build_theta_product(prec);
    if (!(s.terms() == p.terms() && s.den_q() == p.den_q() && s.den_z() == p.den_z()))
        throw InternalError("theta: sum and product constructions disagree");
    return s;
}

FourierExpansion build_eisenstein(int k, i64 prec) {
    if (k != 4 && k != 6) throw DomainError("eisenstein: only weights 4 and 6");
    std::vector<Integer> sig(static_cast<std::size_t>(std::max<i64>(prec, 1)));
    for (i64 d = 1; d < prec; ++d) {
        Integer dp(static_cast<long>(d));
        Integer dk = dp * dp * dp;
        if (k == 6) dk *= dp * dp;
        for (i64 n = d; n < prec; n += d) sig[static_cast<std::size_t>(n)] += dk;
    }
    FourierExpansion f(0, 1, 1, prec);
    f.set(ExponentKey{0, {0, 0}}, rat(1));
    Rational c = rat(k == 4 ? 240 : -504);
    for (i64 n = 1; n < prec; ++n) {
        Rational v = c * Rational(sig[static_cast<std::size_t>(n)]);
        f.set(ExponentKey{n, {0, 0}}, v);
    }
    f.weight = k;
    f.index = std::vector<i64>{};
    return f;
}

FourierExpansion build_delta(i64 prec) {
    FourierExpansion a = pow(eta(prec + 1), 24).truncated(rat(prec));
    FourierExpansion e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
    FourierExpansion b = rat(1, 1728) * (pow(e4, 3) - pow(e6, 2));
    if (!agree(a, b)) throw InternalError("delta: eta^24 and (E4^3-E6^2)/1728 disagree");
    a.weight = 12;
    a.index = std::vector<i64>{};
    return a;
}

void expect_row0(const FourierExpansion& f, std::map<i64, Rational> want, const char* who) {
    for (const auto& [k, v] : f.terms()) {
        if (k.nq != 0) break;
        auto it = want.find(k.r[0]);
        if (it == want.end() || it->second != v)
            throw InternalError(std::string(who) + ": unexpected q^0 row");
        want.erase(it);
    }
    if (!want.empty()) throw InternalError(std::string(who) + ": q^0 row incomplete");
}

FourierExpansion build_phi_m2_1(i64 prec) {
    FourierExpansion th = theta(prec + 2);
    FourierExpansion h6 = pow(eta(prec + 2), 6);
    FourierExpansion f = ((th * th) * invert_unit(h6)).truncated(rat(prec));
    if (f.den_q() != 1 || f.den_z() != 1)
        throw InternalError("phi_m2_1: fractional exponents did not cancel");
    expect_row0(f, {{-1, rat(1)}, {0, rat(-2)}, {1, rat(1)}}, "phi_m2_1");
    f.weight = -2;
    f.index = std::vector<i64>{1};
    validate_weak_support(f);
    return f;
}

// 1/12 + sum_{n>=1} sum_{d|n} d (zeta^d - 2 + zeta^-d) q^n; the elliptic-pole
// kernel of the Weierstrass series is applied separately by wp_multiply.
FourierExpansion build_wp_polynomial_part(i64 prec) {
    FourierExpansion f(1, 1, 1, prec);
    f.set(ExponentKey{0, {0, 0}}, rat(1, 12));
    for (i64 d = 1; d < prec; ++d)
        for (i64 n = d; n < prec; n += d) {
            f.set(ExponentKey{n, {d, 0}}, f.coeff_key(ExponentKey{n, {d, 0}}) + d);
            f.set(ExponentKey{n, {-d, 0}}, f.coeff_key(ExponentKey{n, {-d, 0}}) + d);
            f.set(ExponentKey{n, {0, 0}}, f.coeff_key(ExponentKey{n, {0, 0}}) - 2 * d);
        }
    return f;
}

// Divide each q-row by zeta^-1 (1-zeta)^2.  Exact iff every row vanishes
// doubly at zeta = 1.
FourierExpansion wp_kernel_part(const FourierExpansion& a) {
    FourierExpansion out(1, 1, 1, a.prec_num());
    auto row_begin = a.terms().begin();
    while (row_begin != a.terms().end()) {
        i64 n = row_begin->first.nq;
        auto row_end = row_begin;
        i64 rmin = row_begin->first.r[0], rmax = rmin;
        while (row_end != a.terms().end() && row_end->first.nq == n) {
            rmax = row_end->first.r[0];
            ++row_end;
        }
        std::vector<Rational> av(static_cast<std::size_t>(rmax - rmin + 1));
        for (auto it = row_begin; it != row_end; ++it)
            av[static_cast<std::size_t>(it->first.r[0] - rmin)] = it->second;
        // ascending division of sum a_i zeta^i by (1 - zeta)^2:
        //   q_i = a_i + 2 q_{i-1} - q_{i-2}; exact iff the last two q vanish
        i64 d = rmax - rmin;
        std::vector<Rational> qv(static_cast<std::size_t>(d + 1));
        for (i64 i = 0; i <= d; ++i) {
            Rational v = av[static_cast<std::size_t>(i)];
            if (i >= 1) v += 2 * qv[static_cast<std::size_t>(i - 1)];
            if (i >= 2) v -= qv[static_cast<std::size_t>(i - 2)];
            qv[static_cast<std::size_t>(i)] = v;
        }
        bool exact = (d >= 1 ? qv[static_cast<std::size_t>(d)] == 0 : true) &&
                     qv[static_cast<std::size_t>(std::max<i64>(d - 1, 0))] == 0;
        if (d == 0) exact = qv[0] == 0;
        if (!exact)
            throw DomainError("kernel division: row q^" + std::to_string(n) +
                              " does not vanish doubly at zeta=1");
        for (i64 i = 0; i + 2 <= d; ++i)
            if (qv[static_cast<std::size_t>(i)] != 0)
                out.set(ExponentKey{n, {rmin + 1 + i, 0}}, qv[static_cast<std::size_t>(i)]);
        row_begin = row_end;
    }
    return out;
}

FourierExpansion build_phi_0_1(i64 prec) {
    FourierExpansion f = rat(12) * wp_multiply(phi_m2_1(prec));
    expect_row0(f, {{-1, rat(1)}, {0, rat(10)}, {1, rat(1)}}, "phi_0_1");
    // the zeroth Taylor coefficient in zeta must be the constant 12
    for (i64 n = 0; n < prec; ++n) {
        Rational s(0);
        for (const auto& [k, v] : f.terms())
            if (k.nq == n) s += v;
        if (s != (n == 0 ? rat(12) : rat(0)))
            throw InternalError("phi_0_1: zeta -> 1 specialization is not 12");
    }
    f.weight = 0;
    f.index = std::vector<i64>{1};
    validate_weak_support(f);
    return f;
}

FourierExpansion build_phi_m1_2(i64 prec) {
    FourierExpansion th2 = scale_elliptic(theta(prec + 2), 2);
    FourierExpansion h3 = pow(eta(prec + 2), 3);
    FourierExpansion f = (th2 * invert_unit(h3)).truncated(rat(prec));
    if (f.den_q() != 1 || f.den_z() != 1)
        throw InternalError("phi_m1_2: fractional exponents did not cancel");
    expect_row0(f, {{-1, rat(-1)}, {1, rat(1)}}, "phi_m1_2");
    f.weight = -1;
    f.index = std::vector<i64>{2};
    validate_weak_support(f);
    return f;
}

FourierExpansion build(GeneratorId id, i64 prec) {
    switch (id) {
        case GeneratorId::eta: return build_eta(prec);
        case GeneratorId::theta: return build_theta(prec);
        case GeneratorId::delta: return build_delta(prec);
        case GeneratorId::e4: return build_eisenstein(4, prec);
        case GeneratorId::e6: return build_eisenstein(6, prec);
        case GeneratorId::phi_m2_1: return build_phi_m2_1(prec);
        case GeneratorId::phi_0_1: return build_phi_0_1(prec);
        case GeneratorId::phi_m1_2: return build_phi_m1_2(prec);
        case GeneratorId::wp_norm: return build_wp_polynomial_part(prec);
    }
    throw InternalError("unknown generator id");
}

} // namespace

const char* generator_name(GeneratorId id) {
    switch (id) {
        case GeneratorId::eta: return "eta";
        case GeneratorId::theta: return "theta";
        case GeneratorId::delta: return "delta";
        case GeneratorId::e4: return "e4";
        case GeneratorId::e6: return "e6";
        case GeneratorId::phi_m2_1: return "phi-m2-1";
        case GeneratorId::phi_0_1: return "phi-0-1";
        case GeneratorId::phi_m1_2: return "phi-m1-2";
        case GeneratorId::wp_norm: return "wp-norm";
    }
    return "?";
}

GeneratorId parse_generator(const std::string& name) {
    std::string s = name;
    std::replace(s.begin(), s.end(), '_', '-');
    for (GeneratorId id : {GeneratorId::eta, GeneratorId::theta, GeneratorId::delta,
                           GeneratorId::e4, GeneratorId::e6, GeneratorId::phi_m2_1,
                           GeneratorId::phi_0_1, GeneratorId::phi_m1_2, GeneratorId::wp_norm})
        if (s == generator_name(id)) return id;
    throw DomainError("unknown generator \"" + name + "\"");
}

FourierExpansion generator(GeneratorId id, i64 prec) {
    if (prec < 1) throw DomainError("generator: precision must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (cache_enabled) {
            auto it = cache.find({static_cast<int>(id), prec});
            if (it != cache.end()) return it->second;
        }
    }
    FourierExpansion f = build(id, prec);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (cache_enabled) cache.emplace(std::make_pair(static_cast<int>(id), prec), f);
    }
    return f;
}

FourierExpansion eisenstein(int k, i64 prec) {
    return generator(k == 4 ? GeneratorId::e4 : GeneratorId::e6, prec);
}
FourierExpansion eta(i64 prec) { return generator(GeneratorId::eta, prec); }
FourierExpansion theta(i64 prec) { return generator(GeneratorId::theta, prec); }
FourierExpansion delta(i64 prec) { return generator(GeneratorId::delta, prec); }
FourierExpansion phi_m2_1(i64 prec) { return generator(GeneratorId::phi_m2_1, prec); }
FourierExpansion phi_0_1(i64 prec) { return generator(GeneratorId::phi_0_1, prec); }
FourierExpansion phi_m1_2(i64 prec) { return generator(GeneratorId::phi_m1_2, prec); }

FourierExpansion wp_multiply(const FourierExpansion& a) {
    if (a.rank() != 1) throw DomainError("wp_multiply: rank-1 input required");
    if (!a.index || *a.index != std::vector<i64>{1})
        throw DomainError("wp_multiply: index-1 input required");
    if (a.den_q() != 1 || a.den_z() != 1)
        throw DomainError("wp_multiply: integer exponents required");
    i64 ea = a.lead_nq().value_or(a.prec_num());
    i64 pp = std::max<i64>(a.prec_num() - ea, 1);
    FourierExpansion poly = generator(GeneratorId::wp_norm, pp);
    FourierExpansion out = poly * a + wp_kernel_part(a);
    out.weight = a.weight ? std::optional<i64>(*a.weight + 2) : std::nullopt;
    out.index = a.index;
    return out;
}

void set_generator_cache_enabled(bool on) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache_enabled = on;
    if (!on) cache.clear();
}

void clear_generator_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.clear();
}

} // namespace jf
