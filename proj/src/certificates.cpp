#include "jf/certificates.hpp"

#include <numeric>

namespace jf {

namespace {

// sum_{c=0}^{t-1} psi1(gcd(t,c)) max{N - m c(t-c)/t^2, 0}
Rational lemma_lhs(i64 t, i64 m_eff, i64 n_eff) {
    Rational s(0);
    for (i64 c = 0; c < t; ++c) {
        Rational forced = rat(n_eff) - rat(m_eff * c * (t - c), t * t);
        if (forced > 0) s += psi1(std::gcd(t, c)) * forced;
    }
    return s;
}

Rational entry_threshold(i64 t, i64 k_eff, i64 n_t) {
    return rat(t * (k_eff + n_t), 12) * psi2(t);
}

// Largest n >= 0 with lhs > t (k + n)/12 psi2(t), or -1 when none exists.
i64 maximal_n(i64 t, i64 k_eff, const Rational& lhs) {
    // n < 12 lhs / (t psi2(t)) - k
    Rational cap = 12 * lhs / (t * psi2(t)) - k_eff;
    Integer n = rat_ceil(cap) - 1;
    if (n < 0) return -1;
    return to_i64(n);
}

} // namespace

std::optional<VanishingCertificate> certify_vanishing(i64 k, i64 m, i64 n,
                                                      std::optional<i64> max_t) {
    if (k < 1 || m < 1 || n < 0) throw DomainError("certify_vanishing: needs k, m >= 1 and N >= 0");
    VanishingCertificate c;
    c.k = k;
    c.m = m;
    c.n = n;
    c.squared = (k % 2 != 0);
    c.k_eff = c.squared ? 2 * k : k;
    c.m_eff = c.squared ? 2 * m : m;
    c.n_eff = c.squared ? 2 * n : n;
    c.target = 2 * c.m_eff;
    c.total = 0;
    if (n == 0) return std::nullopt; // empty left side at every t
    for (i64 t = 1; max_t ? t <= *max_t : t * t <= 2 * c.m_eff || t == 1; ++t) {
        Rational lhs = lemma_lhs(t, c.m_eff, c.n_eff);
        i64 nt = maximal_n(t, c.k_eff, lhs);
        if (nt < 0) continue;
        CertificateEntry e;
        e.t = t;
        e.n_t = nt;
        e.lhs = lhs;
        e.threshold = entry_threshold(t, c.k_eff, nt);
        c.entries.push_back(e);
        c.total += rat(t * t) * psi2(t) * (nt + 1);
        if (c.total > c.target) return c;
    }
    return std::nullopt;
}

bool verify_certificate(const VanishingCertificate& c) {
    if (c.k < 1 || c.m < 1 || c.n < 1) return false;
    if (c.squared != (c.k % 2 != 0)) return false;
    i64 f = c.squared ? 2 : 1;
    if (c.k_eff != f * c.k || c.m_eff != f * c.m || c.n_eff != f * c.n) return false;
    if (c.target != 2 * c.m_eff) return false;
    if (c.entries.empty()) return false;
    Rational total(0);
    std::vector<i64> seen;
    for (const auto& e : c.entries) {
        if (e.t < 1 || e.n_t < 0) return false;
        for (i64 t : seen)
            if (t == e.t) return false;
        seen.push_back(e.t);
        Rational lhs = lemma_lhs(e.t, c.m_eff, c.n_eff);
        Rational thr = entry_threshold(e.t, c.k_eff, e.n_t);
        if (lhs != e.lhs || thr != e.threshold) return false;
        if (!(lhs > thr)) return false;
        total += rat(e.t * e.t) * psi2(e.t) * (e.n_t + 1);
    }
    if (total != c.total) return false;
    return total > c.target;
}

} // namespace jf
