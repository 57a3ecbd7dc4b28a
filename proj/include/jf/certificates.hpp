#ifndef JF_CERTIFICATES_HPP
#define JF_CERTIFICATES_HPP

#include <optional>
#include <vector>

#include "jf/bounds.hpp"

namespace jf {

// One torsion level t contributing to the zero count: at every t-torsion point
// the vanishing order forced by the q-order N exceeds (k + n_t)/12 times the
// normalizing factor, so the W(t) orbit contributes t^2 psi2(t) (n_t + 1)
// zeros.  lhs and threshold store both sides of the strict inequality.
struct CertificateEntry {
    i64 t = 1;
    i64 n_t = 0;
    Rational lhs;       // sum_c psi1(gcd(t,c)) max{N - m c(t-c)/t^2, 0}
    Rational threshold; // t (k + n_t)/12 psi2(t)
};

// An exactly-rational, independently re-checkable proof that J_{k,m}[q^N] = 0:
// the recorded torsion multiplicities add up to more than the 2m zeros any
// nonzero form of index m can have.  Odd weights route through the square of
// the form, so the inequalities are evaluated at (2k, 2m, 2N); the `squared`
// flag records that reduction and k_eff/m_eff/n_eff hold the parameters the
// entries actually use.
struct VanishingCertificate {
    i64 k = 0, m = 0, n = 0; // the claim: J_{k,m}[q^n] = 0
    bool squared = false;
    i64 k_eff = 0, m_eff = 0, n_eff = 0;
    std::vector<CertificateEntry> entries;
    Rational total;  // sum_t t^2 psi2(t) (n_t + 1), exceeds target on success
    i64 target = 0;  // 2 m_eff
};

// Greedy search: t ascending (by default while t^2 <= 2 m_eff, or up to max_t
// when given), maximal n_t per t, stopping as soon as total > 2 m_eff.
// nullopt means inconclusive, never a disproof.  N = 0 is always inconclusive.
std::optional<VanishingCertificate> certify_vanishing(i64 k, i64 m, i64 n,
                                                      std::optional<i64> max_t = std::nullopt);

// Re-derives every inequality and the total from the claim alone and compares
// with the stored data; false on the first mismatch, duplicate t, or a total
// that does not clear the target.
bool verify_certificate(const VanishingCertificate& c);

} // namespace jf

#endif
