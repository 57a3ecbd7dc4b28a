#ifndef JF_ORDERS_HPP
#define JF_ORDERS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "jf/expansion.hpp"

namespace jf {

// Result of an order computation.  When the minimum is realized by a stored
// term, finite = true and value/witness are exact.  A series with no stored
// terms yields finite = false and value = a certified lower bound derived
// from the precision.
struct OrdResult {
    bool finite = false;
    Rational value;
    ExponentKey witness; // raw key units, meaningful when finite
};

// Smallest q-exponent with a nonzero coefficient.
OrdResult ord_infty(const FourierExpansion& f);

// min over stored terms of n + r x + m x^2 for x in [0,1); exact rational
// arithmetic with a certified scan cutoff.  Throws PrecisionError when the
// stored precision cannot separate the minimum from unseen terms.
OrdResult ord_at(const FourierExpansion& f, const Rational& x);

// max(N - m (x - floor x)(1 - x + floor x), 0): what vanishing order N at
// infinity forces at the torsion point x via the Heisenberg slash.
Rational heisenberg_lower_bound(const Rational& N, i64 m, const Rational& x);

// Taylor coefficient in the elliptic direction: sum_r c(n,r) r^nu / nu! q^n.
// The claimed weight k + nu is recorded for the modularity check.
struct XiSeries {
    i64 nu = 0;
    i64 claimed_weight = 0;
    FourierExpansion series; // rank 0
};

XiSeries taylor_z(const FourierExpansion& f, i64 nu);

// The weight-corrected development coefficient: a linear combination of
// q d/dq derivatives of lower taylor_z layers that transforms with weight
// k + nu when f is a Jacobi form of weight k.  Normalized so that no
// transcendental constants appear.
XiSeries xi_hat(const FourierExpansion& f, i64 nu);

struct ModularityCheck {
    bool modular = false;
    std::vector<Rational> coords; // against E4^a E6^b monomials, a descending
};

// Solve on the first dim M_k coefficients, then verify every further stored
// coefficient exactly.
ModularityCheck is_modular_form(const FourierExpansion& s, i64 k);
ModularityCheck is_modular_form(const XiSeries& s);

// Smallest nu <= nu_max with taylor_z(f, nu) != 0, or nullopt when all such
// layers vanish within precision.  nu_max < 0 picks 2m + 2.
std::optional<i64> zero_order_at_origin(const FourierExpansion& f, i64 nu_max = -1);

} // namespace jf

#endif
