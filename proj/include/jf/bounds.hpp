#ifndef JF_BOUNDS_HPP
#define JF_BOUNDS_HPP

#include <optional>
#include <string>

#include "jf/bigfloat.hpp"
#include "jf/spaces.hpp"

namespace jf {

enum class BoundTheorem { refined, general, lattice, slope, aip, ffj_dim };

const char* bound_theorem_name(BoundTheorem t);

// Evaluation of one closed-form threshold.  Transcendental values are carried
// as certified enclosures at 256-bit working precision; slope and aip (and
// any other rational closed form) also fill exact_value.  applicable == false
// leaves value empty and explains why in reason.
struct BoundReport {
    BoundTheorem theorem = BoundTheorem::refined;
    i64 weight = 0;
    LatticeDescriptor lattice = LatticeDescriptor::A1(1);
    i64 index = 1;            // index m of the form (scaling multiple)
    i64 index_multiplier = 1; // subgroup index [SL2(Z):Gamma]
    std::optional<Rational> c1, c2;
    bool applicable = true;
    std::string reason;
    std::optional<Interval> value;
    std::optional<Rational> exact_value;
};

// Multiplicative functions prod_{p | t} (1 - p^-j), exact.
Rational psi1(i64 t);
Rational psi2(i64 t);
Rational sigma_over(i64 t); // sigma(t)/t

// e^gamma loglog x + 0.6483/loglog x as a certified enclosure; x > e required
// (the growth claims hold for x >= 3).
Interval robin_f(const Rational& x);

// Certified comparisons used by the small-t lemmas.
bool psi2_exceeds_basel(i64 t);                 // psi2(t) > 6/pi^2
bool robin_f_dominates_psi_ratio(i64 t);        // robin_f(t) >= psi2(t)/psi1(t), t >= 3

// dim M_k for level one and sum_{j=0}^{n} dim M_2j by the four-case closed
// form (validated against direct summation in the tests).
i64 dim_M(i64 k);
i64 sum_dim_M(i64 n);

// (k idx / 4) X loglog X with X = 2 pi^(2/3) m^(1/3) k^(-1/3) + 13.
BoundReport bound_refined(i64 k, i64 m, i64 idx);

// (k idx / 12)(A + C2) f(A + C2), A = (pi^2 m / (3 C1 k))^(1/3), valid only
// when the associated cubic is nonnegative on t >= 0.
BoundReport bound_general(i64 k, i64 m, i64 idx, const Rational& c1, const Rational& c2);

// C_l idx prod d_j^(2^(j-1-l)) k^(2^-l) m^(1-2^-l); applicable only when
// k < 3 2^(3-2^l) d_1 m.
BoundReport bound_lattice(i64 k, i64 m, const LatticeDescriptor& lat, i64 idx);

// 3 2^(3-2^l) prod d_j^(-2^(j-1)), an exact rational.
BoundReport slope_bound(const LatticeDescriptor& lat);
Rational slope_bound_exact(const LatticeDescriptor& lat);

// d k / 6: J_{k,dm}[q^m] = 0 whenever m > dk/6.
Rational aip_threshold(i64 k, i64 d);
BoundReport aip_threshold_report(i64 k, i64 d);

// The cubic-in-m lower bound for dim J_{k,m^3}[q^(Cm)]; positivity certified
// by interval arithmetic (exact when sqrt(C) is rational).
struct PolyLowerBound {
    bool applicable = false;
    std::string reason;
    Interval value;
    std::optional<Rational> exact_value;
    bool positive = false;
};

PolyLowerBound dim_lower_nontrivial(i64 k, i64 m, const Rational& C);

// #{(n, r) : 4 n m^3 < r^2, Cm <= n < m^3/4, 0 <= r <= m^3} by enumeration;
// Cm must be an integer and m small.
i64 r_count(i64 m, const Rational& C);

} // namespace jf

#endif
