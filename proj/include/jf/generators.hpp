#ifndef JF_GENERATORS_HPP
#define JF_GENERATORS_HPP

#include <string>

#include "jf/expansion.hpp"

namespace jf {

// The standard cast.  eta and theta live on fractional exponent grids
// (den_q 24 resp. 8); everything else has integer q-exponents.
enum class GeneratorId {
    eta,      // Dedekind eta, q^(1/24) prod (1-q^n)
    theta,    // odd Jacobi theta in q^(1/8), zeta^(1/2)
    delta,    // discriminant, weight 12 cusp form
    e4,       // Eisenstein weight 4
    e6,       // Eisenstein weight 6
    phi_m2_1, // weak Jacobi form, weight -2 index 1
    phi_0_1,  // weak Jacobi form, weight 0 index 1
    phi_m1_2, // weak Jacobi form, weight -1 index 2
    wp_norm,  // normalized Weierstrass series: the 1/12 + divisor rows part
};

const char* generator_name(GeneratorId id);
GeneratorId parse_generator(const std::string& name); // accepts "phi-0-1" / "phi_0_1"

// prec is the truncation order in q units.  Results are cached per
// (generator, prec); the cache is transparent and can be disabled.
FourierExpansion generator(GeneratorId id, i64 prec);

FourierExpansion eisenstein(int k, i64 prec); // k in {4, 6}
FourierExpansion eta(i64 prec);
FourierExpansion theta(i64 prec);
FourierExpansion delta(i64 prec);
FourierExpansion phi_m2_1(i64 prec);
FourierExpansion phi_0_1(i64 prec);
FourierExpansion phi_m1_2(i64 prec);

// Multiplication by the normalized Weierstrass series: takes a weight w index 1
// form to weight w+2 index 1.  The elliptic-pole kernel acts by exact Laurent
// division of each q-row by zeta^-1 (1-zeta)^2; rows must vanish doubly at
// zeta = 1 or the operation is undefined.
FourierExpansion wp_multiply(const FourierExpansion& a);

void set_generator_cache_enabled(bool on);
void clear_generator_cache();

} // namespace jf

#endif
