#ifndef JF_RATIONAL_HPP
#define JF_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "jf/errors.hpp"

namespace jf {

using i64 = std::int64_t;
using Integer = mpz_class;

// Exact rational arithmetic, always kept in lowest terms with positive
// denominator (GMP canonical form).  Printed as "p" or "p/q".
using Rational = mpq_class;

Rational rat(i64 num, i64 den = 1);

std::string rational_str(const Rational& x);

// Strict inverse of rational_str: optional '-', digits, optional "/digits".
// Throws StructureError on anything else (including "/0").
Rational parse_rational(const std::string& s);

Integer rat_floor(const Rational& x);
Integer rat_ceil(const Rational& x);

// Checked narrowing; throws DomainError when out of i64 range.
i64 to_i64(const Integer& x);

i64 floor_i64(const Rational& x);
i64 ceil_i64(const Rational& x);

// base^e for e >= 0 (pow_rat) or any e with base != 0 (pow_rat_signed).
Rational pow_rat(const Rational& base, i64 e);
Rational pow_rat_signed(const Rational& base, i64 e);

// floor(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n);
i64 isqrt_i64(i64 n);

// True iff x is the square of a rational; if so *root gets the nonnegative root.
bool rational_square_root(const Rational& x, Rational* root);

} // namespace jf

#endif
