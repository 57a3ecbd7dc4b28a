#ifndef JF_BIGFLOAT_HPP
#define JF_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "jf/rational.hpp"

namespace jf {

// 256-bit MPFR value with explicit rounding at every operation.  Only the
// interval layer below is used by the bound evaluators; proof-bearing code
// never touches floating point.
class BigFloat {
public:
    static constexpr mpfr_prec_t kBits = 256;

    BigFloat() { mpfr_init2(v_, kBits); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, kBits); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rational(const Rational& x, mpfr_rnd_t rnd);

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(const Rational& x) const { return mpfr_cmp_q(v_, x.get_mpq_t()); }

    std::string str(int digits = 35) const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

// Closed interval [lo, hi] with outward rounding; every operation is sound
// (the true real value of the expression lies inside).
struct Interval {
    BigFloat lo, hi;

    static Interval exact(const Rational& x);
    static Interval of(i64 x) { return exact(rat(x)); }
    static Interval pi();
    static Interval euler_gamma();

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const; // divisor must exclude 0

    Interval cbrt() const;
    Interval sqrt() const;  // requires lo >= 0
    Interval log() const;   // requires lo > 0
    Interval exp() const;
    Interval pow(const Rational& e) const; // requires lo > 0

    bool contains_zero() const;
    bool gt(const Rational& x) const { return lo.cmp(x) > 0; }
    bool ge(const Rational& x) const { return lo.cmp(x) >= 0; }
    bool lt(const Rational& x) const { return hi.cmp(x) < 0; }

    double width() const;
    std::string str(int digits = 35) const; // "[lo, hi]"
};

} // namespace jf

#endif
