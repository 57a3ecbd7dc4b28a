#include "jf/bigfloat.hpp"

#include <algorithm>

namespace jf {

BigFloat BigFloat::from_rational(const Rational& x, mpfr_rnd_t rnd) {
    BigFloat b;
    mpfr_set_q(b.v_, x.get_mpq_t(), rnd);
    return b;
}

std::string BigFloat::str(int digits) const {
    char* s = nullptr;
    (void)mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s ? s : "?");
    mpfr_free_str(s);
    return out;
}

Interval Interval::exact(const Rational& x) {
    Interval i;
    i.lo = BigFloat::from_rational(x, MPFR_RNDD);
    i.hi = BigFloat::from_rational(x, MPFR_RNDU);
    return i;
}

Interval Interval::pi() {
    Interval i;
    mpfr_const_pi(i.lo.get(), MPFR_RNDD);
    mpfr_const_pi(i.hi.get(), MPFR_RNDU);
    return i;
}

Interval Interval::euler_gamma() {
    Interval i;
    mpfr_const_euler(i.lo.get(), MPFR_RNDD);
    mpfr_const_euler(i.hi.get(), MPFR_RNDU);
    return i;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r;
    mpfr_add(r.lo.get(), lo.get(), o.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), hi.get(), o.hi.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r;
    mpfr_sub(r.lo.get(), lo.get(), o.hi.get(), MPFR_RNDD);
    mpfr_sub(r.hi.get(), hi.get(), o.lo.get(), MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    // all four corner products, rounded both ways
    const BigFloat* as[2] = {&lo, &hi};
    const BigFloat* bs[2] = {&o.lo, &o.hi};
    Interval r;
    bool first = true;
    BigFloat t;
    for (const BigFloat* a : as)
        for (const BigFloat* b : bs) {
            mpfr_mul(t.get(), a->get(), b->get(), MPFR_RNDD);
            if (first || t.cmp(r.lo) < 0) r.lo = t;
            mpfr_mul(t.get(), a->get(), b->get(), MPFR_RNDU);
            if (first || t.cmp(r.hi) > 0) r.hi = t;
            first = false;
        }
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw DomainError("interval division by an interval containing 0");
    Interval inv;
    mpfr_ui_div(inv.lo.get(), 1, o.hi.get(), MPFR_RNDD);
    mpfr_ui_div(inv.hi.get(), 1, o.lo.get(), MPFR_RNDU);
    return *this * inv;
}

Interval Interval::cbrt() const {
    Interval r;
    mpfr_cbrt(r.lo.get(), lo.get(), MPFR_RNDD);
    mpfr_cbrt(r.hi.get(), hi.get(), MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(lo.get()) < 0) throw DomainError("interval sqrt of a negative interval");
    Interval r;
    mpfr_sqrt(r.lo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi.get(), hi.get(), MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo.get()) <= 0) throw DomainError("interval log requires a positive interval");
    Interval r;
    mpfr_log(r.lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(r.hi.get(), hi.get(), MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r;
    mpfr_exp(r.lo.get(), lo.get(), MPFR_RNDD);
    mpfr_exp(r.hi.get(), hi.get(), MPFR_RNDU);
    return r;
}

Interval Interval::pow(const Rational& e) const {
    if (mpfr_sgn(lo.get()) <= 0)
        throw DomainError("interval pow requires a positive base interval");
    return (exact(e) * log()).exp();
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo.get()) <= 0 && mpfr_sgn(hi.get()) >= 0;
}

double Interval::width() const {
    BigFloat w;
    mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
    return w.to_double();
}

std::string Interval::str(int digits) const {
    return "[" + lo.str(digits) + ", " + hi.str(digits) + "]";
}

} // namespace jf
