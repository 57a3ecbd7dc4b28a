#include "jf/rational.hpp"

#include <cctype>
#include <limits>

namespace jf {

Rational rat(i64 num, i64 den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r;
    r.get_num() = Integer(static_cast<long>(num));
    r.get_den() = Integer(static_cast<long>(den));
    if (r.get_den() < 0) { r.get_num() = -r.get_num(); r.get_den() = -r.get_den(); }
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& x) {
    return x.get_str();
}

Rational parse_rational(const std::string& s) {
    auto bad = [&]() -> StructureError {
        return StructureError("not a rational: \"" + s + "\"");
    };
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw bad();
    std::size_t num_end = i;
    std::string den;
    if (i < s.size()) {
        if (s[i] != '/') throw bad();
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) throw bad();
        den = s.substr(den_begin);
    }
    Rational r;
    r.get_num().set_str(s.substr(0, num_end), 10);
    if (den.empty()) {
        r.get_den() = 1;
    } else {
        r.get_den().set_str(den, 10);
        if (r.get_den() == 0) throw bad();
    }
    r.canonicalize();
    return r;
}

Integer rat_floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Integer rat_ceil(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

i64 to_i64(const Integer& x) {
    if (!x.fits_slong_p()) throw DomainError("integer out of 64-bit range: " + x.get_str());
    long v = x.get_si();
    if (v < std::numeric_limits<i64>::min() || v > std::numeric_limits<i64>::max())
        throw DomainError("integer out of 64-bit range: " + x.get_str());
    return static_cast<i64>(v);
}

i64 floor_i64(const Rational& x) { return to_i64(rat_floor(x)); }
i64 ceil_i64(const Rational& x) { return to_i64(rat_ceil(x)); }

Rational pow_rat(const Rational& base, i64 e) {
    if (e < 0) throw DomainError("pow_rat: negative exponent");
    Rational acc = rat(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rational pow_rat_signed(const Rational& base, i64 e) {
    if (e >= 0) return pow_rat(base, e);
    if (base == 0) throw DomainError("pow_rat_signed: 0 to a negative power");
    return rat(1) / pow_rat(base, -e);
}

Integer isqrt_floor(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of a negative number");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

i64 isqrt_i64(i64 n) { return to_i64(isqrt_floor(Integer(static_cast<long>(n)))); }

bool rational_square_root(const Rational& x, Rational* root) {
    if (x < 0) return false;
    if (mpz_perfect_square_p(x.get_num().get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(x.get_den().get_mpz_t()) == 0) return false;
    if (root) {
        Rational r;
        mpz_sqrt(r.get_num().get_mpz_t(), x.get_num().get_mpz_t());
        mpz_sqrt(r.get_den().get_mpz_t(), x.get_den().get_mpz_t());
        *root = r;
    }
    return true;
}

} // namespace jf
