#ifndef JF_EXPANSION_HPP
#define JF_EXPANSION_HPP

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "jf/rational.hpp"

namespace jf {

// One monomial exponent q^(nq/den_q) * prod_i zeta_i^(r[i]/den_z).  The rank
// (number of elliptic variables actually in use, 0..2) lives on the expansion;
// unused r slots stay 0 so keys order consistently at any rank.
struct ExponentKey {
    i64 nq = 0;
    std::array<i64, 2> r{0, 0};
    friend auto operator<=>(const ExponentKey&, const ExponentKey&) = default;
};

// Truncated Fourier expansion sum c(n,r) q^n zeta^r with exact rational
// coefficients.  Exponents are stored as integer numerators over fixed
// denominators den_q in {1,8,24} and den_z in {1,2}; prec_num is the
// truncation order in the same units (coefficients are defined strictly
// below it).  Rank 0 means a pure q-series.
//
// weight/index are optional bookkeeping: arithmetic propagates them when both
// operands carry them and drops them otherwise ("untyped").  index holds one
// scaling per elliptic variable.
class FourierExpansion {
public:
    using Map = std::map<ExponentKey, Rational>;

    FourierExpansion() = default;
    FourierExpansion(int rank, i64 den_q, i64 den_z, i64 prec_num);

    static FourierExpansion zero(int rank, i64 prec_num);
    static FourierExpansion constant(const Rational& value, i64 prec_num);

    int rank() const { return rank_; }
    i64 den_q() const { return den_q_; }
    i64 den_z() const { return den_z_; }
    i64 prec_num() const { return prec_num_; }
    Rational prec() const;                 // truncation order in q units
    const Map& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }

    std::optional<i64> weight;             // modular weight, when known
    std::optional<std::vector<i64>> index; // per-variable scalings, size == rank

    // Builder access in raw stored units; rejects exponents at or beyond prec
    // and r entries in unused slots.  Zero values erase.
    void set(const ExponentKey& key, const Rational& value);

    // Coefficient of q^n zeta^r, n in q units, r in zeta units (scaled by
    // den_z internally).  Throws PrecisionError at or beyond prec; exponents
    // not representable on this expansion's grid are exact zeros.
    Rational coeff(const Rational& n, const std::vector<i64>& r = {}) const;
    Rational coeff_key(const ExponentKey& key) const; // raw units, same prec check

    std::optional<i64> lead_nq() const;    // smallest stored q-exponent numerator

    FourierExpansion truncated(const Rational& new_prec) const;

    FourierExpansion operator-() const;
    friend FourierExpansion operator+(const FourierExpansion& a, const FourierExpansion& b);
    friend FourierExpansion operator-(const FourierExpansion& a, const FourierExpansion& b);
    friend FourierExpansion operator*(const FourierExpansion& a, const FourierExpansion& b);
    friend FourierExpansion operator*(const Rational& c, const FourierExpansion& a);

    friend bool operator==(const FourierExpansion& a, const FourierExpansion& b);

    // Reduce den_q to 1 when every stored exponent allows it (prec is floored
    // to the coarser grid), likewise den_z.  Arithmetic does this on results.
    void normalize();

    friend FourierExpansion invert_unit(const FourierExpansion& a);
    friend FourierExpansion q_derivative(const FourierExpansion& a);
    friend FourierExpansion scale_elliptic(const FourierExpansion& a, i64 c);

private:
    int rank_ = 0;
    i64 den_q_ = 1;
    i64 den_z_ = 1;
    i64 prec_num_ = 0;
    Map c_;

    void check_key(const ExponentKey& key) const;
};

FourierExpansion pow(const FourierExpansion& a, i64 e);

// Inverse of a unit q-series: rank 0 or all-zero elliptic exponents, nonzero
// leading coefficient.  Result precision drops to prec - 2*lead.
FourierExpansion invert_unit(const FourierExpansion& a);

// q d/dq; multiplies c(n,r) by n.  Drops the weight tag, keeps index.
FourierExpansion q_derivative(const FourierExpansion& a);

// zeta -> zeta^c on every elliptic variable: r *= c, scalings *= c^2.
FourierExpansion scale_elliptic(const FourierExpansion& a, i64 c);

// Two single-variable expansions in independent elliptic variables combined
// into one rank-2 expansion; scalings concatenate.
FourierExpansion tensor_product(const FourierExpansion& a, const FourierExpansion& b);

// Requires a typed index; throws DomainError when some stored term violates
// r_i^2 <= 4 n m_i + m_i^2 in any variable (after clearing denominators).
void validate_weak_support(const FourierExpansion& a);

// Equal on every exponent below the smaller precision.
bool agree(const FourierExpansion& a, const FourierExpansion& b);

} // namespace jf

#endif
