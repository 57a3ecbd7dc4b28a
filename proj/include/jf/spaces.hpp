#ifndef JF_SPACES_HPP
#define JF_SPACES_HPP

#include <string>
#include <vector>

#include "jf/expansion.hpp"
#include "jf/linalg.hpp"

namespace jf {

enum class Flavor { weak, holomorphic };
enum class Invariance { none, plus };

// Rescaled root lattices A1(d1) (+) ... ; scalings positive, ascending.
struct LatticeDescriptor {
    std::vector<i64> scalings;
    int rank() const { return static_cast<int>(scalings.size()); }
    static LatticeDescriptor A1(i64 d) { return {{d}}; }
    friend bool operator==(const LatticeDescriptor&, const LatticeDescriptor&) = default;
};

struct SpaceSpec {
    i64 weight = 0;
    LatticeDescriptor lattice = LatticeDescriptor::A1(1);
    i64 index = 1;                 // multiple of the lattice index form
    Rational min_ord = Rational(0);
    Flavor flavor = Flavor::weak;
    Invariance invariance = Invariance::none;
};

struct ConstraintSystem {
    std::vector<ExponentKey> row_keys; // vanishing rows imposed (raw key units)
    std::vector<RatRow> rows;          // realized matrix, columns = candidates
    i64 plus_rows = 0;
    i64 active_rows = 0;               // rows that were not identically zero
    i64 rank = 0;                      // rank of the realized matrix
    bool reduced_rows = true;          // class-reduced row range was sound
};

struct SpaceBasis {
    SpaceSpec spec;
    i64 prec = 0;
    std::vector<FourierExpansion> elements;
    ConstraintSystem constraints;
    i64 dim() const { return static_cast<i64>(elements.size()); }
};

struct DimReport {
    i64 dim = 0;
    i64 active_rows = 0;
    i64 rank = 0;
    std::string method;
};

// dim M_k for level one (0 for k < 4 except k = 0, 0 for odd k), and the
// monomial exponents (a, b) with 4a + 6b = k, a descending.
i64 dim_modular(i64 k);
std::vector<std::pair<i64, i64>> eisenstein_monomials(i64 k);
i64 count_monomials(i64 k);
std::vector<FourierExpansion> modular_monomials(i64 k, i64 prec);

// Free-module basis of weak forms of weight k, index m for A1(1):
// E4^a E6^b phi_{-2,1}^j phi_{0,1}^(m-j), odd weights through phi_{-1,2}.
SpaceBasis weak_basis(i64 k, i64 m, i64 prec);

// Index-1 weak forms for A1(d1) (+) A1(d2) as tensor products of
// single-variable module generators.
SpaceBasis weak_basis_rank2(i64 k, i64 d1, i64 d2, i64 prec);

// Subspace of weak_basis(k - 12 ceil(N), m) * Delta^ceil(N) cut out by the
// singular coefficient rows (4nm < r^2), optionally with the plus-space
// symmetrization c(n,r) = c(n,-r).
SpaceBasis holomorphic_subspace(i64 k, i64 m, i64 prec, const Rational& min_ord = Rational(0),
                                Invariance inv = Invariance::none);

SpaceBasis basis_for(const SpaceSpec& spec, i64 prec);

// Dimension plus a record of how it was obtained: closed form where the
// structure theorem gives one, otherwise the realized constraint system.
// prec < 0 picks the minimal sound precision.
DimReport dim_report(const SpaceSpec& spec, i64 prec = -1);

// True iff the stored singular coefficients are consistent with dependence on
// (r^2 - 4nm, r mod 2m) only.  Used to justify the reduced row range.
bool singular_class_consistent(const FourierExpansion& f, i64 m);

i64 minimal_holomorphic_prec(i64 m, const Rational& min_ord);

} // namespace jf

#endif
