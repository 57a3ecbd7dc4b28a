#ifndef JF_FFJ_HPP
#define JF_FFJ_HPP

#include <map>
#include <optional>
#include <vector>

#include "jf/bounds.hpp"
#include "jf/orders.hpp"
#include "jf/spaces.hpp"

namespace jf {

// Finite-order model of a symmetric formal Fourier-Jacobi series of weight k
// over the rank-1 lattice A1(d): a tuple (psi_0, ..., psi_M) with psi_m in
// J^+_{k,dm}, subject to every symmetry constraint f_m(n, r) = f_n(m, r) that
// is visible below the working precision.  Unknowns are the coordinates of
// each psi_m in the per-order holomorphic basis, laid out in contiguous
// blocks; block_offset[m] is where order m starts (block_offset[M+1] = total).
struct FFJTruncation {
    i64 k = 0;
    LatticeDescriptor lattice = LatticeDescriptor::A1(1);
    i64 order = 0; // M
    i64 prec = 0;
    std::vector<SpaceBasis> per_order;
    std::vector<i64> block_offset;
    std::vector<RatRow> symmetry_rows;
    std::vector<RatRow> coordinates; // nullspace basis of symmetry_rows
    std::vector<std::vector<FourierExpansion>> elements;
    i64 solved_dim = 0;
};

struct SlopeResult {
    bool finite = false; // false: all psi_m = 0 up to M, so ord >= M+1
    i64 ord = 0;         // least m with psi_m != 0, or M+1 as the sentinel
    std::optional<Rational> slope; // k/ord, absent when ord = 0 or infinite
};

// prec defaults to M+1, the least value that defines every symmetry row.
FFJTruncation build_truncated_space(i64 k, i64 d, i64 order, i64 prec = -1);

SlopeResult leading_order(const FFJTruncation& tr, const std::vector<FourierExpansion>& psi);

// ord_infty(psi_mhat) >= mhat for the leading order mhat; vacuously true for
// the zero tuple.
bool leading_coefficient_ord_check(const FFJTruncation& tr,
                                   const std::vector<FourierExpansion>& psi);

// sum_{m=0}^{floor(kd/6)} dim J^+_{k,dm}[q^m], the dimension ceiling for the
// symmetric space implied by the slope bound.
i64 dim_upper_FM(i64 k, i64 d);

// Dimension of the subspace with psi_0 = ... = psi_{min_m - 1} = 0, found by
// appending unit rows for those blocks.
i64 filtered_dim(const FFJTruncation& tr, i64 min_m);

struct FFJComparison {
    i64 k = 0, d = 0, order = 0;
    i64 solved_dim = 0;
    i64 ceiling = 0;      // dim_upper_FM(k, d)
    i64 max_ord = 0;      // floor(kd/6), the slope-bound cap on leading orders
    std::map<i64, i64> ord_histogram;
    bool dims_within = false;
    bool orders_within = false;
    bool leading_checks = false;
    bool sound = false; // all three
};

// pre: order >= floor(kd/6).
FFJComparison truncated_vs_bound(i64 k, i64 d, i64 order);

} // namespace jf

#endif
