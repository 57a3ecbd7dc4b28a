#include "jf/ffj.hpp"

#include <algorithm>

namespace jf {

namespace {

Rational coeff_or_zero(const FourierExpansion& f, i64 n, i64 r) {
    if (f.rank() == 0) return r == 0 ? f.coeff(rat(n)) : Rational(0);
    return f.coeff(rat(n), {r});
}

// psi_m = sum_j v[offset + j] * basis_m[j]; the zero series keeps the order's
// type so downstream checks see a well-formed tuple.
std::vector<FourierExpansion> combine(const FFJTruncation& tr, const RatRow& v) {
    std::vector<FourierExpansion> psi;
    const i64 d = tr.lattice.scalings[0];
    for (i64 m = 0; m <= tr.order; ++m) {
        const auto& block = tr.per_order[static_cast<std::size_t>(m)];
        FourierExpansion acc;
        bool started = false;
        for (i64 j = 0; j < block.dim(); ++j) {
            const Rational& c = v[static_cast<std::size_t>(tr.block_offset[m] + j)];
            if (c == 0) continue;
            FourierExpansion t = c * block.elements[static_cast<std::size_t>(j)];
            acc = started ? acc + t : std::move(t);
            started = true;
        }
        if (!started) {
            acc = FourierExpansion::zero(m == 0 ? 0 : 1, tr.prec);
            acc.weight = tr.k;
            acc.index = m == 0 ? std::vector<i64>{} : std::vector<i64>{d * m};
        }
        psi.push_back(std::move(acc));
    }
    return psi;
}

SpaceSpec order_spec(i64 k, i64 d, i64 m, const Rational& min_ord) {
    SpaceSpec spec;
    spec.weight = k;
    spec.lattice = LatticeDescriptor::A1(d);
    spec.index = m;
    spec.min_ord = min_ord;
    spec.flavor = Flavor::holomorphic;
    spec.invariance = Invariance::plus;
    return spec;
}

} // namespace

FFJTruncation build_truncated_space(i64 k, i64 d, i64 order, i64 prec) {
    if (d < 1) throw DomainError("ffj: scaling d must be >= 1");
    if (order < 0) throw DomainError("ffj: order must be >= 0");
    if (prec < 0) prec = order + 1;
    if (prec <= order)
        throw PrecisionError("ffj: symmetry rows need prec > order, got prec = " +
                             std::to_string(prec));
    FFJTruncation tr;
    tr.k = k;
    tr.lattice = LatticeDescriptor::A1(d);
    tr.order = order;
    tr.prec = prec;
    tr.block_offset.push_back(0);
    for (i64 m = 0; m <= order; ++m) {
        i64 pm = std::max(prec, minimal_holomorphic_prec(d * m, Rational(0)));
        tr.per_order.push_back(basis_for(order_spec(k, d, m, Rational(0)), pm));
        tr.block_offset.push_back(tr.block_offset.back() + tr.per_order.back().dim());
    }
    const i64 total = tr.block_offset.back();
    for (i64 m = 1; m <= order; ++m) {
        for (i64 n = 0; n < m; ++n) {
            i64 rmax = isqrt_i64(4 * d * n * m);
            for (i64 r = 0; r <= rmax; ++r) {
                RatRow row(static_cast<std::size_t>(total), Rational(0));
                bool nonzero = false;
                const auto& bm = tr.per_order[static_cast<std::size_t>(m)];
                for (i64 j = 0; j < bm.dim(); ++j) {
                    Rational cv = coeff_or_zero(bm.elements[static_cast<std::size_t>(j)], n, r);
                    if (cv != 0) {
                        row[static_cast<std::size_t>(tr.block_offset[m] + j)] += cv;
                        nonzero = true;
                    }
                }
                const auto& bn = tr.per_order[static_cast<std::size_t>(n)];
                for (i64 j = 0; j < bn.dim(); ++j) {
                    Rational cv = coeff_or_zero(bn.elements[static_cast<std::size_t>(j)], m, r);
                    if (cv != 0) {
                        row[static_cast<std::size_t>(tr.block_offset[n] + j)] -= cv;
                        nonzero = true;
                    }
                }
                if (nonzero) tr.symmetry_rows.push_back(std::move(row));
            }
        }
    }
    NullspaceResult ns = nullspace(tr.symmetry_rows, total);
    tr.coordinates = std::move(ns.basis);
    tr.solved_dim = static_cast<i64>(tr.coordinates.size());
    for (const auto& v : tr.coordinates) tr.elements.push_back(combine(tr, v));
    return tr;
}

SlopeResult leading_order(const FFJTruncation& tr, const std::vector<FourierExpansion>& psi) {
    if (static_cast<i64>(psi.size()) != tr.order + 1)
        throw DomainError("leading_order: tuple size must be order + 1");
    for (i64 m = 0; m <= tr.order; ++m) {
        if (psi[static_cast<std::size_t>(m)].is_zero()) continue;
        SlopeResult s;
        s.finite = true;
        s.ord = m;
        if (m > 0) s.slope = rat(tr.k, m);
        return s;
    }
    SlopeResult s;
    s.finite = false;
    s.ord = tr.order + 1; // lower bound, not an attained order
    return s;
}

bool leading_coefficient_ord_check(const FFJTruncation& tr,
                                   const std::vector<FourierExpansion>& psi) {
    SlopeResult s = leading_order(tr, psi);
    if (!s.finite) return true;
    // ord_infty of the zero series reports its precision as a lower bound, so
    // the comparison below is sound in both branches.
    return ord_infty(psi[static_cast<std::size_t>(s.ord)]).value >= s.ord;
}

i64 dim_upper_FM(i64 k, i64 d) {
    if (k < 1 || d < 1) throw DomainError("dim_upper_FM: k, d must be >= 1");
    const i64 cap = k * d / 6;
    i64 total = 0;
    for (i64 m = 0; m <= cap; ++m) {
        if (m == 0) {
            total += dim_M(k);
            continue;
        }
        total += dim_report(order_spec(k, d, m, rat(m))).dim;
    }
    return total;
}

i64 filtered_dim(const FFJTruncation& tr, i64 min_m) {
    if (min_m < 0 || min_m > tr.order + 1) throw DomainError("filtered_dim: min_m out of range");
    const i64 total = tr.block_offset.back();
    std::vector<RatRow> rows = tr.symmetry_rows;
    for (i64 m = 0; m < min_m && m <= tr.order; ++m)
        for (i64 j = tr.block_offset[m]; j < tr.block_offset[m + 1]; ++j) {
            RatRow row(static_cast<std::size_t>(total), Rational(0));
            row[static_cast<std::size_t>(j)] = 1;
            rows.push_back(std::move(row));
        }
    return static_cast<i64>(nullspace(rows, total).basis.size());
}

FFJComparison truncated_vs_bound(i64 k, i64 d, i64 order) {
    FFJComparison rep;
    rep.k = k;
    rep.d = d;
    rep.order = order;
    rep.max_ord = k * d / 6;
    if (order < rep.max_ord)
        throw DomainError("truncated_vs_bound: order must be >= floor(kd/6)");
    rep.ceiling = dim_upper_FM(k, d);
    FFJTruncation tr = build_truncated_space(k, d, order);
    rep.solved_dim = tr.solved_dim;
    rep.dims_within = rep.solved_dim <= rep.ceiling;
    rep.orders_within = true;
    rep.leading_checks = true;
    for (const auto& psi : tr.elements) {
        SlopeResult s = leading_order(tr, psi);
        ++rep.ord_histogram[s.ord];
        if (!s.finite || s.ord > rep.max_ord) rep.orders_within = false;
        if (!leading_coefficient_ord_check(tr, psi)) rep.leading_checks = false;
    }
    rep.sound = rep.dims_within && rep.orders_within && rep.leading_checks;
    return rep;
}

} // namespace jf
