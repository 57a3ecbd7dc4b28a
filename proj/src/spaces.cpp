#include "jf/spaces.hpp"

#include <algorithm>
#include <map>

#include "jf/generators.hpp"

namespace jf {

i64 dim_modular(i64 k) {
    if (k < 0 || k % 2 != 0) return 0;
    return (k % 12 == 2) ? k / 12 : k / 12 + 1;
}

std::vector<std::pair<i64, i64>> eisenstein_monomials(i64 k) {
    std::vector<std::pair<i64, i64>> out;
    if (k < 0 || k % 2 != 0) return out;
    for (i64 a = k / 4; a >= 0; --a) {
        i64 rem = k - 4 * a;
        if (rem % 6 == 0) out.emplace_back(a, rem / 6);
    }
    return out;
}

i64 count_monomials(i64 k) { return static_cast<i64>(eisenstein_monomials(k).size()); }

std::vector<FourierExpansion> modular_monomials(i64 k, i64 prec) {
    std::vector<FourierExpansion> out;
    auto mons = eisenstein_monomials(k);
    if (mons.empty()) return out;
    FourierExpansion e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
    for (auto [a, b] : mons) {
        FourierExpansion f = pow(e4, a) * pow(e6, b);
        f.weight = k;
        f.index = std::vector<i64>{};
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

SpaceSpec rank1_spec(i64 k, i64 m, const Rational& min_ord, Flavor fl, Invariance inv) {
    SpaceSpec s;
    s.weight = k;
    s.lattice = LatticeDescriptor::A1(1);
    s.index = m;
    s.min_ord = min_ord;
    s.flavor = fl;
    s.invariance = inv;
    return s;
}

FourierExpansion linear_combination(const std::vector<FourierExpansion>& els, const RatRow& v) {
    FourierExpansion acc;
    bool started = false;
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (v[i] == 0) continue;
        FourierExpansion t = v[i] * els[i];
        acc = started ? acc + t : std::move(t);
        started = true;
    }
    if (!started) throw InternalError("linear combination of nothing");
    return acc;
}

} // namespace

SpaceBasis weak_basis(i64 k, i64 m, i64 prec) {
    if (m < 0) throw DomainError("weak_basis: negative index");
    if (prec < 1) throw DomainError("weak_basis: precision must be >= 1");
    SpaceBasis out;
    out.spec = rank1_spec(k, m, Rational(0), Flavor::weak, Invariance::none);
    out.prec = prec;
    if (k % 2 != 0) {
        if (m < 2) return out;
        FourierExpansion f = phi_m1_2(prec);
        SpaceBasis inner = weak_basis(k + 1, m - 2, prec);
        for (const auto& w : inner.elements) {
            FourierExpansion el = f * w;
            validate_weak_support(el);
            out.elements.push_back(std::move(el));
        }
        return out;
    }
    FourierExpansion p2 = phi_m2_1(prec), p0 = phi_0_1(prec);
    std::vector<FourierExpansion> pow2(static_cast<std::size_t>(m + 1)),
        pow0(static_cast<std::size_t>(m + 1));
    for (i64 j = 0; j <= m; ++j) {
        pow2[static_cast<std::size_t>(j)] = pow(p2, j);
        pow0[static_cast<std::size_t>(j)] = pow(p0, j);
    }
    for (i64 j = 0; j <= m; ++j) {
        auto mons = modular_monomials(k + 2 * j, prec);
        if (mons.empty()) continue;
        FourierExpansion phi_part =
            pow2[static_cast<std::size_t>(j)] * pow0[static_cast<std::size_t>(m - j)];
        for (const auto& mon : mons) {
            FourierExpansion el = mon * phi_part;
            validate_weak_support(el);
            out.elements.push_back(std::move(el));
        }
    }
    return out;
}

namespace {

// Module generators of single-variable weak forms of index d with their
// weights: the even tower phi_{-2,1}^j phi_{0,1}^(d-j), then the odd tower
// phi_{-1,2} times the index d-2 even tower.
std::vector<FourierExpansion> module_generators(i64 d, i64 prec) {
    std::vector<FourierExpansion> out;
    FourierExpansion p2 = phi_m2_1(prec), p0 = phi_0_1(prec);
    for (i64 j = 0; j <= d; ++j) out.push_back(pow(p2, j) * pow(p0, d - j));
    if (d >= 2) {
        FourierExpansion f = phi_m1_2(prec);
        for (i64 j = 0; j + 2 <= d; ++j) out.push_back(f * (pow(p2, j) * pow(p0, d - 2 - j)));
    }
    return out;
}

} // namespace

SpaceBasis weak_basis_rank2(i64 k, i64 d1, i64 d2, i64 prec) {
    if (d1 < 1 || d2 < 1 || d1 > d2) throw DomainError("weak_basis_rank2: need 1 <= d1 <= d2");
    if (prec < 1) throw DomainError("weak_basis_rank2: precision must be >= 1");
    SpaceBasis out;
    out.spec.weight = k;
    out.spec.lattice = LatticeDescriptor{{d1, d2}};
    out.spec.index = 1;
    out.prec = prec;
    auto ga = module_generators(d1, prec);
    auto gb = module_generators(d2, prec);
    for (const auto& a : ga)
        for (const auto& b : gb) {
            i64 w = *a.weight + *b.weight;
            auto mons = modular_monomials(k - w, prec);
            if (mons.empty()) continue;
            FourierExpansion t = tensor_product(a, b);
            for (const auto& mon : mons) {
                FourierExpansion el = mon * t;
                validate_weak_support(el);
                out.elements.push_back(std::move(el));
            }
        }
    return out;
}

bool singular_class_consistent(const FourierExpansion& f, i64 m) {
    if (m <= 0) return true;
    if (f.rank() != 1 || f.den_q() != 1 || f.den_z() != 1) return false;
    std::map<std::pair<i64, i64>, Rational> cls; // (disc, r mod 2m) -> value
    for (const auto& [key, v] : f.terms()) {
        i64 n = key.nq, r = key.r[0];
        i64 disc = r * r - 4 * n * m;
        if (disc <= 0) continue;
        i64 rbar = ((r % (2 * m)) + 2 * m) % (2 * m);
        auto [it, fresh] = cls.try_emplace({disc, rbar}, v);
        if (!fresh && it->second != v) return false;
    }
    if (f.weight) {
        int sgn = (*f.weight % 2 != 0) ? -1 : 1;
        for (const auto& [dk, v] : cls) {
            i64 partner = (2 * m - dk.second) % (2 * m);
            auto it = cls.find({dk.first, partner});
            if (it != cls.end() && it->second != sgn * v) return false;
        }
    }
    return true;
}

i64 minimal_holomorphic_prec(i64 m, const Rational& min_ord) {
    return ceil_i64(min_ord) + (m + 3) / 4 + 2;
}

namespace {

struct SubspaceRows {
    std::vector<ExponentKey> singular; // vanishing keys
    i64 plus_rows = 0;
    bool reduced = true;
};

SpaceBasis solve_subspace(SpaceSpec spec, i64 prec, std::vector<FourierExpansion> candidates,
                          bool impose_singular, bool impose_plus) {
    const i64 m = spec.lattice.scalings[0] * spec.index;
    SpaceBasis out;
    out.spec = spec;
    out.prec = prec;
    if (candidates.empty()) return out;

    bool reduced = true;
    if (impose_singular)
        for (const auto& c : candidates)
            if (!singular_class_consistent(c, m)) { reduced = false; break; }

    const i64 nshift = ceil_i64(spec.min_ord);
    std::vector<ExponentKey> singular_keys;
    if (impose_singular && m >= 1) {
        i64 n_max = reduced ? std::min(nshift + (m + 3) / 4 + 1, prec) : prec;
        for (i64 n = 0; n < n_max; ++n) {
            i64 rmax = isqrt_i64(4 * n * m + m * m);
            for (i64 r = -rmax; r <= rmax; ++r)
                if (r * r > 4 * n * m) singular_keys.push_back(ExponentKey{n, {r, 0}});
        }
    }

    std::vector<RatRow> rows;
    i64 active = 0;
    for (const auto& key : singular_keys) {
        RatRow row;
        row.reserve(candidates.size());
        bool nonzero = false;
        for (const auto& c : candidates) {
            Rational v = c.coeff_key(key);
            if (v != 0) nonzero = true;
            row.push_back(std::move(v));
        }
        if (nonzero) ++active;
        rows.push_back(std::move(row));
    }
    i64 plus_count = 0;
    if (impose_plus && m >= 1) {
        for (i64 n = 0; n < prec; ++n) {
            i64 rmax = isqrt_i64(4 * n * m + m * m);
            for (i64 r = 1; r <= rmax; ++r) {
                RatRow row;
                row.reserve(candidates.size());
                bool nonzero = false;
                for (const auto& c : candidates) {
                    Rational v = c.coeff_key(ExponentKey{n, {r, 0}}) -
                                 c.coeff_key(ExponentKey{n, {-r, 0}});
                    if (v != 0) nonzero = true;
                    row.push_back(std::move(v));
                }
                ++plus_count;
                if (nonzero) ++active;
                rows.push_back(std::move(row));
            }
        }
    }

    NullspaceResult ns = nullspace(rows, candidates.size());
    out.constraints.rows = rows;
    for (const auto& v : ns.basis) {
        FourierExpansion el = linear_combination(candidates, v);
        if (el.is_zero()) throw InternalError("independent combination summed to zero");
        out.elements.push_back(std::move(el));
    }
    // every element must satisfy every imposed row exactly
    for (const auto& el : out.elements) {
        for (const auto& key : singular_keys)
            if (el.coeff_key(key) != 0) throw InternalError("singular row violated by solution");
        if (impose_plus && m >= 1)
            for (const auto& [key, v] : el.terms())
                if (key.r[0] > 0 && v != el.coeff_key(ExponentKey{key.nq, {-key.r[0], 0}}))
                    throw InternalError("plus symmetry violated by solution");
    }
    out.constraints.row_keys = std::move(singular_keys);
    out.constraints.plus_rows = plus_count;
    out.constraints.active_rows = active;
    out.constraints.rank = ns.rank;
    out.constraints.reduced_rows = reduced;
    return out;
}

std::vector<FourierExpansion> shifted_weak_candidates(i64 k, i64 m, i64 prec, i64 nshift) {
    if (prec <= nshift) throw PrecisionError("precision too small for the cusp-order shift");
    SpaceBasis wb = weak_basis(k - 12 * nshift, m, prec - nshift);
    std::vector<FourierExpansion> candidates;
    if (wb.elements.empty()) return candidates;
    FourierExpansion dn = pow(delta(prec), nshift);
    for (const auto& w : wb.elements) candidates.push_back(nshift == 0 ? w : dn * w);
    return candidates;
}

} // namespace

SpaceBasis holomorphic_subspace(i64 k, i64 m, i64 prec, const Rational& min_ord, Invariance inv) {
    if (m < 0) throw DomainError("holomorphic_subspace: negative index");
    if (min_ord < 0) throw DomainError("holomorphic_subspace: negative vanishing order");
    i64 need = minimal_holomorphic_prec(m, min_ord);
    if (prec < need)
        throw PrecisionError("holomorphic_subspace: need precision >= " + std::to_string(need));
    SpaceSpec spec = rank1_spec(k, m, min_ord, Flavor::holomorphic, inv);
    auto candidates = shifted_weak_candidates(k, m, prec, ceil_i64(min_ord));
    return solve_subspace(spec, prec, std::move(candidates), true, inv == Invariance::plus);
}

SpaceBasis basis_for(const SpaceSpec& spec, i64 prec) {
    if (spec.lattice.rank() == 2) {
        if (spec.flavor != Flavor::weak || spec.min_ord != 0 ||
            spec.invariance != Invariance::none || spec.index != 1)
            throw DomainError("rank-2 support is limited to weak index-1 bases");
        return weak_basis_rank2(spec.weight, spec.lattice.scalings[0], spec.lattice.scalings[1],
                                prec);
    }
    if (spec.lattice.rank() != 1) throw DomainError("lattice rank must be 1 or 2");
    if (spec.index < 0) throw DomainError("negative index");
    i64 m = spec.lattice.scalings[0] * spec.index;
    if (spec.flavor == Flavor::holomorphic) {
        SpaceBasis b = holomorphic_subspace(spec.weight, m, prec, spec.min_ord, spec.invariance);
        b.spec = spec;
        return b;
    }
    i64 nshift = ceil_i64(spec.min_ord);
    if (spec.invariance == Invariance::none) {
        if (nshift == 0) {
            SpaceBasis b = weak_basis(spec.weight, m, prec);
            b.spec = spec;
            return b;
        }
        SpaceBasis out;
        out.spec = spec;
        out.prec = prec;
        for (auto& c : shifted_weak_candidates(spec.weight, m, prec, nshift))
            out.elements.push_back(std::move(c));
        return out;
    }
    auto candidates = shifted_weak_candidates(spec.weight, m, prec, nshift);
    return solve_subspace(spec, prec, std::move(candidates), false, true);
}

DimReport dim_report(const SpaceSpec& spec, i64 prec) {
    if (spec.lattice.rank() != 1 && spec.lattice.rank() != 2)
        throw DomainError("lattice rank must be 1 or 2");
    if (spec.index < 0) throw DomainError("negative index");
    for (i64 d : spec.lattice.scalings)
        if (d < 1) throw DomainError("lattice scalings must be positive");
    DimReport rep;
    if (spec.lattice.rank() == 2) {
        if (spec.flavor != Flavor::weak || spec.min_ord != 0 ||
            spec.invariance != Invariance::none || spec.index != 1)
            throw DomainError("rank-2 support is limited to weak index-1 bases");
        // closed form from the free-module structure; no solve needed
        auto weights_of = [](i64 d) {
            std::vector<i64> w;
            for (i64 j = 0; j <= d; ++j) w.push_back(-2 * j);
            for (i64 j = 0; j + 2 <= d; ++j) w.push_back(-1 - 2 * j);
            return w;
        };
        i64 total = 0;
        for (i64 a : weights_of(spec.lattice.scalings[0]))
            for (i64 b : weights_of(spec.lattice.scalings[1]))
                total += count_monomials(spec.weight - a - b);
        rep.dim = total;
        rep.method = "tensor free-module count";
        return rep;
    }
    i64 m = spec.lattice.scalings[0] * spec.index;
    i64 nshift = ceil_i64(spec.min_ord);
    if (spec.flavor == Flavor::weak && spec.invariance == Invariance::none) {
        i64 k = spec.weight - 12 * nshift;
        i64 total = 0;
        if (k % 2 == 0) {
            for (i64 j = 0; j <= m; ++j) total += count_monomials(k + 2 * j);
        } else if (m >= 2) {
            for (i64 j = 0; j + 2 <= m; ++j) total += count_monomials(k + 1 + 2 * j);
        }
        rep.dim = total;
        rep.method = nshift == 0 ? "structure theorem" : "structure theorem after cusp shift";
        return rep;
    }
    if (prec < 0) prec = minimal_holomorphic_prec(m, spec.min_ord);
    SpaceBasis b = basis_for(spec, prec);
    rep.dim = b.dim();
    rep.active_rows = b.constraints.active_rows;
    rep.rank = b.constraints.rank;
    rep.method = spec.flavor == Flavor::holomorphic ? "singular kernel solve" : "plus kernel solve";
    if (!b.constraints.reduced_rows) rep.method += " (full row range)";
    return rep;
}

} // namespace jf
