#include "jf/expansion.hpp"

#include <algorithm>
#include <numeric>

namespace jf {

namespace {

bool all_r_zero(const ExponentKey& k) { return k.r[0] == 0 && k.r[1] == 0; }

std::string key_str(const ExponentKey& k, int rank) {
    std::string s = "(" + std::to_string(k.nq);
    for (int i = 0; i < rank; ++i) s += "," + std::to_string(k.r[i]);
    return s + ")";
}

} // namespace

FourierExpansion::FourierExpansion(int rank, i64 den_q, i64 den_z, i64 prec_num)
    : rank_(rank), den_q_(den_q), den_z_(den_z), prec_num_(prec_num) {
    if (rank < 0 || rank > 2) throw StructureError("rank must be 0, 1 or 2");
    if (den_q != 1 && den_q != 8 && den_q != 24)
        throw StructureError("den_q must be 1, 8 or 24");
    if (den_z != 1 && den_z != 2) throw StructureError("den_z must be 1 or 2");
}

FourierExpansion FourierExpansion::zero(int rank, i64 prec_num) {
    return FourierExpansion(rank, 1, 1, prec_num);
}

FourierExpansion FourierExpansion::constant(const Rational& value, i64 prec_num) {
    FourierExpansion f(0, 1, 1, prec_num);
    if (prec_num > 0 && value != 0) f.c_[ExponentKey{}] = value;
    return f;
}

Rational FourierExpansion::prec() const { return rat(prec_num_, den_q_); }

void FourierExpansion::check_key(const ExponentKey& key) const {
    for (int i = rank_; i < 2; ++i)
        if (key.r[i] != 0)
            throw StructureError("elliptic exponent in unused slot " + std::to_string(i));
}

void FourierExpansion::set(const ExponentKey& key, const Rational& value) {
    check_key(key);
    if (key.nq >= prec_num_)
        throw DomainError("coefficient at " + key_str(key, rank_) + " is at or beyond precision");
    if (value == 0)
        c_.erase(key);
    else
        c_[key] = value;
}

Rational FourierExpansion::coeff_key(const ExponentKey& key) const {
    check_key(key);
    if (key.nq >= prec_num_)
        throw PrecisionError("coefficient at " + key_str(key, rank_) +
                             " is beyond stored precision " + std::to_string(prec_num_) +
                             "/" + std::to_string(den_q_));
    auto it = c_.find(key);
    return it == c_.end() ? Rational(0) : it->second;
}

Rational FourierExpansion::coeff(const Rational& n, const std::vector<i64>& r) const {
    if (!r.empty() && static_cast<int>(r.size()) != rank_)
        throw StructureError("elliptic exponent vector has wrong length");
    if (n >= prec())
        throw PrecisionError("coefficient at q^" + rational_str(n) +
                             " is beyond stored precision " + rational_str(prec()));
    Rational nn = n * den_q_;
    if (nn.get_den() != 1) return Rational(0); // not on this expansion's grid
    ExponentKey key;
    key.nq = to_i64(nn.get_num());
    for (std::size_t i = 0; i < r.size(); ++i) key.r[i] = r[i] * den_z_;
    auto it = c_.find(key);
    return it == c_.end() ? Rational(0) : it->second;
}

std::optional<i64> FourierExpansion::lead_nq() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first.nq;
}

FourierExpansion FourierExpansion::truncated(const Rational& new_prec) const {
    Rational np = new_prec * den_q_;
    i64 np_num = to_i64(rat_floor(np));
    if (np_num > prec_num_)
        throw PrecisionError("cannot truncate to precision " + rational_str(new_prec) +
                             " above stored " + rational_str(prec()));
    FourierExpansion out(rank_, den_q_, den_z_, np_num);
    out.weight = weight;
    out.index = index;
    for (const auto& [k, v] : c_) {
        if (k.nq >= np_num) break;
        out.c_[k] = v;
    }
    return out;
}

void FourierExpansion::normalize() {
    if (den_q_ > 1) {
        bool ok = std::all_of(c_.begin(), c_.end(),
                              [&](const auto& t) { return t.first.nq % den_q_ == 0; });
        if (ok) {
            Map fresh;
            for (auto& [k, v] : c_) {
                ExponentKey nk = k;
                nk.nq = k.nq / den_q_;
                fresh.emplace(nk, std::move(v));
            }
            c_ = std::move(fresh);
            // prec floors to the coarser grid; drop anything no longer covered
            prec_num_ = to_i64(rat_floor(rat(prec_num_, den_q_)));
            den_q_ = 1;
            c_.erase(c_.lower_bound(ExponentKey{prec_num_, {INT64_MIN, INT64_MIN}}), c_.end());
        }
    }
    if (den_z_ == 2) {
        bool ok = std::all_of(c_.begin(), c_.end(), [&](const auto& t) {
            return t.first.r[0] % 2 == 0 && t.first.r[1] % 2 == 0;
        });
        if (ok) {
            Map fresh;
            for (auto& [k, v] : c_) {
                ExponentKey nk = k;
                nk.r[0] = k.r[0] / 2;
                nk.r[1] = k.r[1] / 2;
                fresh.emplace(nk, std::move(v));
            }
            c_ = std::move(fresh);
            den_z_ = 1;
        }
    }
}

namespace {

// Rewrite a onto the (rank, dq, dz) grid; requires divisibility.
FourierExpansion promoted(const FourierExpansion& a, int rank, i64 dq, i64 dz) {
    if (rank < a.rank() || dq % a.den_q() != 0 || dz % a.den_z() != 0)
        throw StructureError("cannot promote expansion to a coarser grid");
    i64 fq = dq / a.den_q(), fz = dz / a.den_z();
    FourierExpansion out(rank, dq, dz, a.prec_num() * fq);
    out.weight = a.weight;
    if (a.index) {
        std::vector<i64> ix = *a.index;
        ix.resize(rank, 0);
        out.index = std::move(ix);
    }
    for (const auto& [k, v] : a.terms()) {
        ExponentKey nk;
        nk.nq = k.nq * fq;
        nk.r = {k.r[0] * fz, k.r[1] * fz};
        out.set(nk, v);
    }
    return out;
}

struct CommonGrid { int rank; i64 dq, dz; };

CommonGrid common_grid(const FourierExpansion& a, const FourierExpansion& b) {
    int rank = std::max(a.rank(), b.rank());
    if (a.rank() != b.rank() && std::min(a.rank(), b.rank()) != 0)
        throw StructureError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                             std::to_string(b.rank()));
    i64 dq = std::lcm(a.den_q(), b.den_q());
    i64 dz = std::lcm(a.den_z(), b.den_z());
    return {rank, dq, dz};
}

std::optional<i64> merge_weight_add(const FourierExpansion& a, const FourierExpansion& b) {
    if (a.weight && b.weight && *a.weight == *b.weight) return a.weight;
    return std::nullopt;
}

struct Row {
    i64 nq;
    std::vector<std::pair<std::array<i64, 2>, Rational>> t;
};

std::vector<Row> group_rows(const FourierExpansion& a) {
    std::vector<Row> rows;
    for (const auto& [k, v] : a.terms()) {
        if (rows.empty() || rows.back().nq != k.nq) rows.push_back({k.nq, {}});
        rows.back().t.emplace_back(k.r, v);
    }
    return rows;
}

} // namespace

FourierExpansion FourierExpansion::operator-() const {
    FourierExpansion out = *this;
    for (auto& [k, v] : out.c_) v = -v;
    return out;
}

FourierExpansion operator+(const FourierExpansion& a, const FourierExpansion& b) {
    auto g = common_grid(a, b);
    FourierExpansion pa = promoted(a, g.rank, g.dq, g.dz);
    FourierExpansion pb = promoted(b, g.rank, g.dq, g.dz);
    FourierExpansion out(g.rank, g.dq, g.dz, std::min(pa.prec_num_, pb.prec_num_));
    out.weight = merge_weight_add(pa, pb);
    if (pa.index && pb.index && *pa.index == *pb.index) out.index = pa.index;
    out.c_ = std::move(pa.c_);
    for (const auto& [k, v] : pb.c_) {
        auto [it, fresh] = out.c_.try_emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) out.c_.erase(it);
        }
    }
    out.c_.erase(out.c_.lower_bound(ExponentKey{out.prec_num_, {INT64_MIN, INT64_MIN}}),
                 out.c_.end());
    out.normalize();
    return out;
}

FourierExpansion operator-(const FourierExpansion& a, const FourierExpansion& b) {
    return a + (-b);
}

FourierExpansion operator*(const Rational& c, const FourierExpansion& a) {
    FourierExpansion out(a.rank_, a.den_q_, a.den_z_, a.prec_num_);
    out.weight = a.weight;
    out.index = a.index;
    if (c != 0)
        for (const auto& [k, v] : a.c_) out.c_[k] = c * v;
    return out;
}

FourierExpansion operator*(const FourierExpansion& a, const FourierExpansion& b) {
    auto g = common_grid(a, b);
    FourierExpansion pa = promoted(a, g.rank, g.dq, g.dz);
    FourierExpansion pb = promoted(b, g.rank, g.dq, g.dz);
    i64 ea = pa.c_.empty() ? pa.prec_num_ : pa.c_.begin()->first.nq;
    i64 eb = pb.c_.empty() ? pb.prec_num_ : pb.c_.begin()->first.nq;
    i64 cut = std::min(pa.prec_num_ + eb, pb.prec_num_ + ea);
    FourierExpansion out(g.rank, g.dq, g.dz, cut);
    if (pa.weight && pb.weight) out.weight = *pa.weight + *pb.weight;
    if (pa.index && pb.index) {
        std::vector<i64> ix(g.rank);
        for (int i = 0; i < g.rank; ++i) ix[i] = (*pa.index)[i] + (*pb.index)[i];
        out.index = std::move(ix);
    }
    auto ra = group_rows(pa), rb = group_rows(pb);
    for (const auto& rowa : ra) {
        if (rowa.nq + eb >= cut) break;
        for (const auto& rowb : rb) {
            i64 nn = rowa.nq + rowb.nq;
            if (nn >= cut) break;
            for (const auto& [za, ca] : rowa.t)
                for (const auto& [zb, cb] : rowb.t) {
                    ExponentKey k{nn, {za[0] + zb[0], za[1] + zb[1]}};
                    auto [it, fresh] = out.c_.try_emplace(k, ca * cb);
                    if (!fresh) {
                        it->second += ca * cb;
                        if (it->second == 0) out.c_.erase(it);
                    }
                }
        }
    }
    out.normalize();
    return out;
}

bool operator==(const FourierExpansion& a, const FourierExpansion& b) {
    return a.rank_ == b.rank_ && a.den_q_ == b.den_q_ && a.den_z_ == b.den_z_ &&
           a.prec_num_ == b.prec_num_ && a.c_ == b.c_ && a.weight == b.weight &&
           a.index == b.index;
}

FourierExpansion pow(const FourierExpansion& a, i64 e) {
    if (e < 0) throw DomainError("pow: negative exponent (use invert_unit)");
    if (e == 0) {
        FourierExpansion one = FourierExpansion::constant(rat(1), floor_i64(a.prec()));
        one.weight = 0;
        one.index = std::vector<i64>{};
        return one;
    }
    FourierExpansion acc = a;
    --e;
    FourierExpansion b = a;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return acc;
}

FourierExpansion invert_unit(const FourierExpansion& a) {
    for (const auto& [k, v] : a.terms())
        if (!all_r_zero(k)) throw DomainError("invert_unit requires a pure q-series");
    if (a.is_zero()) throw DomainError("invert_unit of the zero series");
    i64 e = a.terms().begin()->first.nq;
    const Rational& c0 = a.terms().begin()->second;
    i64 out_prec = a.prec_num() - 2 * e;
    if (out_prec <= -e)
        throw PrecisionError("invert_unit: no representable coefficients at this precision");

    i64 g = 0;
    for (const auto& [k, v] : a.terms()) g = std::gcd(g, k.nq - e);
    if (g == 0) g = 1;

    i64 span = a.prec_num() - e; // offsets known strictly below this
    i64 nu = (span - 1) / g + 1;
    std::vector<Rational> u(static_cast<std::size_t>(nu));
    for (const auto& [k, v] : a.terms()) u[static_cast<std::size_t>((k.nq - e) / g)] = v;

    std::vector<Rational> b(u.size());
    Rational inv0 = rat(1) / c0;
    b[0] = inv0;
    for (std::size_t j = 1; j < b.size(); ++j) {
        Rational s(0);
        for (std::size_t i = 1; i <= j; ++i)
            if (u[i] != 0 && b[j - i] != 0) s += u[i] * b[j - i];
        if (s != 0) b[j] = -inv0 * s;
    }

    FourierExpansion out(a.rank(), a.den_q(), a.den_z(), out_prec);
    if (a.weight) out.weight = -*a.weight;
    if (a.index && std::all_of(a.index->begin(), a.index->end(), [](i64 m) { return m == 0; }))
        out.index = a.index;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        i64 nq = -e + g * static_cast<i64>(j);
        if (nq >= out_prec) break;
        out.c_[ExponentKey{nq, {0, 0}}] = b[j];
    }
    out.normalize();
    return out;
}

FourierExpansion q_derivative(const FourierExpansion& a) {
    FourierExpansion out(a.rank(), a.den_q(), a.den_z(), a.prec_num());
    out.index = a.index;
    for (const auto& [k, v] : a.terms()) {
        if (k.nq == 0) continue;
        out.c_[k] = v * rat(k.nq, a.den_q());
    }
    return out;
}

FourierExpansion scale_elliptic(const FourierExpansion& a, i64 c) {
    if (c < 1) throw DomainError("scale_elliptic: factor must be >= 1");
    FourierExpansion out(a.rank(), a.den_q(), a.den_z(), a.prec_num());
    out.weight = a.weight;
    if (a.index) {
        std::vector<i64> ix = *a.index;
        for (i64& m : ix) m *= c * c;
        out.index = std::move(ix);
    }
    for (const auto& [k, v] : a.terms()) {
        ExponentKey nk = k;
        for (int i = 0; i < a.rank(); ++i) nk.r[i] = k.r[i] * c;
        out.c_[nk] = v;
    }
    out.normalize();
    return out;
}

FourierExpansion tensor_product(const FourierExpansion& a, const FourierExpansion& b) {
    if (a.rank() + b.rank() > 2)
        throw StructureError("tensor_product: combined rank exceeds 2");
    i64 dq = std::lcm(a.den_q(), b.den_q());
    i64 dz = std::lcm(a.den_z(), b.den_z());
    i64 fqa = dq / a.den_q(), fqb = dq / b.den_q();
    i64 fza = dz / a.den_z(), fzb = dz / b.den_z();
    i64 pa = a.prec_num() * fqa, pb = b.prec_num() * fqb;
    i64 ea = a.is_zero() ? pa : a.terms().begin()->first.nq * fqa;
    i64 eb = b.is_zero() ? pb : b.terms().begin()->first.nq * fqb;
    i64 cut = std::min(pa + eb, pb + ea);
    FourierExpansion out(a.rank() + b.rank(), dq, dz, cut);
    if (a.weight && b.weight) out.weight = *a.weight + *b.weight;
    if (a.index && b.index) {
        std::vector<i64> ix = *a.index;
        ix.insert(ix.end(), b.index->begin(), b.index->end());
        out.index = std::move(ix);
    }
    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms()) {
            i64 nn = ka.nq * fqa + kb.nq * fqb;
            if (nn >= cut) break;
            ExponentKey k;
            k.nq = nn;
            int slot = 0;
            for (int i = 0; i < a.rank(); ++i) k.r[slot++] = ka.r[i] * fza;
            for (int i = 0; i < b.rank(); ++i) k.r[slot++] = kb.r[i] * fzb;
            out.set(k, va * vb);
        }
    out.normalize();
    return out;
}

void validate_weak_support(const FourierExpansion& a) {
    if (!a.index) throw DomainError("weak-support validation requires a typed index");
    for (const auto& [k, v] : a.terms()) {
        for (int i = 0; i < a.rank(); ++i) {
            Integer m(static_cast<long>((*a.index)[i]));
            Integer ri(static_cast<long>(k.r[i]));
            Integer nq(static_cast<long>(k.nq));
            Integer dz(static_cast<long>(a.den_z()));
            Integer dq(static_cast<long>(a.den_q()));
            // r^2 <= 4 n m + m^2 with n = nq/dq, r = ri/dz
            if (ri * ri * dq > dz * dz * (4 * nq * m + dq * m * m))
                throw DomainError("weak support violated at " + key_str(k, a.rank()) +
                                  " in variable " + std::to_string(i));
        }
    }
}

bool agree(const FourierExpansion& a, const FourierExpansion& b) {
    auto g = common_grid(a, b);
    FourierExpansion pa = promoted(a, g.rank, g.dq, g.dz);
    FourierExpansion pb = promoted(b, g.rank, g.dq, g.dz);
    i64 cut = std::min(pa.prec_num(), pb.prec_num());
    auto ia = pa.terms().begin(), ea_ = pa.terms().end();
    auto ib = pb.terms().begin(), eb_ = pb.terms().end();
    while (true) {
        while (ia != ea_ && ia->first.nq >= cut) ia = ea_;
        while (ib != eb_ && ib->first.nq >= cut) ib = eb_;
        if (ia == ea_ || ib == eb_) break;
        if (ia->first != ib->first || ia->second != ib->second) return false;
        ++ia;
        ++ib;
    }
    auto rest_zero = [cut](auto it, auto end) {
        for (; it != end; ++it)
            if (it->first.nq < cut) return false;
        return true;
    };
    return rest_zero(ia, ea_) && rest_zero(ib, eb_);
}

} // namespace jf
