#include "jf/serialize.hpp"

#include <set>

namespace jf {

namespace {

i64 require_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw StructureError(std::string("json: missing integer field '") + key + "'");
    return j[key].get<i64>();
}

Rational require_rational(const Json& j) {
    if (!j.is_string()) throw StructureError("json: rational values are strings");
    return parse_rational(j.get<std::string>());
}

} // namespace

Json expansion_json(const FourierExpansion& f) {
    Json j;
    j["rank"] = f.rank();
    j["den_q"] = f.den_q();
    j["den_z"] = f.den_z();
    j["prec"] = f.prec_num();
    if (f.weight)
        j["weight"] = *f.weight;
    else
        j["weight"] = nullptr;
    if (f.index) {
        Json idx;
        idx["rank"] = f.index->size();
        idx["scalings"] = *f.index;
        j["index"] = idx;
    } else {
        j["index"] = nullptr;
    }
    Json coeffs = Json::array();
    for (const auto& [key, value] : f.terms()) {
        Json entry = Json::array();
        entry.push_back(key.nq);
        Json rs = Json::array();
        for (int i = 0; i < f.rank(); ++i) rs.push_back(key.r[static_cast<std::size_t>(i)]);
        entry.push_back(rs);
        entry.push_back(rational_str(value));
        coeffs.push_back(entry);
    }
    j["coeffs"] = coeffs;
    return j;
}

FourierExpansion expansion_from_json(const Json& j) {
    if (!j.is_object()) throw StructureError("json: expansion must be an object");
    i64 rank = require_int(j, "rank");
    i64 den_q = require_int(j, "den_q");
    i64 den_z = require_int(j, "den_z");
    i64 prec = require_int(j, "prec");
    if (rank < 0 || rank > 2) throw StructureError("json: rank must be 0, 1, or 2");
    FourierExpansion f(static_cast<int>(rank), den_q, den_z, prec);
    if (!j.contains("weight") || !j.contains("index") || !j.contains("coeffs"))
        throw StructureError("json: expansion needs weight, index, coeffs");
    if (!j["weight"].is_null()) {
        if (!j["weight"].is_number_integer()) throw StructureError("json: weight must be integer or null");
        f.weight = j["weight"].get<i64>();
    }
    if (!j["index"].is_null()) {
        const Json& idx = j["index"];
        i64 irank = require_int(idx, "rank");
        if (!idx.contains("scalings") || !idx["scalings"].is_array() ||
            static_cast<i64>(idx["scalings"].size()) != irank || irank != rank)
            throw StructureError("json: index scalings must match rank");
        std::vector<i64> sc;
        for (const auto& s : idx["scalings"]) {
            if (!s.is_number_integer()) throw StructureError("json: scalings must be integers");
            sc.push_back(s.get<i64>());
        }
        f.index = sc;
    }
    if (!j["coeffs"].is_array()) throw StructureError("json: coeffs must be an array");
    std::set<ExponentKey> seen;
    for (const auto& entry : j["coeffs"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_array() || static_cast<i64>(entry[1].size()) != rank)
            throw StructureError("json: each coeff is [nq, [r per variable], value]");
        ExponentKey key;
        key.nq = entry[0].get<i64>();
        for (std::size_t i = 0; i < entry[1].size(); ++i) {
            if (!entry[1][i].is_number_integer())
                throw StructureError("json: elliptic exponents must be integers");
            key.r[i] = entry[1][i].get<i64>();
        }
        Rational v = require_rational(entry[2]);
        if (v == 0) throw StructureError("json: zero coefficients are not stored");
        if (!seen.insert(key).second) throw StructureError("json: duplicate coefficient key");
        f.set(key, v);
    }
    return f;
}

Json lattice_json(const LatticeDescriptor& lat) {
    Json j;
    j["rank"] = lat.rank();
    j["scalings"] = lat.scalings;
    return j;
}

LatticeDescriptor lattice_from_json(const Json& j) {
    i64 rank = require_int(j, "rank");
    if (!j.contains("scalings") || !j["scalings"].is_array() ||
        static_cast<i64>(j["scalings"].size()) != rank)
        throw StructureError("json: lattice scalings must match rank");
    LatticeDescriptor lat;
    for (const auto& s : j["scalings"]) {
        if (!s.is_number_integer()) throw StructureError("json: scalings must be integers");
        lat.scalings.push_back(s.get<i64>());
    }
    return lat;
}

Json spec_json(const SpaceSpec& spec) {
    Json j;
    j["weight"] = spec.weight;
    j["lattice"] = lattice_json(spec.lattice);
    j["index"] = spec.index;
    j["min_ord"] = rational_str(spec.min_ord);
    j["flavor"] = spec.flavor == Flavor::weak ? "weak" : "holomorphic";
    j["invariance"] = spec.invariance == Invariance::none ? "none" : "plus";
    return j;
}

Json basis_json(const SpaceBasis& basis) {
    Json j;
    j["spec"] = spec_json(basis.spec);
    j["prec"] = basis.prec;
    j["dim"] = basis.dim();
    j["active_rows"] = basis.constraints.active_rows;
    j["rank"] = basis.constraints.rank;
    Json els = Json::array();
    for (const auto& e : basis.elements) els.push_back(expansion_json(e));
    j["elements"] = els;
    return j;
}

Json dim_report_json(const DimReport& rep) {
    Json j;
    j["dim"] = rep.dim;
    j["active_rows"] = rep.active_rows;
    j["rank"] = rep.rank;
    j["method"] = rep.method;
    return j;
}

Json ord_json(const OrdResult& o, int rank) {
    Json j;
    j["finite"] = o.finite;
    j["value"] = rational_str(o.value);
    if (o.finite) {
        Json w = Json::array();
        w.push_back(o.witness.nq);
        Json rs = Json::array();
        for (int i = 0; i < rank; ++i) rs.push_back(o.witness.r[static_cast<std::size_t>(i)]);
        w.push_back(rs);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json modularity_json(const ModularityCheck& c) {
    Json j;
    j["modular"] = c.modular;
    Json coords = Json::array();
    for (const auto& x : c.coords) coords.push_back(rational_str(x));
    j["coords"] = coords;
    return j;
}

Json interval_json(const Interval& v) {
    Json j;
    j["lo"] = v.lo.str();
    j["hi"] = v.hi.str();
    j["bits"] = static_cast<i64>(BigFloat::kBits);
    return j;
}

Json bound_report_json(const BoundReport& rep) {
    Json j;
    j["theorem"] = bound_theorem_name(rep.theorem);
    j["weight"] = rep.weight;
    j["lattice"] = lattice_json(rep.lattice);
    j["index"] = rep.index;
    j["index_multiplier"] = rep.index_multiplier;
    j["c1"] = rep.c1 ? Json(rational_str(*rep.c1)) : Json(nullptr);
    j["c2"] = rep.c2 ? Json(rational_str(*rep.c2)) : Json(nullptr);
    j["applicable"] = rep.applicable;
    j["reason"] = rep.reason;
    j["value"] = rep.value ? interval_json(*rep.value) : Json(nullptr);
    j["exact_value"] = rep.exact_value ? Json(rational_str(*rep.exact_value)) : Json(nullptr);
    return j;
}

Json certificate_json(const VanishingCertificate& c) {
    Json j;
    j["weight"] = c.k;
    j["index"] = c.m;
    j["min_ord"] = c.n;
    j["squared"] = c.squared;
    j["weight_eff"] = c.k_eff;
    j["index_eff"] = c.m_eff;
    j["min_ord_eff"] = c.n_eff;
    Json entries = Json::array();
    for (const auto& e : c.entries) {
        Json row;
        row["t"] = e.t;
        row["n_t"] = e.n_t;
        row["lhs"] = rational_str(e.lhs);
        row["threshold"] = rational_str(e.threshold);
        entries.push_back(row);
    }
    j["entries"] = entries;
    j["total"] = rational_str(c.total);
    j["target"] = c.target;
    return j;
}

VanishingCertificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw StructureError("json: certificate must be an object");
    VanishingCertificate c;
    c.k = require_int(j, "weight");
    c.m = require_int(j, "index");
    c.n = require_int(j, "min_ord");
    if (!j.contains("squared") || !j["squared"].is_boolean())
        throw StructureError("json: certificate needs a boolean 'squared'");
    c.squared = j["squared"].get<bool>();
    c.k_eff = require_int(j, "weight_eff");
    c.m_eff = require_int(j, "index_eff");
    c.n_eff = require_int(j, "min_ord_eff");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw StructureError("json: certificate needs an 'entries' array");
    for (const auto& row : j["entries"]) {
        CertificateEntry e;
        e.t = require_int(row, "t");
        e.n_t = require_int(row, "n_t");
        if (!row.contains("lhs") || !row.contains("threshold"))
            throw StructureError("json: entry needs lhs and threshold");
        e.lhs = require_rational(row["lhs"]);
        e.threshold = require_rational(row["threshold"]);
        c.entries.push_back(e);
    }
    if (!j.contains("total")) throw StructureError("json: certificate needs 'total'");
    c.total = require_rational(j["total"]);
    c.target = require_int(j, "target");
    return c;
}

Json ffj_comparison_json(const FFJComparison& rep) {
    Json j;
    j["weight"] = rep.k;
    j["scaling"] = rep.d;
    j["order"] = rep.order;
    j["solved_dim"] = rep.solved_dim;
    j["ceiling"] = rep.ceiling;
    j["max_ord"] = rep.max_ord;
    Json hist;
    for (const auto& [ord, count] : rep.ord_histogram) hist[std::to_string(ord)] = count;
    j["ord_histogram"] = hist;
    j["dims_within"] = rep.dims_within;
    j["orders_within"] = rep.orders_within;
    j["leading_checks"] = rep.leading_checks;
    j["sound"] = rep.sound;
    return j;
}

} // namespace jf
