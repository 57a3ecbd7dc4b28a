#ifndef JF_SERIALIZE_HPP
#define JF_SERIALIZE_HPP

#include <json.hpp>

#include "jf/bounds.hpp"
#include "jf/certificates.hpp"
#include "jf/ffj.hpp"
#include "jf/orders.hpp"
#include "jf/spaces.hpp"

namespace jf {

// ordered_json keeps insertion order, so dumps are deterministic and diffable.
using Json = nlohmann::ordered_json;

// {"rank":1,"den_q":1,"den_z":1,"prec":10,"weight":-2,
//  "index":{"rank":1,"scalings":[1]},"coeffs":[[0,[-1],"1"],...]}
// prec and the leading coeff entry are in raw numerator units (over den_q /
// den_z); weight and index are null when untyped; coeffs are sorted by key.
Json expansion_json(const FourierExpansion& f);
FourierExpansion expansion_from_json(const Json& j); // strict inverse

Json lattice_json(const LatticeDescriptor& lat);
LatticeDescriptor lattice_from_json(const Json& j);

Json spec_json(const SpaceSpec& spec);
Json basis_json(const SpaceBasis& basis);
Json dim_report_json(const DimReport& rep);
Json ord_json(const OrdResult& o, int rank);
Json modularity_json(const ModularityCheck& c);
Json interval_json(const Interval& v);
Json bound_report_json(const BoundReport& rep);

Json certificate_json(const VanishingCertificate& c);
VanishingCertificate certificate_from_json(const Json& j); // strict inverse

Json ffj_comparison_json(const FFJComparison& rep);

} // namespace jf

#endif
