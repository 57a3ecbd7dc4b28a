#include <doctest.h>

#include "jf/certificates.hpp"
#include "jf/errors.hpp"
#include "jf/ffj.hpp"
#include "jf/generators.hpp"
#include "jf/serialize.hpp"

using namespace jf;

TEST_SUITE("serialize") {

TEST_CASE("expansion roundtrips exactly") {
    for (GeneratorId id : {GeneratorId::eta, GeneratorId::theta, GeneratorId::delta,
                           GeneratorId::phi_m2_1, GeneratorId::phi_m1_2}) {
        FourierExpansion f = generator(id, 5);
        FourierExpansion g = expansion_from_json(expansion_json(f));
        CHECK(f == g);
    }
    // untyped series and fractional coefficients
    FourierExpansion f(1, 8, 2, 11);
    f.set({3, {-1, 0}}, rat(-7, 3));
    f.set({10, {5, 0}}, rat(22, 7));
    FourierExpansion g = expansion_from_json(expansion_json(f));
    CHECK(f == g);
    CHECK(expansion_json(f)["weight"].is_null());
    CHECK(expansion_json(f)["index"].is_null());
    // rank 2
    FourierExpansion a = generator(GeneratorId::phi_m2_1, 4);
    FourierExpansion t = tensor_product(a, a);
    CHECK(expansion_from_json(expansion_json(t)) == t);
}

TEST_CASE("expansion schema is stable") {
    FourierExpansion f = generator(GeneratorId::phi_m2_1, 2);
    Json j = expansion_json(f);
    CHECK(j["rank"] == 1);
    CHECK(j["den_q"] == 1);
    CHECK(j["den_z"] == 1);
    CHECK(j["prec"] == 2);
    CHECK(j["weight"] == -2);
    CHECK(j["index"]["scalings"][0] == 1);
    REQUIRE(j["coeffs"].is_array());
    // sorted by key: first entry is (0, -1) -> 1
    CHECK(j["coeffs"][0][0] == 0);
    CHECK(j["coeffs"][0][1][0] == -1);
    CHECK(j["coeffs"][0][2] == "1");
}

TEST_CASE("strict parsing rejects malformed input") {
    FourierExpansion f = generator(GeneratorId::phi_m2_1, 3);
    Json good = expansion_json(f);

    Json j = good;
    j.erase("prec");
    CHECK_THROWS_AS(expansion_from_json(j), StructureError);

    j = good;
    j["rank"] = "one";
    CHECK_THROWS_AS(expansion_from_json(j), StructureError);

    j = good;
    j["den_q"] = 5; // not in {1, 8, 24}
    CHECK_THROWS_AS(expansion_from_json(j), Error);

    j = good;
    j["coeffs"][0][2] = "1/0";
    CHECK_THROWS_AS(expansion_from_json(j), Error);

    j = good;
    j["coeffs"][0][2] = 1; // number, not a rational string
    CHECK_THROWS_AS(expansion_from_json(j), StructureError);

    j = good;
    j["coeffs"].push_back(j["coeffs"][0]); // duplicate exponent
    CHECK_THROWS_AS(expansion_from_json(j), StructureError);

    j = good;
    Json row = Json::array();
    row.push_back(99); // at/beyond prec
    row.push_back(Json::array({0}));
    row.push_back("1");
    j["coeffs"].push_back(row);
    CHECK_THROWS_AS(expansion_from_json(j), Error);

    CHECK_THROWS_AS(expansion_from_json(Json::array()), StructureError);
}

TEST_CASE("lattice and spec") {
    LatticeDescriptor lat{{1, 2}};
    CHECK(lattice_from_json(lattice_json(lat)) == lat);
    Json bad;
    bad["rank"] = 2;
    bad["scalings"] = Json::array({1});
    CHECK_THROWS_AS(lattice_from_json(bad), StructureError);

    SpaceSpec spec;
    spec.weight = 10;
    spec.min_ord = rat(3, 2);
    spec.flavor = Flavor::holomorphic;
    spec.invariance = Invariance::plus;
    Json js = spec_json(spec);
    CHECK(js["weight"] == 10);
    CHECK(js["min_ord"] == "3/2");
    CHECK(js["flavor"] == "holomorphic");
    CHECK(js["invariance"] == "plus");
}

TEST_CASE("reports carry their inputs and method") {
    SpaceSpec spec;
    spec.weight = 10;
    spec.index = 1;
    spec.flavor = Flavor::holomorphic;
    SpaceBasis b = basis_for(spec, 6);
    Json jb = basis_json(b);
    CHECK(jb["dim"] == 2);
    CHECK(jb["prec"] == 6);
    CHECK(jb["elements"].size() == 2);
    CHECK(jb.contains("active_rows"));

    DimReport rep = dim_report(spec);
    Json jr = dim_report_json(rep);
    CHECK(jr["dim"] == 2);
    CHECK_FALSE(jr["method"].get<std::string>().empty());

    OrdResult o = ord_at(generator(GeneratorId::phi_m2_1, 8), rat(1, 2));
    Json jo = ord_json(o, 1);
    CHECK(jo["finite"] == true);
    CHECK(jo["value"] == "-1/4");
    CHECK(jo["witness"][0] == 0);     // nq
    CHECK(jo["witness"][1][0] == -1); // r

    BoundReport br = bound_refined(10, 512, 1);
    Json jn = bound_report_json(br);
    CHECK(jn["theorem"] == "refined");
    CHECK(jn["applicable"] == true);
    REQUIRE(jn.contains("value"));
    CHECK_FALSE(jn["value"]["lo"].get<std::string>().empty());
    CHECK_FALSE(jn["value"]["hi"].get<std::string>().empty());

    BoundReport sl = slope_bound(LatticeDescriptor::A1(2));
    Json jsl = bound_report_json(sl);
    CHECK(jsl["exact_value"] == "3");
}

TEST_CASE("certificates roundtrip and stay verifiable") {
    auto c = certify_vanishing(4, 2, 2);
    REQUIRE(c.has_value());
    Json j = certificate_json(*c);
    CHECK(j["weight"] == 4);
    CHECK(j["index"] == 2);
    CHECK(j["min_ord"] == 2);
    CHECK(j["squared"] == false);
    CHECK(j["total"] == "20");
    CHECK(j["target"] == 4);
    VanishingCertificate back = certificate_from_json(j);
    CHECK(verify_certificate(back));
    CHECK(back.total == c->total);
    CHECK(back.entries.size() == c->entries.size());

    // tampering survives parsing but fails verification
    Json bad = j;
    bad["entries"][0]["n_t"] = 25;
    CHECK_FALSE(verify_certificate(certificate_from_json(bad)));

    bad = j;
    bad.erase("total");
    CHECK_THROWS_AS(certificate_from_json(bad), StructureError);

    bad = j;
    bad["total"] = 20; // number, not rational string
    CHECK_THROWS_AS(certificate_from_json(bad), StructureError);
}

TEST_CASE("ffj comparison report") {
    FFJComparison cmp = truncated_vs_bound(10, 1, 4);
    Json j = ffj_comparison_json(cmp);
    CHECK(j["weight"] == 10);
    CHECK(j["scaling"] == 1);
    CHECK(j["order"] == 4);
    CHECK(j["solved_dim"] == 2);
    CHECK(j["ceiling"] == 2);
    CHECK(j["sound"] == true);
    CHECK(j["ord_histogram"].is_object());
}

TEST_CASE("interval json carries certified endpoints") {
    Interval v = Interval::pi();
    Json j = interval_json(v);
    std::string lo = j["lo"].get<std::string>();
    std::string hi = j["hi"].get<std::string>();
    CHECK(lo.substr(0, 6) == "3.1415");
    CHECK(hi.substr(0, 6) == "3.1415");
    CHECK(j.contains("bits"));
}

} // TEST_SUITE
