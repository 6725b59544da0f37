// Exercises the shared-library surface exactly as an external client would:
// only hesslab.h, opaque handles and status codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hesslab.h"

#include <json.hpp>

#include <string>

namespace {

struct poly_guard {
    hesslab_poly* p = nullptr;
    ~poly_guard() { hesslab_poly_free(p); }
};

struct str_guard {
    char* s = nullptr;
    ~str_guard() { hesslab_free_string(s); }
    std::string str() const { return s ? s : ""; }
};

} // namespace

TEST_CASE("parse, format and determinant through the C surface") {
    poly_guard p;
    REQUIRE(hesslab_parse("x1*x2 + x1^3", 2, "Q", nullptr, &p.p) == HESSLAB_OK);

    str_guard txt;
    REQUIRE(hesslab_poly_format(p.p, &txt.s) == HESSLAB_OK);
    poly_guard back;
    REQUIRE(hesslab_parse(txt.s, 2, "Q", nullptr, &back.p) == HESSLAB_OK);
    str_guard txt2;
    REQUIRE(hesslab_poly_format(back.p, &txt2.s) == HESSLAB_OK);
    CHECK(txt.str() == txt2.str());

    str_guard det;
    REQUIRE(hesslab_hessian_det(p.p, &det.s) == HESSLAB_OK);
    CHECK(det.str() == "-1");

    str_guard H;
    REQUIRE(hesslab_hessian(p.p, 1, &H.s) == HESSLAB_OK);
    auto j = nlohmann::json::parse(H.str());
    CHECK(j.at("rows") == 2);
    CHECK(j.at("entries").at(0).at(0) == "6*x1");
}

TEST_CASE("status codes carry the failure taxonomy") {
    poly_guard p;
    CHECK(hesslab_parse("x1 + ", 2, "Q", nullptr, &p.p) == HESSLAB_ERR_SYNTAX);
    CHECK(std::string(hesslab_last_error()).find("SyntaxError") != std::string::npos);
    CHECK(hesslab_parse("x1 + x9", 2, "Q", nullptr, &p.p) == HESSLAB_ERR_UNKNOWN_VARIABLE);
    CHECK(hesslab_parse("i*x1", 2, "Q", nullptr, &p.p) == HESSLAB_ERR_SYNTAX);

    str_guard out;
    CHECK(hesslab_verify_fixture("no-such-fixture", 0, &out.s) == HESSLAB_ERR_UNKNOWN_FIXTURE);
}

TEST_CASE("pipeline and isotropy through the C surface") {
    poly_guard p;
    REQUIRE(hesslab_parse("x1*x2 + x2^3", 2, "Q", nullptr, &p.p) == HESSLAB_OK);
    str_guard wit;
    REQUIRE(hesslab_antitri(p.p, 0, 0, 1, &wit.s) == HESSLAB_OK);
    auto j = nlohmann::json::parse(wit.str());
    CHECK(j.at("case_tag") == "weight_search");
    CHECK(j.at("w").size() == 2);
    CHECK(j.at("hessian").at("entries").at(1).at(1) == "0");

    // determinism: a second run yields byte-identical output
    str_guard wit2;
    REQUIRE(hesslab_antitri(p.p, 0, 0, 1, &wit2.s) == HESSLAB_OK);
    CHECK(wit.str() == wit2.str());

    poly_guard quad;
    REQUIRE(hesslab_parse("1/2*x1^2 + 1/2*x2^2", 2, "Q", nullptr, &quad.p) == HESSLAB_OK);
    str_guard obs;
    CHECK(hesslab_antitri(quad.p, 0, 0, 1, &obs.s) == HESSLAB_NEGATIVE);
    CHECK(nlohmann::json::parse(obs.str()).contains("obstruction"));

    str_guard iso;
    CHECK(hesslab_isotropy(quad.p, 20, 1, &iso.s) == HESSLAB_NEGATIVE);
    CHECK(nlohmann::json::parse(iso.str()).at("outcome") == "anisotropic");

    poly_guard quad_i;
    REQUIRE(hesslab_parse("1/2*x1^2 + 1/2*x2^2", 2, "Qi", nullptr, &quad_i.p) == HESSLAB_OK);
    str_guard isow;
    CHECK(hesslab_isotropy(quad_i.p, 20, 1, &isow.s) == HESSLAB_OK);
    CHECK(nlohmann::json::parse(isow.str()).at("outcome") == "witness");
}

TEST_CASE("classification and inversion through the C surface") {
    poly_guard p;
    REQUIRE(hesslab_parse("x1^2*x2 + x1^3*x3", 3, "Q", nullptr, &p.p) == HESSLAB_OK);
    str_guard cls;
    REQUIRE(hesslab_classify(p.p, 1, &cls.s) == HESSLAB_OK);
    CHECK(nlohmann::json::parse(cls.str()).at("tag") == "Rank1Family");

    const char* comps[] = {"x2 + 3*x1^2", "x1"};
    str_guard inv;
    REQUIRE(hesslab_invert(comps, 2, 2, "Q", nullptr, 1, &inv.s) == HESSLAB_OK);
    auto j = nlohmann::json::parse(inv.str());
    CHECK(j.at("components").at(0) == "x2");

    // leadpart
    poly_guard lp;
    REQUIRE(hesslab_parse("x1^3 + x1*x2", 2, "Q", nullptr, &lp.p) == HESSLAB_OK);
    str_guard lead;
    REQUIRE(hesslab_lead_part(lp.p, "1,2", 1, &lead.s) == HESSLAB_OK);
    auto lj = nlohmann::json::parse(lead.str());
    CHECK(lj.at("value") == "3");
}

TEST_CASE("fixtures replay through the C surface") {
    str_guard rep;
    CHECK(hesslab_verify_fixture("dillen4", 0, &rep.s) == HESSLAB_OK);
    CHECK(rep.str().find("FAIL") == std::string::npos);
}
