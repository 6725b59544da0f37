#include "hesslab/serialize.hpp"

#include "hesslab/fixtures.hpp"
#include "hesslab/parser.hpp"

#include <doctest.h>

using namespace hesslab;

TEST_CASE("matrices round-trip through JSON") {
    scalar_matrix M(2, 3);
    M.at(0, 0) = scalar::from_fraction(1, 2);
    M.at(0, 2) = scalar(mpq_class(1), mpq_class(-2));
    M.at(1, 1) = scalar(-7);
    auto j = to_json(M);
    CHECK(matrix_from_json(j, field_kind::Qi) == M);
}

TEST_CASE("witness records round-trip and re-verify") {
    auto ctx = make_context(field_kind::Q, 2);
    auto f = parse_poly("x1*x2 + x2^3", ctx);
    auto res = dillen_pipeline(f);
    REQUIRE(res.witness.has_value());

    nlohmann::json j = to_json(*res.witness);
    anti_tri_witness back = witness_from_json(j, ctx);
    CHECK(back.T.mat() == res.witness->T.mat());
    CHECK(back.w.has_value());
    CHECK(*back.w == *res.witness->w);
    // re-deriving the witness from the parsed transform re-checks every invariant
    anti_tri_witness again =
        make_anti_tri_witness(f, back.T, back.route, back.w, back.leading);
    CHECK(to_json(again) == j);
}

TEST_CASE("certificates round-trip and replay") {
    quadratic_form Q = fixtures::qi_quartic_form();
    auto iso = isotropy_search(Q, 5);
    REQUIRE(iso.certificate.has_value());
    auto j = to_json(*iso.certificate);
    descent_certificate back = certificate_from_json(j);
    CHECK(check_certificate(Q, back));
    CHECK(to_json(back) == j);
}

TEST_CASE("identical inputs produce byte-identical output") {
    auto ctx = make_context(field_kind::Q, 3);
    auto f = parse_poly("x1*x3 + x2^2 + x3^3", ctx);
    auto a = dillen_pipeline(f);
    auto b = dillen_pipeline(f);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(to_json(*a.witness).dump() == to_json(*b.witness).dump());
    CHECK(f.str() == parse_poly(f.str(), ctx).str());
}
