#include "hesslab/gradmap.hpp"

#include "hesslab/calculus.hpp"
#include "hesslab/parser.hpp"
#include "hesslab/triangulate.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace hesslab;

TEST_CASE("keller check") {
    auto ctx = make_context(field_kind::Q, 2);
    poly_map F{parse_poly("x2 + 3*x1^2", ctx), parse_poly("x1", ctx)};
    auto r = keller_check(F);
    CHECK(r.is_keller);
    CHECK(r.det == parse_poly("-1", ctx));

    auto ctx1 = make_context(field_kind::Q, 1);
    auto r2 = keller_check(poly_map{parse_poly("3*x1^2", ctx1)});
    CHECK(!r2.is_keller);
    CHECK(r2.det == parse_poly("6*x1", ctx1));

    poly_map id{parse_poly("x1", ctx), parse_poly("x2", ctx)};
    CHECK(keller_check(id).is_keller);
    CHECK(keller_check(id).det == parse_poly("1", ctx));
}

TEST_CASE("anti-triangular inversion") {
    auto ctx = make_context(field_kind::Q, 2);
    poly_map F{parse_poly("x2 + 3*x1^2", ctx), parse_poly("x1", ctx)};
    auto inv = invert_antitriangular(F);
    CHECK(inv.G[0] == parse_poly("x2", ctx));
    CHECK(inv.G[1] == parse_poly("x1 - 3*x2^2", ctx));
    CHECK(inv.constants == std::vector<scalar>{scalar(1), scalar(1)});

    // c * reversal inverts to (1/c) * reversal
    poly_map R{parse_poly("5*x2", ctx), parse_poly("5*x1", ctx)};
    auto invR = invert_antitriangular(R);
    CHECK(invR.G[0] == parse_poly("1/5*x2", ctx));
    CHECK(invR.G[1] == parse_poly("1/5*x1", ctx));

    // The Jacobian of G is zero above the anti-diagonal, so conjugating by
    // the order reversal makes it anti-triangular again; inverting that
    // returns the reversal conjugate of F.
    auto reverse_conj = [&](const poly_map& M) {
        const std::size_t n = M.size();
        scalar_matrix J = scalar_matrix::flipped_identity(n);
        poly_map out;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(M[n - 1 - i].substitute_linear(J));
        return out;
    };
    auto invinv = invert_antitriangular(reverse_conj(inv.G));
    poly_map expect = reverse_conj(F);
    CHECK(invinv.G[0] == expect[0]);
    CHECK(invinv.G[1] == expect[1]);

    // rejection paths: the identity's Jacobian has a nonzero (2,2) entry,
    // which lies below the anti-diagonal
    poly_map bad{parse_poly("x1", ctx), parse_poly("x2", ctx)};
    CHECK_THROWS_AS(invert_antitriangular(bad), error);

    poly_map bad2{parse_poly("x2", ctx), parse_poly("x1 + x2^2", ctx)};
    CHECK_THROWS_AS(invert_antitriangular(bad2), error);
}

TEST_CASE("unipotency verification") {
    auto ctx = make_context(field_kind::Q, 2);
    CHECK(verify_unipotent(poly_map{parse_poly("x1", ctx), parse_poly("x2 + 3*x1^2", ctx)}));
    CHECK(verify_unipotent(poly_map{parse_poly("x1", ctx), parse_poly("x2", ctx)}));
    CHECK(!verify_unipotent(poly_map{parse_poly("x1 + x2^2", ctx), parse_poly("x2", ctx)}));
}

TEST_CASE("pipeline witnesses invert and normalize to unipotent maps") {
    testgen::rng_t rng(24601);
    for (int rep = 0; rep < 8; ++rep) {
        std::size_t n = rep % 2 ? 3 : 2;
        int deg = 3;
        auto pc = testgen::rand_pipeline_case(rng, field_kind::Q, n, deg);
        auto res = dillen_pipeline(pc.f);
        REQUIRE(res.witness.has_value());
        const transform& T = res.witness->T;

        poly_map F = gradient(pc.f.substitute_linear(T.mat()));
        auto inv = invert_antitriangular(F);
        CHECK(is_identity_map(compose(F, inv.G)));
        CHECK(is_identity_map(compose(inv.G, F)));

        auto norm = normalize_linear_part(pc.f, T);
        transform TL = T.then(norm.L);
        poly_map FL = gradient(pc.f.substitute_linear(TL.mat()));
        // reverse the components and divide by c: the linear part becomes x
        poly_map U;
        scalar cinv = norm.c.inverse();
        for (std::size_t i = 0; i < n; ++i) U.push_back(FL[n - 1 - i].scaled(cinv));
        CHECK(verify_unipotent(U));
    }
}
