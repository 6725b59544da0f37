#include "hesslab/calculus.hpp"

#include "hesslab/parser.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace hesslab;

TEST_CASE("gradient and hessian basics") {
    auto ctx = make_context(field_kind::Q, 2);
    auto f = parse_poly("x1*x2 + x1^3", ctx);
    poly_map g = gradient(f);
    CHECK(g[0] == parse_poly("x2 + 3*x1^2", ctx));
    CHECK(g[1] == parse_poly("x1", ctx));

    poly_matrix H = hessian(f);
    CHECK(H.at(0, 0) == parse_poly("6*x1", ctx));
    CHECK(H.at(0, 1) == parse_poly("1", ctx));
    CHECK(H.at(1, 1).is_zero());

    auto c = gradient(parse_poly("7", ctx));
    CHECK(c[0].is_zero());
    CHECK(c[1].is_zero());

    // the identity-map case
    auto q = parse_poly("1/2*x1^2 + 1/2*x2^2", ctx);
    CHECK(gradient(q)[0] == parse_poly("x1", ctx));
    CHECK(gradient(q)[1] == parse_poly("x2", ctx));
}

TEST_CASE("hessian determinant examples") {
    auto ctx2 = make_context(field_kind::Q, 2);
    auto ctx3 = make_context(field_kind::Q, 3);
    CHECK(hessian_determinant(parse_poly("x1*x2", ctx2)) == parse_poly("-1", ctx2));
    CHECK(hessian_determinant(parse_poly("x1*x2 + x1^3", ctx2)) == parse_poly("-1", ctx2));
    CHECK(hessian_determinant(parse_poly("x1*x3 + x2^2 + x1^2", ctx3)) ==
          parse_poly("-2", ctx3));

    poly_matrix wide(2, 3, ctx3);
    CHECK_THROWS_AS(poly_determinant(wide), error);
    auto ctx9 = make_context(field_kind::Q, 9);
    poly_matrix big(9, 9, ctx9);
    try {
        poly_determinant(big);
        FAIL("expected SizeLimitExceeded");
    } catch (const error& e) {
        CHECK(e.code() == errc::size_limit_exceeded);
    }
}

TEST_CASE("hessian is symmetric and the chain rule holds") {
    testgen::rng_t rng(77001);
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t n = std::size_t(testgen::rand_int(rng, 1, 3));
        auto ctx = make_context(field_kind::Q, n);
        polynomial f = testgen::rand_poly(rng, ctx, 4, 6);
        poly_matrix H = hessian(f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(H.at(i, j) == H.at(j, i));

        transform T = testgen::rand_invertible(rng, n);
        CHECK(check_chain_rule(f, T));
        CHECK(check_chain_rule(f, transform::identity(n)));

        // det H f(Tx) = (det T)^2 (det H f)|_{x=Tx}
        polynomial lhs = hessian_determinant(f.substitute_linear(T.mat()));
        scalar dT = T.mat().determinant();
        polynomial rhs = hessian_determinant(f).substitute_linear(T.mat()).scaled(dT * dT);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("chain rule on the dimension-four fixture shape") {
    auto ctx = make_context(field_kind::Q, 4);
    auto f = parse_poly("(x1 + x2^2)*x3 + (x2 + (x1 + x2^2)^2)*x4", ctx);
    testgen::rng_t rng(5150);
    transform T = testgen::rand_invertible(rng, 4, 2);
    CHECK(check_chain_rule(f, T));
}

TEST_CASE("fraction-free determinant agrees with the cofactor oracle") {
    testgen::rng_t rng(424242);
    for (int rep = 0; rep < 500; ++rep) {
        std::size_t n = std::size_t(testgen::rand_int(rng, 1, 4));
        auto ctx = make_context(field_kind::Q, n);
        poly_matrix M(n, n, ctx);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) M.at(i, j) = testgen::rand_poly(rng, ctx, 2, 2, 3);
        CHECK(poly_determinant(M) == determinant_cofactor(M));
    }
}
