#include "hesslab/parser.hpp"
#include "hesslab/poly.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace hesslab;

TEST_CASE("parsing reads terms exactly") {
    auto ctx = make_context(field_kind::Q, 2);
    polynomial f = parse_poly("x1*x2 + 3/2*x2^2", ctx);
    CHECK(f.coefficient({1, 1}) == scalar(1));
    CHECK(f.coefficient({0, 2}) == scalar::from_fraction(3, 2));
    CHECK(f.term_count() == 2);
}

TEST_CASE("parenthesized powers of sums expand eagerly") {
    auto ctx = make_context(field_kind::Q, 3);
    polynomial f = parse_poly("(x2 + x1*x3)^3", ctx);
    CHECK(f.term_count() == 4);
    // coefficient of x2^2 * (x1 x3)
    CHECK(f.coefficient({1, 2, 1}) == scalar(3));
}

TEST_CASE("parameters are carried along") {
    auto ctx = make_context(field_kind::Q, 2, {"t"});
    polynomial f = parse_poly("x1*x2 + t*x1*x2^2", ctx);
    CHECK(f.coefficient({1, 2, 1}) == scalar(1));
    CHECK(f.degree() == 3); // t does not contribute
    polynomial at0 = f.substitute_param("t", scalar(0));
    CHECK(at0.term_count() == 1);
}

TEST_CASE("parse errors carry positions and kinds") {
    auto ctx = make_context(field_kind::Q, 2);
    CHECK_THROWS_WITH_AS(parse_poly("x1 + ", ctx), doctest::Contains("SyntaxError"), error);
    CHECK_THROWS_AS(parse_poly("x1 + y", ctx), error);
    try {
        parse_poly("x1 + x7", ctx);
        FAIL("expected UnknownVariable");
    } catch (const error& e) {
        CHECK(e.code() == errc::unknown_variable);
    }
    // the imaginary unit needs field Qi
    CHECK_THROWS_AS(parse_poly("i*x1", ctx), error);
    auto ctxi = make_context(field_kind::Qi, 2);
    CHECK(parse_poly("i*x1", ctxi).coefficient({1, 0}) == scalar::imaginary_unit());
}

TEST_CASE("derivatives follow the calculus rules") {
    auto ctx = make_context(field_kind::Q, 3, {"t"});
    CHECK(parse_poly("x1^3", ctx).derivative(0) == parse_poly("3*x1^2", ctx));
    CHECK(parse_poly("x1*x2 + t*x1*x2^2", ctx).derivative(1) ==
          parse_poly("x1 + 2*t*x1*x2", ctx));
    CHECK(parse_poly("x1*x2", ctx).derivative(2).is_zero());
}

TEST_CASE("graded parts slice by variable degree") {
    auto ctx = make_context(field_kind::Q, 2);
    auto parts = graded_parts(parse_poly("x1*x2 + x1^3", ctx));
    CHECK(parts.degree == 3);
    CHECK(parts.quadratic_part == parse_poly("x1*x2", ctx));
    CHECK(*parts.leading == parse_poly("x1^3", ctx));

    auto constant = graded_parts(parse_poly("5", ctx));
    CHECK(constant.degree == 0);
    CHECK(constant.quadratic_part.is_zero());
    CHECK(constant.linear_part.is_zero());
    CHECK(*constant.leading == parse_poly("5", ctx));

    auto zero = graded_parts(polynomial(ctx));
    CHECK(zero.degree == -1);
    CHECK(!zero.leading.has_value());
    CHECK_THROWS_AS(polynomial(ctx).leading_form(), error);
}

TEST_CASE("linear substitution matches expansion") {
    auto ctx = make_context(field_kind::Q, 2);
    scalar_matrix T(2, 2);
    T.at(0, 0) = scalar(1);
    T.at(0, 1) = scalar(1);
    T.at(1, 1) = scalar(1);
    CHECK(parse_poly("x1^2", ctx).substitute_linear(T) ==
          parse_poly("x1^2 + 2*x1*x2 + x2^2", ctx));

    scalar_matrix swap(2, 2);
    swap.at(0, 1) = scalar(1);
    swap.at(1, 0) = scalar(1);
    CHECK(parse_poly("x1*x2", ctx).substitute_linear(swap) == parse_poly("x1*x2", ctx));
    CHECK(parse_poly("x1*x2 + x2^3", ctx).substitute_linear(swap) ==
          parse_poly("x1*x2 + x1^3", ctx));
}

TEST_CASE("properties: print/parse fixed point, derivative symmetry, substitution round trip") {
    testgen::rng_t rng(20240801);
    for (int field_i = 0; field_i < 2; ++field_i) {
        field_kind field = field_i ? field_kind::Qi : field_kind::Q;
        for (int rep = 0; rep < 40; ++rep) {
            std::size_t n = std::size_t(testgen::rand_int(rng, 1, 3));
            auto ctx = make_context(field, n);
            polynomial f = testgen::rand_poly(rng, ctx, 4, 6);
            if (field == field_kind::Qi && rep % 2) {
                f = f.scaled(scalar::imaginary_unit()) + testgen::rand_poly(rng, ctx, 3, 3);
            }

            CHECK(parse_poly(f.str(), ctx) == f);

            polynomial g = testgen::rand_poly(rng, ctx, 4, 5);
            scalar a = testgen::rand_scalar(rng);
            for (std::size_t i = 0; i < n; ++i) {
                // linearity of the derivative
                CHECK((f.scaled(a) + g).derivative(i) == f.derivative(i).scaled(a) + g.derivative(i));
                for (std::size_t j = 0; j < n; ++j)
                    CHECK(f.derivative(i).derivative(j) == f.derivative(j).derivative(i));
            }

            transform T = testgen::rand_invertible(rng, n);
            polynomial through = f.substitute_linear(T.mat()).substitute_linear(T.inv());
            CHECK(through == f);
            CHECK(f.substitute_linear(T.mat()).degree() == f.degree());

            // substitution is a ring homomorphism on samples
            CHECK((f * g).substitute_linear(T.mat()) ==
                  f.substitute_linear(T.mat()) * g.substitute_linear(T.mat()));
        }
    }
}
