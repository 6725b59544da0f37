#include "hesslab/quadform.hpp"

#include "hesslab/fixtures.hpp"
#include "hesslab/parser.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace hesslab;

namespace {
quadratic_form diag_form(std::vector<long> d, field_kind field) {
    quadratic_form Q;
    Q.field = field;
    Q.gram = scalar_matrix(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) Q.gram.at(i, i) = scalar(d[i]);
    return Q;
}
} // namespace

TEST_CASE("hessian evaluation at points") {
    auto ctx = make_context(field_kind::Q, 2);
    auto f = parse_poly("x1*x2 + x1^3", ctx);
    scalar_matrix H0 = hessian_at(f, {scalar(0), scalar(0)});
    CHECK(H0.at(0, 0).is_zero());
    CHECK(H0.at(0, 1) == scalar(1));
    scalar_matrix H1 = hessian_at(f, {scalar(1), scalar(0)});
    CHECK(H1.at(0, 0) == scalar(6));

    auto q = parse_poly("x1^2 + x1*x2", ctx);
    CHECK(hessian_at(q, {scalar(3), scalar(-7)}) == hessian_at(q, {scalar(0), scalar(0)}));

    CHECK_THROWS_AS(hessian_at(f, {scalar(1)}), error);
}

TEST_CASE("isotropy search: witnesses") {
    auto r = isotropy_search(diag_form({1, -1}, field_kind::Q), 1);
    REQUIRE(r.outcome == isotropy_result::kind::witness);
    CHECK(r.witness == std::vector<scalar>{scalar(1), scalar(1)});

    // witnesses null the form exactly and are primitive
    testgen::rng_t rng(135);
    for (int rep = 0; rep < 30; ++rep) {
        std::size_t n = std::size_t(testgen::rand_int(rng, 2, 3));
        scalar_matrix A = testgen::rand_matrix(rng, n, n, 2);
        quadratic_form Q{A + A.transpose(), field_kind::Q};
        auto res = isotropy_search(Q, 6);
        if (res.outcome != isotropy_result::kind::witness) continue;
        CHECK(Q.eval(res.witness).is_zero());
        bool nonzero = false;
        for (const auto& c : res.witness)
            if (!c.is_zero()) nonzero = true;
        CHECK(nonzero);
    }
}

TEST_CASE("isotropy search: certificates and unknowns") {
    auto r = isotropy_search(diag_form({1, 1, 1}, field_kind::Q), 10);
    REQUIRE(r.outcome == isotropy_result::kind::anisotropic);
    CHECK(r.certificate->descent_prime == 2);
    CHECK(check_certificate(diag_form({1, 1, 1}, field_kind::Q), *r.certificate));

    // the quartic form over Q(i)
    quadratic_form Q = fixtures::qi_quartic_form();
    auto r2 = isotropy_search(Q, 8);
    REQUIRE(r2.outcome == isotropy_result::kind::anisotropic);
    CHECK(r2.certificate->descent_prime == 5);
    REQUIRE(r2.certificate->rounds.size() == 2);
    CHECK(r2.certificate->rounds[0].steps.size() == 2); // (2+i) and (2-i)
    CHECK(check_certificate(Q, *r2.certificate));

    // the same diagonal over Q is positive definite, so never a witness
    auto r3 = isotropy_search(diag_form({1, 3, 5, 10}, field_kind::Q), 6);
    CHECK(r3.outcome != isotropy_result::kind::witness);
}

TEST_CASE("certificate replay rejects corruption") {
    auto Q = diag_form({1, 1, 1}, field_kind::Q);
    auto r = isotropy_search(Q, 6);
    REQUIRE(r.certificate.has_value());

    descent_certificate bad = *r.certificate;
    bad.rounds[0].steps[0].modulus = 3; // wrong modulus
    CHECK(!check_certificate(Q, bad));

    descent_certificate bad2 = *r.certificate;
    bad2.diagonal[0] = gaussian_int(7, 0); // diagonal mismatch
    CHECK(!check_certificate(Q, bad2));

    descent_certificate bad3 = *r.certificate;
    bad3.descent_prime = 4; // not prime: structurally malformed
    CHECK_THROWS_AS(check_certificate(Q, bad3), error);

    // a certificate must cover all coordinates
    descent_certificate bad4 = *r.certificate;
    bad4.rounds[0].targets.pop_back();
    CHECK(!check_certificate(Q, bad4));
}

TEST_CASE("definite harness") {
    auto ctx = make_context(field_kind::Q, 2);
    auto f = parse_poly("1/2*x1^2 + 1/2*x2^2", ctx);
    auto r = definite_harness(f, {scalar(0), scalar(0)});
    CHECK(r.verdict == harness_verdict::degree_two_confirmed);

    auto g = parse_poly("x1*x2 + x2^3", ctx);
    auto r2 = definite_harness(g, {scalar(0), scalar(0)});
    CHECK(r2.verdict == harness_verdict::hypothesis_fails);
    CHECK(r2.detail.find("isotropic") != std::string::npos);

    // anisotropy must be judged in the declared field
    auto ctxi = make_context(field_kind::Qi, 2);
    auto h = parse_poly("1/2*x1^2 + 1/2*x2^2", ctxi);
    auto r3 = definite_harness(h, {scalar(0), scalar(0)});
    CHECK(r3.verdict == harness_verdict::hypothesis_fails); // (1, i) nulls it

    auto z = parse_poly("x1^3", ctx);
    CHECK(definite_harness(z, {scalar(0), scalar(0)}).verdict ==
          harness_verdict::hypothesis_fails);
}

TEST_CASE("unknown outcomes never hide a small witness") {
    testgen::rng_t rng(7777);
    for (int rep = 0; rep < 25; ++rep) {
        std::size_t n = std::size_t(testgen::rand_int(rng, 2, 3));
        scalar_matrix A = testgen::rand_matrix(rng, n, n, 3);
        quadratic_form Q{A + A.transpose(), field_kind::Q};
        auto res = isotropy_search(Q, 10);
        if (res.outcome == isotropy_result::kind::witness) continue;
        // exhaustive brute force at height <= 10 must agree there is none
        bool found = false;
        std::vector<long> v(n, -10);
        for (;;) {
            std::vector<scalar> vs(n);
            bool zero = true;
            for (std::size_t i = 0; i < n; ++i) {
                vs[i] = scalar(v[i]);
                if (v[i]) zero = false;
            }
            if (!zero && Q.eval(vs).is_zero()) {
                found = true;
                break;
            }
            std::size_t k = 0;
            while (k < n && ++v[k] > 10) v[k++] = -10;
            if (k == n) break;
        }
        CHECK(!found);
    }
}
