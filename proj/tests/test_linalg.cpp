#include "hesslab/linalg.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace hesslab;

TEST_CASE("basic exact matrix operations") {
    scalar_matrix J2 = scalar_matrix::flipped_identity(2);
    CHECK(J2.determinant() == -scalar(1));
    CHECK(scalar_matrix::flipped_identity(3).determinant() == -scalar(1));

    scalar_matrix U(2, 2);
    U.at(0, 0) = scalar(1);
    U.at(0, 1) = scalar(1);
    U.at(1, 1) = scalar(1);
    scalar_matrix Uinv = U.inverse();
    CHECK(Uinv.at(0, 1) == -scalar(1));
    CHECK(U * Uinv == scalar_matrix::identity(2));

    scalar_matrix S(2, 2);
    CHECK_THROWS_AS(S.inverse(), error); // zero matrix is singular
}

TEST_CASE("nullspace basics and rank-nullity") {
    scalar_matrix A(1, 2);
    A.at(0, 0) = scalar(1);
    A.at(0, 1) = scalar(1);
    auto ns = A.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<scalar>{scalar(1), -scalar(1)});

    CHECK(scalar_matrix::identity(3).nullspace().empty());

    scalar_matrix B(2, 3);
    B.at(0, 0) = scalar(1);
    B.at(0, 1) = scalar(2);
    B.at(0, 2) = scalar(3);
    B.at(1, 0) = scalar(2);
    B.at(1, 1) = scalar(4);
    B.at(1, 2) = scalar(6);
    auto basis = B.nullspace();
    CHECK(basis.size() == 2);
    for (const auto& v : basis) {
        auto image = B.apply(v);
        for (const auto& s : image) CHECK(s.is_zero());
    }
    CHECK(B.rank() + basis.size() == B.cols());

    testgen::rng_t rng(9090);
    for (int rep = 0; rep < 40; ++rep) {
        scalar_matrix M = testgen::rand_matrix(rng, std::size_t(testgen::rand_int(rng, 1, 4)),
                                               std::size_t(testgen::rand_int(rng, 1, 4)));
        auto nsp = M.nullspace();
        CHECK(M.rank() + nsp.size() == M.cols());
        for (const auto& v : nsp)
            for (const auto& s : M.apply(v)) CHECK(s.is_zero());
    }
}

TEST_CASE("anti-diagonal factorization examples") {
    // n = 2, M = J
    scalar_matrix J = scalar_matrix::flipped_identity(2);
    scalar_matrix L = anti_lower_factorize(J, field_kind::Q);
    CHECK(L == scalar_matrix::identity(2));

    scalar_matrix M(2, 2);
    M.at(0, 0) = scalar(2);
    M.at(0, 1) = scalar(1);
    M.at(1, 0) = scalar(1);
    L = anti_lower_factorize(M, field_kind::Q);
    CHECK(L.is_lower_triangular());
    CHECK(L.transpose() * J * L == M);

    scalar_matrix N(3, 3);
    N.at(0, 0) = scalar(1);
    N.at(0, 2) = scalar(1);
    N.at(2, 0) = scalar(1);
    N.at(1, 1) = scalar(1);
    scalar_matrix L3 = anti_lower_factorize(N, field_kind::Q);
    CHECK(L3.is_lower_triangular());
    CHECK(L3.transpose() * scalar_matrix::flipped_identity(3) * L3 == N);

    // middle entry 2 is not a square over Q
    scalar_matrix P = N;
    P.at(1, 1) = scalar(2);
    CHECK_THROWS_AS(anti_lower_factorize(P, field_kind::Q), error);
    // ... and not over Q(i) either
    CHECK_THROWS_AS(anti_lower_factorize(P, field_kind::Qi), error);
    // but -1 is a square over Q(i)
    P.at(1, 1) = scalar(-1);
    scalar_matrix Li = anti_lower_factorize(P, field_kind::Qi);
    CHECK(Li.transpose() * scalar_matrix::flipped_identity(3) * Li == P);
}

TEST_CASE("factorization round-trip and triangular stability properties") {
    testgen::rng_t rng(31337);
    for (int rep = 0; rep < 200; ++rep) {
        std::size_t n = std::size_t(testgen::rand_int(rng, 1, 6));
        scalar_matrix M = testgen::rand_symmetric_antitriangular(rng, n);
        scalar_matrix L = anti_lower_factorize(M, field_kind::Q);
        CHECK(L.is_lower_triangular());
        CHECK(L.transpose() * scalar_matrix::flipped_identity(n) * L == M);

        // U M L' stays zero below the anti-diagonal
        scalar_matrix U = testgen::rand_upper_triangular(rng, n);
        scalar_matrix Lp = testgen::rand_lower_triangular(rng, n);
        CHECK((U * M * Lp).is_zero_below_antidiagonal());
    }
}

TEST_CASE("symmetric congruence diagonalization") {
    scalar_matrix D(2, 2);
    D.at(0, 0) = scalar(3);
    D.at(1, 1) = scalar(-5);
    auto r = diagonalize_symmetric(D, field_kind::Q);
    CHECK(r.S.mat() == scalar_matrix::identity(2));

    scalar_matrix M(2, 2);
    M.at(0, 1) = scalar(1);
    M.at(1, 0) = scalar(1);
    auto r2 = diagonalize_symmetric(M, field_kind::Q);
    scalar_matrix back = r2.S.mat().transpose() * M * r2.S.mat();
    CHECK(back == r2.D);
    CHECK(!r2.D.at(0, 0).is_zero());
    CHECK(r2.D.at(0, 1).is_zero());

    // unit normalization fails when roots are missing: diag(2,3) over Q(i)
    scalar_matrix N(2, 2);
    N.at(0, 0) = scalar(2);
    N.at(1, 1) = scalar(3);
    CHECK_THROWS_AS(diagonalize_symmetric(N, field_kind::Qi, true), error);
    // diag(-1, 1/4) over Q(i) normalizes to the identity
    scalar_matrix P(2, 2);
    P.at(0, 0) = scalar(-1);
    P.at(1, 1) = scalar::from_fraction(1, 4);
    auto r3 = diagonalize_symmetric(P, field_kind::Qi, true);
    CHECK(r3.S.mat().transpose() * P * r3.S.mat() == scalar_matrix::identity(2));

    testgen::rng_t rng(1234);
    for (int rep = 0; rep < 50; ++rep) {
        std::size_t n = std::size_t(testgen::rand_int(rng, 1, 4));
        scalar_matrix A = testgen::rand_matrix(rng, n, n);
        scalar_matrix sym = A + A.transpose();
        auto rr = diagonalize_symmetric(sym, field_kind::Q);
        scalar_matrix got = rr.S.mat().transpose() * sym * rr.S.mat();
        CHECK(got == rr.D);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) CHECK(got.at(i, j).is_zero());
    }
}

TEST_CASE("right flag complement produces anti-triangular products") {
    scalar_matrix one(1, 1);
    one.at(0, 0) = scalar(1);
    CHECK(right_flag_complement(one) == one);

    scalar_matrix I2 = scalar_matrix::identity(2);
    scalar_matrix S = right_flag_complement(I2);
    CHECK(S == scalar_matrix::flipped_identity(2));

    scalar_matrix M(2, 2);
    M.at(0, 0) = scalar(1);
    M.at(0, 1) = scalar(1);
    M.at(1, 1) = scalar(1);
    scalar_matrix S2 = right_flag_complement(M);
    CHECK((M * S2).is_zero_below_antidiagonal());
    CHECK(!S2.determinant().is_zero());

    testgen::rng_t rng(808);
    for (int rep = 0; rep < 60; ++rep) {
        std::size_t n = std::size_t(testgen::rand_int(rng, 1, 4));
        scalar_matrix R = testgen::rand_matrix(rng, n, n);
        scalar_matrix SS;
        try {
            SS = right_flag_complement(R);
        } catch (const error& e) {
            CHECK(e.code() == errc::rank_deficient);
            continue;
        }
        CHECK(!SS.determinant().is_zero());
        CHECK((R * SS).is_zero_below_antidiagonal());
    }
}
