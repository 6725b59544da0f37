#include "hesslab/univariate.hpp"

#include <doctest.h>

using namespace hesslab;

namespace {
unipoly make(std::initializer_list<long> coeffs) {
    std::vector<scalar> c;
    for (long v : coeffs) c.emplace_back(v);
    return unipoly(std::move(c));
}
} // namespace

TEST_CASE("division and gcd") {
    unipoly p = make({-2, 1});           // u - 2
    unipoly q = make({-3, 1});           // u - 3
    unipoly prod = p * p * q;
    auto [quot, rem] = prod.divmod(p);
    CHECK(rem.is_zero());
    CHECK(quot == p * q);
    CHECK(uni_gcd(prod, p * q) == (p * q).monic());
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
    unipoly p = make({-2, 1});
    unipoly q = make({3, 1});
    unipoly f = p * p * p * q; // (u-2)^3 (u+3)
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == 1);
    CHECK(parts[0].first == q.monic());
    CHECK(parts[1].second == 3);
    CHECK(parts[1].first == p.monic());
}

TEST_CASE("rational roots with multiplicity") {
    // 6 u^3 - u^2 - u  = u (3u + 1)(2u - 1)
    unipoly f = make({0, -1, -1, 6});
    auto roots = roots_in_field(f, field_kind::Q);
    REQUIRE(roots.size() == 3);
    bool seen_zero = false, seen_third = false, seen_half = false;
    for (const auto& [r, m] : roots) {
        CHECK(m == 1);
        if (r == scalar(0)) seen_zero = true;
        if (r == scalar::from_fraction(-1, 3)) seen_third = true;
        if (r == scalar::from_fraction(1, 2)) seen_half = true;
    }
    CHECK(seen_zero);
    CHECK(seen_third);
    CHECK(seen_half);

    // u^2 + 1 has no rational roots
    CHECK(roots_in_field(make({1, 0, 1}), field_kind::Q).empty());
}

TEST_CASE("gaussian rational roots") {
    // u^2 + 1 = (u - i)(u + i)
    auto roots = roots_in_field(make({1, 0, 1}), field_kind::Qi);
    REQUIRE(roots.size() == 2);
    for (const auto& [r, m] : roots) {
        CHECK(m == 1);
        CHECK(r * r == scalar(-1));
    }

    // (u - (1+i))^2 (u - 2)
    unipoly lin({-scalar(mpq_class(1), mpq_class(1)), scalar(1)});
    unipoly f = lin * lin * unipoly({scalar(-2), scalar(1)});
    auto roots2 = roots_in_field(f, field_kind::Qi);
    REQUIRE(roots2.size() == 2);
    bool seen_gauss = false;
    for (const auto& [r, m] : roots2) {
        if (r == scalar(mpq_class(1), mpq_class(1))) {
            seen_gauss = true;
            CHECK(m == 2);
        }
    }
    CHECK(seen_gauss);
}
