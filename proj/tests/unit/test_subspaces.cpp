#include <doctest.h>

#include "../support/oracles.hpp"
#include "cliffdkp/dkp.hpp"
#include "cliffdkp/error.hpp"
#include "cliffdkp/random.hpp"
#include "cliffdkp/subspaces.hpp"

using namespace cliffdkp;

TEST_SUITE("subspaces") {

TEST_CASE("bases for n = 2") {
    const int n = 2;
    auto keys = [&](std::initializer_list<std::pair<std::initializer_list<int>, std::initializer_list<int>>> l) {
        std::vector<BasisElement> v;
        for (const auto& [u, w] : l)
            v.push_back({MultiIndex(u, n), MultiIndex(w, n)});
        return v;
    };
    CHECK(zp_basis(2, 0) == keys({{{}, {}}, {{1}, {}}, {{2}, {}}}));
    CHECK(zp_basis(2, 1) == keys({{{}, {1}}, {{}, {2}}, {{1}, {1}}, {{1}, {2}}, {{2}, {1}}, {{2}, {2}}}));
    CHECK(zp_basis(2, 2).size() == 3);
    CHECK_THROWS_AS(zp_basis(2, 3), RangeError);
}

TEST_CASE("dimension formula") {
    CHECK(dim_zp(3, 1) == 12);
    CHECK(dim_zp(2, 0) == 3);
    CHECK(dim_zp(4, 4) == 5);
    for (int n = 1; n <= 6; ++n)
        for (int p = 0; p <= n; ++p) {
            CHECK(zp_basis(n, p).size() == dim_zp(n, p));
            CHECK(dim_zp(n, p) == (n + 1) * oracle::binomial(n, p));
        }
    CHECK_THROWS_AS(dim_zp(3, -1), RangeError);
}

TEST_CASE("membership") {
    CHECK(in_zp(projector_P(3), 3, 0));
    CHECK_FALSE(in_zp(basis({1}, {1}, 3), 3, 0));
    CHECK(in_zp(basis({1}, {1}, 3), 3, 1));
    CHECK_FALSE(in_zp(basis({1, 2}, {1}, 3), 3, 1));
}

TEST_CASE("action for p = 0 and p = 1") {
    Rng rng(41);
    for (int n = 1; n <= 3; ++n) {
        const Metric g(rng.symmetric_invertible(n));
        const auto alpha = rng.vector(n), gamma = rng.vector(n), beta = rng.vector(n);
        const Rational s = rng.rational();
        const auto gen = make_generator(DkpFamily::b_upper_neg, Covector{alpha}, g);
        const auto P = projector_P(n);
        const auto upper = [&](const std::vector<Rational>& a) { return mul(embed_covector(a), P); };
        // p = 0: s(^alpha P) - g^{-1}(alpha, gamma)(P)
        CHECK(act_dkp(gen, s * P + upper(gamma), 0) == s * upper(alpha) - g.pair_inv(alpha, gamma) * P);
        // p = 1: (^alpha P_v) - g^{-1}(alpha, beta)(P_w)
        const auto v = rng.vector(n), w = rng.vector(n);
        const auto Pv = mul(P, embed_vector(v)), Pw = mul(P, embed_vector(w));
        const auto z = Pv + mul(upper(beta), Pw);
        CHECK(act_dkp(gen, z, 1) == mul(upper(alpha), Pv) - g.pair_inv(alpha, beta) * Pw);
    }
}

TEST_CASE("closure and the DKP unit") {
    Rng rng(42);
    for (int n = 1; n <= 4; ++n)
        for (int p = 0; p <= n; ++p)
            for (int k = 0; k < 10; ++k) {
                const Metric g(rng.symmetric_invertible(n));
                const auto z = rng.zp_element(n, p);
                const auto r = act_dkp(make_generator(DkpFamily::b_upper_neg, Covector{rng.vector(n)}, g), z, p);
                CHECK(oracle::in_zp(r, p));
                CHECK(mul(dkp_unit(n), z) == z);
            }
}

TEST_CASE("action guards") {
    const int n = 2;
    const auto gen = make_generator(DkpFamily::b_upper_neg, Covector{{1, 0}}, Metric::euclidean(n));
    CHECK_THROWS_AS(act_dkp(gen, basis({1}, {1}, n), 0), MembershipError);
    CHECK_THROWS_AS(act_dkp(unit(n), projector_P(n), 0), MembershipError);
}

TEST_CASE("antisymmetric constructors") {
    const int n = 3;
    const int vw[] = {1, 3}, wv[] = {3, 1}, vv[] = {2, 2};
    CHECK(zp_lower(vw, n) == -zp_lower(wv, n));
    CHECK(zp_upper(2, vw, n) == -zp_upper(2, wv, n));
    CHECK(zp_lower(vv, n).is_zero());
    CHECK(in_zp(zp_upper(1, vw, n), n, 2));
}

}
