#include <doctest.h>

#include "cliffdkp/dkp.hpp"
#include "cliffdkp/error.hpp"
#include "cliffdkp/random.hpp"

using namespace cliffdkp;

namespace {
std::vector<Rational> e(int i, int n) {
    std::vector<Rational> v(n);
    v[i - 1] = 1;
    return v;
}
constexpr DkpFamily kAll[] = {DkpFamily::b_upper, DkpFamily::b_upper_neg, DkpFamily::b_lower_neg,
                              DkpFamily::beta_lower, DkpFamily::beta_lower_neg};
}  // namespace

TEST_SUITE("dkp") {

TEST_CASE("family names round trip") {
    for (auto f : kAll)
        CHECK(parse_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_family("gamma"), std::invalid_argument);
}

TEST_CASE("golden forms with the Euclidean metric") {
    const Metric g = Metric::euclidean(2);
    CHECK(make_generator(DkpFamily::b_upper_neg, Covector{e(1, 2)}, g) == basis({1}, {}, 2) - basis({}, {1}, 2));
    CHECK(make_generator(DkpFamily::b_upper, Covector{e(2, 2)}, g) == basis({2}, {}, 2) + basis({}, {2}, 2));
    CHECK(make_generator(DkpFamily::b_lower_neg, Vector{e(1, 2)}, g) == basis({}, {1}, 2) - basis({1}, {}, 2));
    CHECK(make_generator(DkpFamily::beta_lower, BasisIndex{2}, g) == basis({}, {2}, 2) + basis({2}, {}, 2));
    CHECK(make_generator(DkpFamily::beta_lower_neg, BasisIndex{1}, g) == basis({}, {1}, 2) - basis({1}, {}, 2));
}

TEST_CASE("argument kinds are enforced") {
    const Metric g = Metric::euclidean(2);
    CHECK_THROWS_AS(make_generator(DkpFamily::b_upper, Vector{e(1, 2)}, g), std::invalid_argument);
    CHECK_THROWS_AS(make_generator(DkpFamily::b_lower_neg, Covector{e(1, 2)}, g), std::invalid_argument);
    CHECK_THROWS_AS(make_generator(DkpFamily::beta_lower, Covector{e(1, 2)}, g), std::invalid_argument);
    CHECK_THROWS_AS(make_generator(DkpFamily::beta_lower, BasisIndex{3}, g), RangeError);
    CHECK_THROWS_AS(Metric(RationalMatrix({{1, 1}, {1, 1}})), MetricError);
    CHECK_THROWS_AS(Metric(RationalMatrix({{1, 2}, {0, 1}})), MetricError);
}

TEST_CASE("beta_1 cubed") {
    for (int n = 1; n <= 3; ++n) {
        const auto b = make_generator(DkpFamily::beta_lower_neg, BasisIndex{1}, Metric::euclidean(n));
        CHECK(mul(mul(b, b), b) == -b);
        const auto c = make_generator(DkpFamily::beta_lower, BasisIndex{1}, Metric::euclidean(n));
        CHECK(mul(mul(c, c), c) == c);
    }
}

TEST_CASE("DKP unit") {
    CHECK(dkp_unit(1) == basis({}, {}, 1) + basis({1}, {1}, 1));
    Rng rng(31);
    for (int n = 1; n <= 4; ++n) {
        const auto u = dkp_unit(n);
        CHECK(mul(u, u) == u);
        const Metric g(rng.symmetric_invertible(n));
        const auto b = make_generator(DkpFamily::b_upper, Covector{rng.vector(n)}, g);
        CHECK(mul(u, b) == b);
        CHECK(mul(b, u) == b);
        for (int i = 1; i <= n; ++i) {
            const auto beta = make_generator(DkpFamily::beta_lower, BasisIndex{i}, g);
            CHECK(mul(u, beta) == beta);
            CHECK(mul(beta, u) == beta);
        }
    }
}

TEST_CASE("trilinear examples") {
    const Metric g = Metric::euclidean(2);
    CHECK(check_trilinear(DkpFamily::b_upper_neg, Covector{e(1, 2)}, Covector{e(2, 2)}, Covector{e(1, 2)}, g).is_zero());
    CHECK(check_trilinear(DkpFamily::beta_lower, BasisIndex{1}, BasisIndex{1}, BasisIndex{1}, g).is_zero());
    CHECK_THROWS_AS(check_trilinear(DkpFamily::beta_lower, Covector{e(1, 2)}, BasisIndex{1}, BasisIndex{1}, g),
                    std::invalid_argument);
}

TEST_CASE("trilinear relations, random arguments and metrics") {
    Rng rng(32);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k < 50; ++k) {
            const Metric g(rng.symmetric_invertible(n));
            CHECK(check_trilinear(DkpFamily::b_upper, Covector{rng.vector(n)}, Covector{rng.vector(n)},
                                  Covector{rng.vector(n)}, g)
                      .is_zero());
            CHECK(check_trilinear(DkpFamily::b_upper_neg, Covector{rng.vector(n)}, Covector{rng.vector(n)},
                                  Covector{rng.vector(n)}, g)
                      .is_zero());
            CHECK(check_trilinear(DkpFamily::b_lower_neg, Vector{rng.vector(n)}, Vector{rng.vector(n)},
                                  Vector{rng.vector(n)}, g)
                      .is_zero());
            const int i = rng.uniform(1, n), j = rng.uniform(1, n), l = rng.uniform(1, n);
            CHECK(check_trilinear(DkpFamily::beta_lower, BasisIndex{i}, BasisIndex{j}, BasisIndex{l}, g).is_zero());
            CHECK(check_trilinear(DkpFamily::beta_lower_neg, BasisIndex{i}, BasisIndex{j}, BasisIndex{l}, g).is_zero());
        }
}

TEST_CASE("negating the metric swaps the sign families") {
    Rng rng(33);
    for (int n = 1; n <= 3; ++n) {
        const Metric g(rng.symmetric_invertible(n));
        const Metric ng = g.negated();
        for (int k = 0; k < 5; ++k) {
            const Covector a{rng.vector(n)}, b{rng.vector(n)}, c{rng.vector(n)};
            CHECK(make_generator(DkpFamily::b_upper, a, ng) == make_generator(DkpFamily::b_upper_neg, a, g));
            CHECK(check_trilinear(DkpFamily::b_upper, a, b, c, ng) == check_trilinear(DkpFamily::b_upper_neg, a, b, c, g));
        }
        for (int i = 1; i <= n; ++i)
            CHECK(make_generator(DkpFamily::beta_lower, BasisIndex{i}, ng) ==
                  make_generator(DkpFamily::beta_lower_neg, BasisIndex{i}, g));
    }
}

TEST_CASE("frame-mapped generators") {
    Rng rng(34);
    for (int n = 1; n <= 3; ++n) {
        const FrameMap id = FrameMap::identity(n);
        const Metric delta = Metric::euclidean(n);
        for (int mu = 1; mu <= n; ++mu)
            CHECK(beta_mu(id, mu, BetaVariant::upper_neg) == make_generator(DkpFamily::b_upper_neg, Covector{e(mu, n)}, delta));

        const FrameMap L(rng.invertible(n));
        for (int b = 1; b <= n; ++b) {
            AlgebraElement sum(n);
            for (int mu = 1; mu <= n; ++mu)
                sum += L.at(mu, b) * beta_mu(L, mu, BetaVariant::lower_neg);
            CHECK(sum == make_generator(DkpFamily::b_lower_neg, Vector{e(b, n)}, delta));
        }
        CHECK_THROWS_AS(beta_mu(L, n + 1, BetaVariant::upper_neg), RangeError);
    }
    CHECK_THROWS_AS(FrameMap(RationalMatrix({{1, 2}, {2, 4}})), MetricError);
}

TEST_CASE("k-symplectic relation closes on Lambda Lambda^T") {
    Rng rng(35);
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t < 3; ++t) {
            const FrameMap L(rng.invertible(n));
            const RationalMatrix eta = L.lambda() * L.lambda().transpose();
            for (int mu = 1; mu <= n; ++mu)
                for (int nu = 1; nu <= n; ++nu)
                    for (int ga = 1; ga <= n; ++ga)
                        CHECK(ksymplectic_residual(L, eta, mu, nu, ga).is_zero());
        }
}

TEST_CASE("k-symplectic relation with delta for orthogonal frames") {
    // signed permutation matrix
    const FrameMap L(RationalMatrix({{0, -1, 0}, {0, 0, 1}, {1, 0, 0}}));
    const auto I = RationalMatrix::identity(3);
    for (int mu = 1; mu <= 3; ++mu)
        for (int nu = 1; nu <= 3; ++nu)
            for (int ga = 1; ga <= 3; ++ga)
                CHECK(ksymplectic_residual(L, I, mu, nu, ga).is_zero());
}

TEST_CASE("delta form fails for a non-orthogonal frame") {
    const FrameMap L(RationalMatrix({{2, 0}, {0, 1}}));
    CHECK_FALSE(ksymplectic_residual(L, RationalMatrix::identity(2), 1, 1, 1).is_zero());
}

}
