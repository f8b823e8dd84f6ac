#include <doctest.h>

#include "../support/oracles.hpp"
#include "cliffdkp/core_algebra.hpp"
#include "cliffdkp/error.hpp"
#include "cliffdkp/random.hpp"

using namespace cliffdkp;

namespace {
AlgebraElement E(std::initializer_list<int> j, std::initializer_list<int> k, int n) { return basis(j, k, n); }
}

TEST_SUITE("core_algebra") {

TEST_CASE("products compose like matrix units") {
    CHECK(mul(E({1}, {2}, 3), E({2}, {3}, 3)) == E({1}, {3}, 3));
    CHECK(mul(E({}, {}, 2), E({}, {}, 2)) == E({}, {}, 2));
    CHECK(mul(E({}, {1}, 2), E({1}, {}, 2)) == E({}, {}, 2));
    CHECK(mul(E({1}, {2}, 3), E({3}, {1}, 3)).is_zero());
    CHECK_THROWS_AS(mul(E({}, {}, 2), E({}, {}, 3)), DimensionError);
}

TEST_CASE("basis count") {
    for (int n = 1; n <= 5; ++n)
        CHECK(all_basis_elements(n).size() == (std::size_t{1} << (2 * n)));
}

TEST_CASE("canonical text form") {
    AlgebraElement a = Rational(3, 2) * E({1, 3}, {2}, 3);
    CHECK(to_string(a) == "3/2 * E[1,3|2]");
    a += Rational(-1) * E({}, {}, 3);
    CHECK(to_string(a) == "-1 * E[|] + 3/2 * E[1,3|2]");
    CHECK(to_string(AlgebraElement(3)) == "0");
}

TEST_CASE("embed_vector and embed_covector, small cases") {
    CHECK(embed_vector(std::vector<Rational>{1}) == E({}, {1}, 1));
    CHECK(embed_covector(std::vector<Rational>{1}) == E({1}, {}, 1));
    // (e_1) for n = 2: E([],[1]) + s E([2],[1,2]); the anticommutation
    // relations force s = +1.
    const auto e1 = embed_vector(std::vector<Rational>{1, 0});
    CHECK(e1 == E({}, {1}, 2) + E({2}, {1, 2}, 2));
    CHECK(e1.coefficient({MultiIndex({2}, 2), MultiIndex({1, 2}, 2)}) == 1);
}

TEST_CASE("generator embeddings match the Fock annihilation/creation operators") {
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i) {
            CHECK(vector_generator(i, n) == oracle::decompose(represent_generator(GeneratorKind::vector, i, n)));
            CHECK(covector_generator(i, n) == oracle::decompose(represent_generator(GeneratorKind::covector, i, n)));
        }
}

TEST_CASE("left and right zero divisors of (P)") {
    Rng rng(7);
    for (int n = 1; n <= 4; ++n) {
        const auto P = projector_P(n);
        for (int k = 0; k < 10; ++k) {
            CHECK(mul(embed_vector(rng.vector(n)), P).is_zero());
            CHECK(mul(P, embed_covector(rng.vector(n))).is_zero());
        }
    }
}

TEST_CASE("anticommutation relations") {
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CHECK(anticommutator(vector_generator(i, n), vector_generator(j, n)).is_zero());
                CHECK(anticommutator(covector_generator(i, n), covector_generator(j, n)).is_zero());
                CHECK(anticommutator(vector_generator(i, n), covector_generator(j, n)) ==
                      (i == j ? unit(n) : AlgebraElement(n)));
            }
}

TEST_CASE("projectors") {
    CHECK(projector_P(2) == E({}, {}, 2));
    CHECK(mul(projector_P(2), projector_P(2)) == projector_P(2));
    CHECK(projector_Pi(1, 2) == E({1}, {1}, 2) + E({2}, {2}, 2));
    CHECK(mul(projector_Pi(1, 2), projector_Pi(2, 2)).is_zero());
    CHECK(unit(1) == E({}, {}, 1) + E({1}, {1}, 1));
    CHECK_THROWS_AS(projector_Pi(3, 2), RangeError);
    // (P) is the product of the (e_j)(e^j)
    for (int n = 1; n <= 4; ++n) {
        AlgebraElement p = unit(n);
        for (int j = 1; j <= n; ++j)
            p = mul(p, mul(vector_generator(j, n), covector_generator(j, n)));
        CHECK(p == projector_P(n));
    }
}

TEST_CASE("sliding rule") {
    Rng rng(11);
    for (int n = 1; n <= 4; ++n) {
        auto pi = [&](int p) { return (p < 0 || p > n) ? AlgebraElement(n) : projector_Pi(p, n); };
        const auto a = embed_covector(rng.vector(n));
        const auto v = embed_vector(rng.vector(n));
        for (int p = -1; p <= n; ++p) {
            CHECK(mul(a, pi(p)) == mul(pi(p + 1), a));
            CHECK(mul(pi(p), v) == mul(v, pi(p + 1)));
        }
    }
}

TEST_CASE("unit law and associativity") {
    Rng rng(12);
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < 70; ++k) {
            const auto a = rng.element(n), b = rng.element(n), c = rng.element(n);
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(unit(n), a) == a);
            CHECK(mul(a, unit(n)) == a);
        }
}

TEST_CASE("minimal left ideal G_n (P)") {
    for (int n = 1; n <= 4; ++n) {
        std::set<BasisElement> span;
        for (const auto& b : all_basis_elements(n)) {
            const auto prod = mul(AlgebraElement(n, b, 1), projector_P(n));
            for (const auto& [t, c] : prod.terms())
                span.insert(t);
        }
        CHECK(span.size() == (std::size_t{1} << n));
        for (const auto& t : span)
            CHECK(t.lower.empty());
    }
}

TEST_CASE("basis_word follows the written factor order") {
    const int n = 3;
    CHECK(basis_word({2, 1}, {}, n) == Rational(-1) * E({1, 2}, {}, n));
    // (P)(e_1)(e_2) = E([], [2,1] sorted) with a sign
    CHECK(basis_word({}, {1, 2}, n) == Rational(-1) * E({}, {1, 2}, n));
    CHECK(basis_word({}, {2, 1}, n) == E({}, {1, 2}, n));
    CHECK(basis_word({1, 1}, {}, n).is_zero());
    // agrees with the product of generators around (P)
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            const auto w = mul(mul(projector_P(n), vector_generator(a, n)), vector_generator(b, n));
            const auto u = mul(mul(covector_generator(a, n), covector_generator(b, n)), projector_P(n));
            CHECK(basis_word({}, {a, b}, n) == w);
            CHECK(basis_word({a, b}, {}, n) == u);
        }
}

TEST_CASE("adjoint") {
    const Metric delta = Metric::euclidean(2);
    CHECK(adjoint(E({}, {1}, 2), delta) == E({1}, {}, 2));
    CHECK(adjoint(vector_generator(1, 2), delta) == covector_generator(1, 2));
    CHECK(adjoint(projector_P(2), delta) == projector_P(2));

    Rng rng(13);
    for (int n = 1; n <= 3; ++n) {
        std::vector<Metric> gs{Metric::euclidean(n), Metric(rng.symmetric_invertible(n))};
        for (const auto& g : gs)
            for (int k = 0; k < 5; ++k) {
                const auto a = rng.element(n), b = rng.element(n);
                CHECK(adjoint(adjoint(a, g), g) == a);
                CHECK(adjoint(mul(a, b), g) == mul(adjoint(b, g), adjoint(a, g)));
            }
        // generator images under a general metric
        const Metric& g = gs[1];
        for (int i = 1; i <= n; ++i) {
            CHECK(adjoint(vector_generator(i, n), g) == embed_covector(g.g().row(i)));
            CHECK(adjoint(covector_generator(i, n), g) == embed_vector(g.g_inv().row(i)));
        }
        // g = delta is the Fock transpose
        for (int k = 0; k < 5; ++k) {
            const auto a = rng.element(n);
            CHECK(represent(adjoint(a, gs[0])) == represent(a).transpose());
        }
    }
}

TEST_CASE("contraction") {
    const int n = 3;
    CHECK(contract(E({1}, {2}, n), 1).is_zero());
    CHECK(contract(E({1}, {1}, n), 1) == projector_P(n));
    CHECK(contract(E({}, {}, n), 0) == projector_P(n));
    CHECK_THROWS_AS(contract(E({1}, {}, n), 1), GradeError);
    CHECK_THROWS_AS(contract(E({1}, {1}, n), 4), RangeError);
    for (int k = 1; k <= n; ++k)
        for (int t = 1; t <= n; ++t)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b) {
                    const int d = (k == b && t == a) - (t == b && k == a);
                    CHECK(contract(basis_word({k, t}, {a, b}, n), 2) == Rational(d) * projector_P(n));
                }
}

}
