#include <doctest.h>

#include "../support/oracles.hpp"
#include "cliffdkp/fock_oracle.hpp"
#include "cliffdkp/random.hpp"

using namespace cliffdkp;

TEST_SUITE("fock_oracle") {

TEST_CASE("single mode") {
    const auto c = represent_generator(GeneratorKind::covector, 1, 1);
    DenseOperator expect(1);
    expect(1, 0) = 1;
    CHECK(c == expect);
    CHECK(represent_generator(GeneratorKind::vector, 1, 1) == expect.transpose());
    CHECK_THROWS(represent_generator(GeneratorKind::vector, 2, 1));
}

TEST_CASE("canonical anticommutation relations") {
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const auto a = represent_generator(GeneratorKind::vector, i, n);
                const auto b = represent_generator(GeneratorKind::covector, j, n);
                const auto aj = represent_generator(GeneratorKind::vector, j, n);
                CHECK(a * b + b * a == (i == j ? DenseOperator::identity(n) : DenseOperator(n)));
                CHECK((a * aj + aj * a).is_zero());
            }
}

TEST_CASE("vacuum projector and unit") {
    for (int n = 1; n <= 3; ++n) {
        DenseOperator vac(n);
        vac(0, 0) = 1;
        CHECK(represent(projector_P(n)) == vac);
        CHECK(oracle::vacuum(n) == vac);
        CHECK(represent(unit(n)) == DenseOperator::identity(n));
    }
}

TEST_CASE("basis images are distinct matrix units") {
    for (int n = 1; n <= 3; ++n) {
        const auto all = all_basis_elements(n);
        std::set<std::pair<int, int>> seen;
        for (const auto& b : all) {
            const auto m = represent(b, n);
            CHECK(m == oracle::basis_image(b, n));
            int nonzero = 0;
            for (int r = 0; r < m.side(); ++r)
                for (int c = 0; c < m.side(); ++c)
                    if (m(r, c) != 0) {
                        ++nonzero;
                        CHECK(m(r, c) == 1);
                        seen.insert({r, c});
                    }
            CHECK(nonzero == 1);
        }
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("homomorphism on random pairs") {
    Rng rng(21);
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < 30; ++k) {
            const auto a = rng.element(n), b = rng.element(n);
            CHECK(represent(mul(a, b)) == represent(a) * represent(b));
        }
}

}
