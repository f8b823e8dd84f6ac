#include "cliffdkp/random.hpp"

#include "cliffdkp/subspaces.hpp"

namespace cliffdkp {

int Rng::uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(eng_() % span);
}

Rational Rng::rational() {
    Rational q(uniform(-4, 4), uniform(1, 3));
    q.canonicalize();
    return q;
}

Rational Rng::nonzero_rational() {
    for (;;) {
        Rational q = rational();
        if (q != 0)
            return q;
    }
}

std::vector<Rational> Rng::vector(int n) {
    std::vector<Rational> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i)
        v.push_back(rational());
    return v;
}

AlgebraElement Rng::element(int n) {
    AlgebraElement a(n);
    for (const auto& b : all_basis_elements(n))
        if (coin())
            a.add_term(b, nonzero_rational());
    return a;
}

AlgebraElement Rng::zp_element(int n, int p) {
    AlgebraElement a(n);
    for (const auto& b : zp_basis(n, p))
        a.add_term(b, rational());
    return a;
}

RationalMatrix Rng::symmetric_invertible(int n) {
    for (;;) {
        RationalMatrix m(n);
        for (int r = 0; r < n; ++r)
            for (int c = r; c < n; ++c)
                m(r, c) = m(c, r) = Rational(uniform(-3, 3));
        if (m.determinant() != 0)
            return m;
    }
}

RationalMatrix Rng::invertible(int n) {
    for (;;) {
        RationalMatrix m(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m(r, c) = rational();
        if (m.determinant() != 0)
            return m;
    }
}

std::vector<FieldSymbol> phase_symbols(int n, int p) {
    std::vector<FieldSymbol> out;
    for (auto I : combinations(n, p))
        out.push_back(FieldSymbol::y(I));
    for (int mu = 1; mu <= n; ++mu)
        for (auto I : combinations(n, p))
            out.push_back(FieldSymbol::p(mu, I));
    return out;
}

std::vector<FieldSymbol> field_symbols(int n, int p) {
    std::vector<FieldSymbol> out;
    for (auto I : combinations(n, p))
        out.push_back(FieldSymbol::y(I));
    for (int a = 1; a <= n; ++a)
        for (auto I : combinations(n, p))
            out.push_back(FieldSymbol::pi(a, I));
    return out;
}

FieldPoly Rng::poly(const std::vector<FieldSymbol>& symbols, int max_degree, int terms) {
    const int count = static_cast<int>(symbols.size());
    FieldPoly f;
    for (int t = 0; t < terms; ++t) {
        FieldPoly m = nonzero_rational();
        const int degree = uniform(0, max_degree);
        for (int d = 0; d < degree; ++d)
            m *= FieldPoly::symbol(symbols[uniform(0, count - 1)]);
        f += m;
    }
    return f;
}

FieldPoly Rng::phase_poly(int n, int p, int max_degree, int terms) {
    return poly(phase_symbols(n, p), max_degree, terms);
}

FieldPoly Rng::field_poly(int n, int p, int max_degree, int terms) {
    return poly(field_symbols(n, p), max_degree, terms);
}

}  // namespace cliffdkp
