#include "cliffdkp/field_calculus.hpp"

#include "cliffdkp/dkp.hpp"
#include "cliffdkp/error.hpp"
#include "cliffdkp/subspaces.hpp"

namespace cliffdkp {

namespace {

MultiIndex single(int a) { return MultiIndex::from_mask(1u << (a - 1)); }

void check_rank(int p, int n) {
    if (n < 1 || n > kMaxDim)
        throw RangeError("dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDim));
    if (p < 0 || p > n)
        throw RangeError("rank " + std::to_string(p) + " outside 0.." + std::to_string(n));
}

void check_field_function(const FieldPoly& F, int p, int n) {
    check_rank(p, n);
    check_symbols(F, n, p);
    for (const auto& s : F.symbols())
        if (s.kind != SymbolKind::y && s.kind != SymbolKind::pi)
            throw KindError("expected a function of y and pi only, found " + s.str());
}

void check_phase_function(const FieldPoly& F, int p, int n) {
    check_rank(p, n);
    check_symbols(F, n, p);
    for (const auto& s : F.symbols())
        if (s.is_derivative())
            throw KindError("derivative symbol " + s.str() + " not allowed here");
}

}  // namespace

PolyElement nabla(const FieldPoly& F, int p, int n) {
    check_field_function(F, p, n);
    PolyElement out(n);
    for (auto I : combinations(n, p)) {
        out.add_term({MultiIndex{}, I}, partial(F, FieldSymbol::y(I)));
        for (int a = 1; a <= n; ++a)
            out.add_term({single(a), I}, partial(F, FieldSymbol::pi(a, I)));
    }
    return out;
}

PolyElement nabla_adjoint(const FieldPoly& G, int p, int n) {
    check_field_function(G, p, n);
    PolyElement out(n);
    for (auto I : combinations(n, p)) {
        out.add_term({I, MultiIndex{}}, partial(G, FieldSymbol::y(I)));
        for (int a = 1; a <= n; ++a)
            out.add_term({I, single(a)}, partial(G, FieldSymbol::pi(a, I)));
    }
    return out;
}

FieldPoly to_pi(const FieldPoly& f, const FrameMap& lambda) {
    const int n = lambda.dim();
    return substitute(f, [&](const FieldSymbol& s) -> std::optional<FieldPoly> {
        if (s.kind != SymbolKind::p)
            return std::nullopt;
        FieldPoly r;
        for (int c = 1; c <= n; ++c)
            r += lambda.at(s.mu, c) * FieldPoly::symbol(FieldSymbol::pi(c, s.index));
        return r;
    });
}

FieldPoly to_p(const FieldPoly& f, const FrameMap& lambda) {
    const int n = lambda.dim();
    return substitute(f, [&](const FieldSymbol& s) -> std::optional<FieldPoly> {
        if (s.kind != SymbolKind::pi)
            return std::nullopt;
        FieldPoly r;
        for (int nu = 1; nu <= n; ++nu)
            r += lambda.inv_at(s.a, nu) * FieldPoly::symbol(FieldSymbol::p(nu, s.index));
        return r;
    });
}

PolyElement psi_derivative(int mu, int p, int n) {
    check_rank(p, n);
    PolyElement out(n);
    for (auto I : combinations(n, p)) {
        out.add_term({MultiIndex{}, I}, FieldPoly::symbol(FieldSymbol::Dy(mu, I)));
        for (int a = 1; a <= n; ++a)
            out.add_term({single(a), I}, FieldPoly::symbol(FieldSymbol::Dpi(mu, a, I)));
    }
    return out;
}

DwhEquationSet dwh_derive(const FieldPoly& H, int p, const FrameMap& lambda) {
    const int n = lambda.dim();
    check_phase_function(H, p, n);
    const FieldPoly Hpi = to_pi(H, lambda);

    PolyElement lhs(n);
    for (int mu = 1; mu <= n; ++mu)
        lhs += mul(beta_mu(lambda, mu, BetaVariant::upper_neg), psi_derivative(mu, p, n));
    const PolyElement rhs = nabla(Hpi, p, n);

    DwhEquationSet out;
    out.n = n;
    out.p = p;
    for (const auto& key : zp_basis(n, p))
        out.raw.push_back({key.str(), lhs.coefficient(key), rhs.coefficient(key)});

    // d_mu pi^c_I = (Lambda^{-1})^c_nu d_mu p^nu_I
    auto dpi_to_dp = [&](const FieldPoly& f) {
        return substitute(f, [&](const FieldSymbol& s) -> std::optional<FieldPoly> {
            if (s.kind != SymbolKind::Dpi)
                return std::nullopt;
            FieldPoly r;
            for (int nu = 1; nu <= n; ++nu)
                r += lambda.inv_at(s.a, nu) * FieldPoly::symbol(FieldSymbol::Dp(s.mu, nu, s.index));
            return r;
        });
    };

    for (auto I : combinations(n, p)) {
        const BasisElement key{MultiIndex{}, I};
        out.normalized.push_back({"dp[" + I.str() + "]", -dpi_to_dp(lhs.coefficient(key)),
                                  -to_p(rhs.coefficient(key), lambda)});
    }
    for (int rho = 1; rho <= n; ++rho)
        for (auto I : combinations(n, p)) {
            FieldPoly l, r;
            for (int c = 1; c <= n; ++c) {
                const BasisElement key{single(c), I};
                l += lambda.inv_at(c, rho) * lhs.coefficient(key);
                r += lambda.inv_at(c, rho) * rhs.coefficient(key);
            }
            out.normalized.push_back(
                {"dy[" + std::to_string(rho) + "][" + I.str() + "]", l, to_p(r, lambda)});
        }
    return out;
}

std::vector<DwhEquation> dwh_closed_form(const FieldPoly& H, int p, const FrameMap& lambda) {
    const int n = lambda.dim();
    check_phase_function(H, p, n);
    const FieldPoly Hp = to_p(H, lambda);
    std::vector<DwhEquation> out;
    for (auto I : combinations(n, p)) {
        FieldPoly div;
        for (int mu = 1; mu <= n; ++mu)
            div += FieldPoly::symbol(FieldSymbol::Dp(mu, mu, I));
        out.push_back({"dp[" + I.str() + "]", div, -partial(Hp, FieldSymbol::y(I))});
    }
    for (int mu = 1; mu <= n; ++mu)
        for (auto I : combinations(n, p))
            out.push_back({"dy[" + std::to_string(mu) + "][" + I.str() + "]",
                           FieldPoly::symbol(FieldSymbol::Dy(mu, I)), partial(Hp, FieldSymbol::p(mu, I))});
    return out;
}

FieldPoly bracket(const FieldPoly& G, const FieldPoly& F, int mu, int p, const FrameMap& lambda) {
    const int n = lambda.dim();
    check_phase_function(G, p, n);
    check_phase_function(F, p, n);
    const PolyElement left = nabla_adjoint(to_pi(G, lambda), p, n);
    const PolyElement right = nabla(to_pi(F, lambda), p, n);
    const AlgebraElement beta = beta_mu(lambda, mu, BetaVariant::lower_neg);
    const PolyElement contracted = contract(mul(mul(left, beta), right), p);
    return to_p(scalar_part(contracted), lambda);
}

FieldPoly bracket_closed_form(const FieldPoly& G, const FieldPoly& F, int mu, int p, const FrameMap& lambda) {
    const int n = lambda.dim();
    check_phase_function(G, p, n);
    check_phase_function(F, p, n);
    if (mu < 1 || mu > n)
        throw RangeError("frame index " + std::to_string(mu) + " outside 1.." + std::to_string(n));
    const FieldPoly g = to_p(G, lambda), f = to_p(F, lambda);
    FieldPoly r;
    for (auto I : combinations(n, p)) {
        const auto y = FieldSymbol::y(I);
        const auto pm = FieldSymbol::p(mu, I);
        r += partial(g, y) * partial(f, pm) - partial(f, y) * partial(g, pm);
    }
    return r;
}

FieldPoly check_jacobi_sym(const FieldPoly& G, const FieldPoly& F, const FieldPoly& K, int mu, int nu, int p,
                           const FrameMap& lambda) {
    auto sym = [&](const FieldPoly& a, const FieldPoly& b, const FieldPoly& c) {
        return bracket(bracket(a, b, mu, p, lambda), c, nu, p, lambda) +
               bracket(bracket(a, b, nu, p, lambda), c, mu, p, lambda);
    };
    return Rational(1, 2) * (sym(G, F, K) + sym(F, K, G) + sym(K, G, F));
}

FieldPoly check_leibniz(const FieldPoly& G, const FieldPoly& F, const FieldPoly& K, int mu, int p,
                        const FrameMap& lambda) {
    return bracket(G * F, K, mu, p, lambda) - F * bracket(G, K, mu, p, lambda) - G * bracket(F, K, mu, p, lambda);
}

}  // namespace cliffdkp
