#include "cliffdkp/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "cliffdkp/core_algebra.hpp"
#include "cliffdkp/dkp.hpp"
#include "cliffdkp/field_calculus.hpp"
#include "cliffdkp/fock_oracle.hpp"
#include "cliffdkp/random.hpp"
#include "cliffdkp/subspaces.hpp"

namespace cliffdkp {

namespace {

// Largest n for which the dense Fock oracle is exercised.
constexpr int kOracleMax = 4;

class Check {
public:
    explicit Check(std::string name) { r_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++r_.run;
        if (!ok && r_.failed++ == 0)
            first_ = describe();
    }

    CheckResult done() {
        r_.detail = std::to_string(r_.run) + " checked, " + std::to_string(r_.failed) + " failed";
        if (r_.failed)
            r_.detail += "; first: " + first_;
        return r_;
    }

private:
    CheckResult r_;
    std::string first_;
};

std::vector<Rational> unit_vec(int i, int n) {
    std::vector<Rational> v(n);
    v[i - 1] = 1;
    return v;
}

std::vector<Metric> metrics(const VerifyOptions& o, Rng& rng, int count) {
    std::vector<Metric> out{Metric::euclidean(o.n)};
    if (o.metric)
        out.emplace_back(*o.metric);
    else
        for (int k = 0; k < count; ++k)
            out.emplace_back(rng.symmetric_invertible(o.n));
    return out;
}

std::vector<FrameMap> frames(const VerifyOptions& o, Rng& rng, int count) {
    std::vector<FrameMap> out{FrameMap::identity(o.n)};
    if (o.lambda)
        out.emplace_back(*o.lambda);
    else
        for (int k = 0; k < count; ++k)
            out.emplace_back(rng.invertible(o.n));
    return out;
}

std::string show(const AlgebraElement& a) { return to_string(a); }

// ---- core -----------------------------------------------------------------

void core_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
    const int n = o.n;
    Rng rng(o.seed);

    {
        Check c("core.basis_count");
        const auto all = all_basis_elements(n);
        c.expect(all.size() == (std::size_t{1} << (2 * n)), [&] { return std::to_string(all.size()) + " elements"; });
        out.push_back(c.done());
    }
    if (n <= kOracleMax) {
        Check c("core.oracle_homomorphism");
        const auto all = all_basis_elements(n);
        std::vector<DenseOperator> rep;
        for (const auto& b : all)
            rep.push_back(represent(b, n));
        if (n <= 3)
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = 0; j < all.size(); ++j) {
                    const AlgebraElement prod = mul(AlgebraElement(n, all[i], 1), AlgebraElement(n, all[j], 1));
                    c.expect(represent(prod) == rep[i] * rep[j],
                             [&] { return all[i].str() + " * " + all[j].str(); });
                }
        for (int k = 0; k < 20; ++k) {
            const auto a = rng.element(n), b = rng.element(n);
            c.expect(represent(mul(a, b)) == represent(a) * represent(b), [&] { return "random pair " + std::to_string(k); });
        }
        c.expect(represent(unit(n)) == DenseOperator::identity(n), [] { return std::string("unit"); });
        for (int k = 0; k < 10; ++k) {
            const auto a = rng.element(n);
            c.expect(represent(adjoint(a, Metric::euclidean(n))) == represent(a).transpose(),
                     [&] { return "adjoint transpose " + show(a); });
        }
        out.push_back(c.done());
    }
    {
        Check c("core.associativity");
        for (int k = 0; k < 30; ++k) {
            const auto a = rng.element(n), b = rng.element(n), d = rng.element(n);
            c.expect(mul(mul(a, b), d) == mul(a, mul(b, d)), [&] { return "triple " + std::to_string(k); });
        }
        out.push_back(c.done());
    }
    {
        Check c("core.anticommutation");
        const auto one = unit(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const auto ei = vector_generator(i, n), ej = vector_generator(j, n);
                const auto fi = covector_generator(i, n), fj = covector_generator(j, n);
                const auto tag = [&] { return "i=" + std::to_string(i) + " j=" + std::to_string(j); };
                c.expect(anticommutator(ei, ej).is_zero(), tag);
                c.expect(anticommutator(fi, fj).is_zero(), tag);
                c.expect(anticommutator(ei, fj) == (i == j ? one : AlgebraElement(n)), tag);
            }
        out.push_back(c.done());
    }
    {
        Check c("core.zero_divisors");
        const auto P = projector_P(n);
        for (int k = 0; k < 20; ++k) {
            const auto v = rng.vector(n), a = rng.vector(n);
            c.expect(mul(embed_vector(v), P).is_zero(), [&] { return std::string("v P"); });
            c.expect(mul(P, embed_covector(a)).is_zero(), [&] { return std::string("P alpha"); });
        }
        out.push_back(c.done());
    }
    {
        Check c("core.projectors");
        AlgebraElement sum(n);
        for (int p = 0; p <= n; ++p) {
            sum += projector_Pi(p, n);
            for (int q = 0; q <= n; ++q)
                c.expect(mul(projector_Pi(p, n), projector_Pi(q, n)) == (p == q ? projector_Pi(p, n) : AlgebraElement(n)),
                         [&] { return "Pi_" + std::to_string(p) + " Pi_" + std::to_string(q); });
        }
        c.expect(sum == unit(n), [] { return std::string("sum of Pi_p"); });
        auto pi = [&](int p) { return (p < 0 || p > n) ? AlgebraElement(n) : projector_Pi(p, n); };
        for (int k = 0; k < 5; ++k) {
            const auto a = embed_covector(rng.vector(n)), v = embed_vector(rng.vector(n));
            for (int p = -1; p <= n; ++p) {
                c.expect(mul(a, pi(p)) == mul(pi(p + 1), a), [&] { return "covector slide p=" + std::to_string(p); });
                c.expect(mul(pi(p), v) == mul(v, pi(p + 1)), [&] { return "vector slide p=" + std::to_string(p); });
            }
        }
        for (int k = 0; k < 10; ++k) {
            const auto x = rng.element(n);
            c.expect(mul(unit(n), x) == x && mul(x, unit(n)) == x, [] { return std::string("unit law"); });
        }
        out.push_back(c.done());
    }
    {
        Check c("core.minimal_left_ideal");
        std::set<BasisElement> span;
        for (const auto& b : all_basis_elements(n)) {
            const auto prod = mul(AlgebraElement(n, b, 1), projector_P(n));
            for (const auto& [t, coef] : prod.terms())
                span.insert(t);
        }
        bool shape = span.size() == (std::size_t{1} << n);
        for (const auto& t : span)
            shape = shape && t.lower.empty();
        c.expect(shape, [&] { return std::to_string(span.size()) + " elements"; });
        out.push_back(c.done());
    }
    {
        Check c("core.adjoint");
        for (const auto& g : metrics(o, rng, 2))
            for (int k = 0; k < 5; ++k) {
                const auto a = rng.element(n), b = rng.element(n);
                c.expect(adjoint(adjoint(a, g), g) == a, [&] { return "involution, g=" + g.g().str(); });
                c.expect(adjoint(mul(a, b), g) == mul(adjoint(b, g), adjoint(a, g)),
                         [&] { return "antihomomorphism, g=" + g.g().str(); });
            }
        out.push_back(c.done());
    }
    {
        Check c("core.contraction");
        const auto P = projector_P(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                c.expect(contract(basis({i}, {j}, n), 1) == (i == j ? P : AlgebraElement(n)),
                         [&] { return "C[(^" + std::to_string(i) + "P_" + std::to_string(j) + ")]"; });
        if (n >= 2)
            for (int k = 1; k <= n; ++k)
                for (int t = 1; t <= n; ++t)
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            const auto lhs = contract(basis_word({k, t}, {a, b}, n), 2);
                            const int d = (k == b && t == a) - (t == b && k == a);
                            c.expect(lhs == Rational(d) * P, [&] { return "C[(^{kt}P_{ab})]"; });
                        }
        out.push_back(c.done());
    }
}

// ---- dkp ------------------------------------------------------------------

DkpArg basis_arg(DkpFamily f, int i, int n) {
    switch (f) {
    case DkpFamily::b_upper:
    case DkpFamily::b_upper_neg: return Covector{unit_vec(i, n)};
    case DkpFamily::b_lower_neg: return Vector{unit_vec(i, n)};
    default: return BasisIndex{i};
    }
}

constexpr DkpFamily kFamilies[] = {DkpFamily::b_upper, DkpFamily::b_upper_neg, DkpFamily::b_lower_neg,
                                   DkpFamily::beta_lower, DkpFamily::beta_lower_neg};

void dkp_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
    const int n = o.n;
    Rng rng(o.seed + 1);
    const auto gs = metrics(o, rng, 3);

    for (auto f : kFamilies) {
        Check c("dkp.trilinear." + to_string(f));
        for (const auto& g : gs)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k)
                        c.expect(check_trilinear(f, basis_arg(f, i, n), basis_arg(f, j, n), basis_arg(f, k, n), g).is_zero(),
                                 [&] { return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                                              "), g=" + g.g().str(); });
        if (f == DkpFamily::b_upper || f == DkpFamily::b_upper_neg || f == DkpFamily::b_lower_neg)
            for (const auto& g : gs)
                for (int k = 0; k < 5; ++k) {
                    DkpArg x[3];
                    for (auto& a : x)
                        a = f == DkpFamily::b_lower_neg ? DkpArg(Vector{rng.vector(n)}) : DkpArg(Covector{rng.vector(n)});
                    c.expect(check_trilinear(f, x[0], x[1], x[2], g).is_zero(), [&] { return "random arguments, g=" + g.g().str(); });
                }
        out.push_back(c.done());
    }
    {
        Check c("dkp.sign_flip_duality");
        for (const auto& g : gs)
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) {
                        const auto tag = [&] { return "g=" + g.g().str(); };
                        const Metric ng = g.negated();
                        c.expect(check_trilinear(DkpFamily::b_upper, basis_arg(DkpFamily::b_upper, i, n),
                                                 basis_arg(DkpFamily::b_upper, j, n), basis_arg(DkpFamily::b_upper, k, n), ng) ==
                                     check_trilinear(DkpFamily::b_upper_neg, basis_arg(DkpFamily::b_upper, i, n),
                                                     basis_arg(DkpFamily::b_upper, j, n), basis_arg(DkpFamily::b_upper, k, n), g),
                                 tag);
                        c.expect(check_trilinear(DkpFamily::beta_lower, BasisIndex{i}, BasisIndex{j}, BasisIndex{k}, ng) ==
                                     check_trilinear(DkpFamily::beta_lower_neg, BasisIndex{i}, BasisIndex{j}, BasisIndex{k}, g),
                                 tag);
                    }
        out.push_back(c.done());
    }
    {
        Check c("dkp.unit");
        const auto u = dkp_unit(n);
        c.expect(mul(u, u) == u, [] { return std::string("idempotent"); });
        for (const auto& g : gs)
            for (auto f : kFamilies)
                for (int i = 1; i <= n; ++i) {
                    const auto b = make_generator(f, basis_arg(f, i, n), g);
                    c.expect(mul(u, b) == b && mul(b, u) == b, [&] { return to_string(f) + " " + std::to_string(i); });
                }
        out.push_back(c.done());
    }
    {
        // Frame-mapped generators: the relation closes on eta = Lambda Lambda^T,
        // which reduces to delta exactly for orthogonal frames.
        Check c("dkp.ksymplectic");
        std::vector<FrameMap> fs = frames(o, rng, 2);
        RationalMatrix swap(n);
        for (int r = 0; r < n; ++r)
            swap(r, (r + 1) % n) = r % 2 ? -1 : 1;
        fs.emplace_back(swap);
        for (const auto& L : fs) {
            const RationalMatrix eta = L.lambda() * L.lambda().transpose();
            for (int mu = 1; mu <= n; ++mu)
                for (int nu = 1; nu <= n; ++nu)
                    for (int ga = 1; ga <= n; ++ga)
                        c.expect(ksymplectic_residual(L, eta, mu, nu, ga).is_zero(),
                                 [&] { return "Lambda=" + L.lambda().str(); });
        }
        for (int mu = 1; mu <= n; ++mu)
            for (int nu = 1; nu <= n; ++nu)
                for (int ga = 1; ga <= n; ++ga)
                    c.expect(ksymplectic_residual(fs.back(), RationalMatrix::identity(n), mu, nu, ga).is_zero(),
                             [] { return std::string("orthogonal frame, delta form"); });
        out.push_back(c.done());
    }
    {
        Check c("dkp.frame_compose");
        for (const auto& L : frames(o, rng, 2))
            for (int b = 1; b <= n; ++b) {
                AlgebraElement sum(n);
                for (int mu = 1; mu <= n; ++mu)
                    sum += L.at(mu, b) * beta_mu(L, mu, BetaVariant::lower_neg);
                c.expect(sum == make_generator(DkpFamily::b_lower_neg, Vector{unit_vec(b, n)}, Metric::euclidean(n)),
                         [&] { return "b=" + std::to_string(b); });
            }
        out.push_back(c.done());
    }
}

// ---- subspaces ------------------------------------------------------------

void subspaces_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
    const int n = o.n;
    Rng rng(o.seed + 2);
    {
        Check c("subspaces.dimension");
        for (int m = 1; m <= std::max(n, 6); ++m)
            for (int p = 0; p <= m; ++p)
                c.expect(zp_basis(m, p).size() == dim_zp(m, p) && dim_zp(m, p) == (m + 1) * binomial(m, p),
                         [&] { return "n=" + std::to_string(m) + " p=" + std::to_string(p); });
        out.push_back(c.done());
    }
    {
        Check c("subspaces.closure");
        for (const auto& g : metrics(o, rng, 1))
            for (int p = 0; p <= n; ++p)
                for (int k = 0; k < 10; ++k) {
                    const auto alpha = rng.vector(n);
                    const auto z = rng.zp_element(n, p);
                    const auto r = act_dkp(make_generator(DkpFamily::b_upper_neg, Covector{alpha}, g), z, p);
                    // (^alpha P_I) s_I - g^{-1}(alpha, gamma_I) (P_I)
                    AlgebraElement expect(n);
                    for (auto I : combinations(n, p)) {
                        const Rational s = z.coefficient({MultiIndex{}, I});
                        std::vector<Rational> gamma(n);
                        for (int a = 1; a <= n; ++a) {
                            expect.add_term({MultiIndex::from_mask(1u << (a - 1)), I}, alpha[a - 1] * s);
                            gamma[a - 1] = z.coefficient({MultiIndex::from_mask(1u << (a - 1)), I});
                        }
                        expect.add_term({MultiIndex{}, I}, -g.pair_inv(alpha, gamma));
                    }
                    c.expect(in_zp(r, n, p) && r == expect, [&] { return "p=" + std::to_string(p) + " z=" + show(z); });
                }
        out.push_back(c.done());
    }
    {
        Check c("subspaces.dkp_unit_identity");
        for (int p = 0; p <= n; ++p)
            for (int k = 0; k < 5; ++k) {
                const auto z = rng.zp_element(n, p);
                c.expect(mul(dkp_unit(n), z) == z, [&] { return "p=" + std::to_string(p); });
            }
        out.push_back(c.done());
    }
    {
        Check c("subspaces.antisymmetry");
        for (int v = 1; v <= n; ++v)
            for (int w = 1; w <= n; ++w) {
                const int vw[] = {v, w}, wv[] = {w, v};
                c.expect(zp_lower(vw, n) == -zp_lower(wv, n), [&] { return "(P_vw)"; });
                for (int a = 1; a <= n; ++a)
                    c.expect(zp_upper(a, vw, n) == -zp_upper(a, wv, n), [&] { return "(^aP_vw)"; });
            }
        out.push_back(c.done());
    }
}

// ---- bracket --------------------------------------------------------------

void bracket_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
    const int n = o.n;
    const int pmax = std::min(n, 2);
    Rng rng(o.seed + 3);
    const auto fs = frames(o, rng, 1);

    {
        Check c("bracket.closed_form");
        for (const auto& L : fs)
            for (int p = 0; p <= pmax; ++p)
                for (int k = 0; k < 10; ++k) {
                    const auto G = rng.phase_poly(n, p, 2), F = rng.phase_poly(n, p, 2);
                    const int mu = rng.uniform(1, n);
                    c.expect(bracket(G, F, mu, p, L) == bracket_closed_form(G, F, mu, p, L),
                             [&] { return "G=" + G.str() + " F=" + F.str(); });
                }
        out.push_back(c.done());
    }
    {
        Check c("bracket.canonical_pairs");
        const auto& L = fs.back();
        for (int p = 0; p <= pmax; ++p)
            for (auto I : combinations(n, p))
                for (auto J : combinations(n, p))
                    for (int mu = 1; mu <= n; ++mu) {
                        const auto y = FieldPoly::symbol(FieldSymbol::y(I));
                        const auto yj = FieldPoly::symbol(FieldSymbol::y(J));
                        const auto pm = FieldPoly::symbol(FieldSymbol::p(mu, J));
                        const auto pn = FieldPoly::symbol(FieldSymbol::p(mu % n + 1, I));
                        c.expect(bracket(y, pm, mu, p, L) == FieldPoly(I == J ? 1 : 0), [&] { return y.str() + ", " + pm.str(); });
                        c.expect(bracket(y, yj, mu, p, L).is_zero(), [&] { return y.str() + ", " + yj.str(); });
                        c.expect(bracket(pn, pm, mu, p, L).is_zero(), [&] { return pn.str() + ", " + pm.str(); });
                    }
        out.push_back(c.done());
    }
    {
        Check c("bracket.antisymmetry");
        for (const auto& L : fs)
            for (int p = 0; p <= pmax; ++p)
                for (int k = 0; k < 5; ++k) {
                    const auto G = rng.phase_poly(n, p, 2), F = rng.phase_poly(n, p, 2);
                    const int mu = rng.uniform(1, n);
                    c.expect((bracket(G, F, mu, p, L) + bracket(F, G, mu, p, L)).is_zero(), [&] { return "G=" + G.str(); });
                    c.expect(bracket(F, F, mu, p, L).is_zero(), [&] { return "F=" + F.str(); });
                }
        out.push_back(c.done());
    }
    {
        Check c("bracket.leibniz");
        for (const auto& L : fs)
            for (int p = 0; p <= pmax; ++p)
                for (int k = 0; k < 4; ++k) {
                    const auto G = rng.phase_poly(n, p, 2), F = rng.phase_poly(n, p, 2), K = rng.phase_poly(n, p, 2);
                    const int mu = rng.uniform(1, n);
                    c.expect(check_leibniz(G, F, K, mu, p, L).is_zero(), [&] { return "G=" + G.str(); });
                }
        out.push_back(c.done());
    }
    {
        Check c("bracket.jacobi_symmetrized");
        for (const auto& L : fs)
            for (int p = 0; p <= pmax; ++p)
                for (int k = 0; k < 2; ++k) {
                    const auto G = rng.phase_poly(n, p, 2, 3), F = rng.phase_poly(n, p, 2, 3), K = rng.phase_poly(n, p, 2, 3);
                    const int mu = rng.uniform(1, n), nu = rng.uniform(1, n);
                    c.expect(check_jacobi_sym(G, F, K, mu, nu, p, L).is_zero(), [&] { return "G=" + G.str(); });
                }
        out.push_back(c.done());
    }
    {
        Check c("bracket.adjoint_placement");
        const Metric delta = Metric::euclidean(n);
        for (int p = 0; p <= pmax; ++p)
            for (int k = 0; k < 3; ++k) {
                const auto G = rng.field_poly(n, p, 1);
                const auto na = nabla(G, p, n);
                // Linear G: coefficients are constants, so the Rational adjoint applies.
                AlgebraElement num(n);
                for (const auto& [b, coef] : na.terms())
                    num.add_term(b, coef.constant_term());
                AlgebraElement adj(n);
                const auto nadj = nabla_adjoint(G, p, n);
                for (const auto& [b, coef] : nadj.terms())
                    adj.add_term(b, coef.constant_term());
                c.expect(adjoint(num, delta) == adj, [&] { return "G=" + G.str(); });
            }
        out.push_back(c.done());
    }
    {
        Check c("bracket.dwh_equations");
        for (int p = 0; p <= pmax; ++p)
            for (int k = 0; k < 2; ++k) {
                const auto H = rng.phase_poly(n, p, 2, 5);
                const auto ref = dwh_derive(H, p, FrameMap::identity(n)).normalized;
                c.expect(ref == dwh_closed_form(H, p, FrameMap::identity(n)), [&] { return "H=" + H.str(); });
                for (const auto& L : fs)
                    c.expect(dwh_derive(H, p, L).normalized == ref, [&] { return "H=" + H.str() + " Lambda=" + L.lambda().str(); });
            }
        out.push_back(c.done());
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"core", "dkp", "subspaces", "bracket"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
    if (opts.n < 1 || opts.n > kMaxDim)
        throw RangeError("dimension outside 1.." + std::to_string(kMaxDim));
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "core") {
        core_suite(opts, out);
        known = true;
    }
    if (all || suite == "dkp") {
        dkp_suite(opts, out);
        known = true;
    }
    if (all || suite == "subspaces") {
        subspaces_suite(opts, out);
        known = true;
    }
    if (all || suite == "bracket") {
        bracket_suite(opts, out);
        known = true;
    }
    if (!known)
        throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

}  // namespace cliffdkp
