#include "cliffdkp/dkp.hpp"

#include <stdexcept>

#include "cliffdkp/error.hpp"

namespace cliffdkp {

std::string to_string(DkpFamily f) {
    switch (f) {
    case DkpFamily::b_upper: return "b_upper";
    case DkpFamily::b_upper_neg: return "b_upper_neg";
    case DkpFamily::b_lower_neg: return "b_lower_neg";
    case DkpFamily::beta_lower: return "beta_lower";
    case DkpFamily::beta_lower_neg: return "beta_lower_neg";
    }
    return "?";
}

DkpFamily parse_family(const std::string& name) {
    for (auto f : {DkpFamily::b_upper, DkpFamily::b_upper_neg, DkpFamily::b_lower_neg, DkpFamily::beta_lower,
                   DkpFamily::beta_lower_neg})
        if (to_string(f) == name)
            return f;
    throw std::invalid_argument("unknown DKP family '" + name + "'");
}

namespace {

// (^a P) = (a)(P): only the E([j],[]) terms of the embedding survive.
AlgebraElement upper_p(const std::vector<Rational>& alpha) {
    return mul(embed_covector(alpha), projector_P(static_cast<int>(alpha.size())));
}

// (P_v) = (P)(v)
AlgebraElement lower_p(const std::vector<Rational>& v) {
    return mul(projector_P(static_cast<int>(v.size())), embed_vector(v));
}

std::vector<Rational> unit_vec(int i, int n) {
    if (i < 1 || i > n)
        throw RangeError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    std::vector<Rational> v(n);
    v[i - 1] = 1;
    return v;
}

const std::vector<Rational>& covector_of(const DkpArg& a, DkpFamily f) {
    if (auto* c = std::get_if<Covector>(&a))
        return c->components;
    throw std::invalid_argument(to_string(f) + " takes a covector argument");
}
const std::vector<Rational>& vector_of(const DkpArg& a, DkpFamily f) {
    if (auto* v = std::get_if<Vector>(&a))
        return v->components;
    throw std::invalid_argument(to_string(f) + " takes a vector argument");
}
int index_of(const DkpArg& a, DkpFamily f) {
    if (auto* i = std::get_if<BasisIndex>(&a))
        return i->value;
    throw std::invalid_argument(to_string(f) + " takes a basis index argument");
}

void check_len(const std::vector<Rational>& v, const Metric& g) {
    if (static_cast<int>(v.size()) != g.dim())
        throw DimensionError("argument length does not match metric dimension");
}

}  // namespace

AlgebraElement make_generator(DkpFamily family, const DkpArg& arg, const Metric& g) {
    const int n = g.dim();
    switch (family) {
    case DkpFamily::b_upper:
    case DkpFamily::b_upper_neg: {
        const auto& alpha = covector_of(arg, family);
        check_len(alpha, g);
        AlgebraElement r = upper_p(alpha);
        AlgebraElement s = lower_p(g.sharp(alpha));
        return family == DkpFamily::b_upper ? r + s : r - s;
    }
    case DkpFamily::b_lower_neg: {
        const auto& v = vector_of(arg, family);
        check_len(v, g);
        return lower_p(v) - upper_p(g.flat(v));
    }
    case DkpFamily::beta_lower:
    case DkpFamily::beta_lower_neg: {
        auto e = unit_vec(index_of(arg, family), n);
        AlgebraElement r = lower_p(e);
        AlgebraElement s = upper_p(g.flat(e));
        return family == DkpFamily::beta_lower ? r + s : r - s;
    }
    }
    throw std::logic_error("unhandled DKP family");
}

AlgebraElement dkp_unit(int n) { return projector_P(n) + projector_Pi(1, n); }

AlgebraElement check_trilinear(DkpFamily family, const DkpArg& x1, const DkpArg& x2, const DkpArg& x3,
                               const Metric& g) {
    const AlgebraElement b1 = make_generator(family, x1, g);
    const AlgebraElement b2 = make_generator(family, x2, g);
    const AlgebraElement b3 = make_generator(family, x3, g);
    AlgebraElement res = mul(mul(b1, b2), b3) + mul(mul(b3, b2), b1);

    Rational c12, c32;
    int sign = 1;
    switch (family) {
    case DkpFamily::b_upper:
    case DkpFamily::b_upper_neg:
        c12 = g.pair_inv(covector_of(x1, family), covector_of(x2, family));
        c32 = g.pair_inv(covector_of(x3, family), covector_of(x2, family));
        sign = family == DkpFamily::b_upper ? 1 : -1;
        break;
    case DkpFamily::b_lower_neg:
        c12 = g.pair(vector_of(x1, family), vector_of(x2, family));
        c32 = g.pair(vector_of(x3, family), vector_of(x2, family));
        sign = -1;
        break;
    case DkpFamily::beta_lower:
    case DkpFamily::beta_lower_neg: {
        int i = index_of(x1, family), j = index_of(x2, family), k = index_of(x3, family);
        c12 = g.g()(i - 1, j - 1);
        c32 = g.g()(k - 1, j - 1);
        sign = family == DkpFamily::beta_lower ? 1 : -1;
        break;
    }
    }
    res -= Rational(sign * c12) * b3;
    res -= Rational(sign * c32) * b1;
    return res;
}

AlgebraElement beta_mu(const FrameMap& lambda, int mu, BetaVariant variant) {
    const int n = lambda.dim();
    if (mu < 1 || mu > n)
        throw RangeError("frame index " + std::to_string(mu) + " outside 1.." + std::to_string(n));
    const Metric delta = Metric::euclidean(n);
    AlgebraElement out(n);
    for (int a = 1; a <= n; ++a) {
        if (variant == BetaVariant::upper_neg) {
            const Rational& c = lambda.at(mu, a);
            if (!is_zero(c))
                out += c * make_generator(DkpFamily::b_upper_neg, Covector{unit_vec(a, n)}, delta);
        } else {
            const Rational& c = lambda.inv_at(a, mu);
            if (!is_zero(c))
                out += c * make_generator(DkpFamily::b_lower_neg, Vector{unit_vec(a, n)}, delta);
        }
    }
    return out;
}

AlgebraElement ksymplectic_residual(const FrameMap& lambda, const RationalMatrix& eta, int mu, int nu, int gam) {
    const AlgebraElement bm = beta_mu(lambda, mu, BetaVariant::upper_neg);
    const AlgebraElement bn = beta_mu(lambda, nu, BetaVariant::upper_neg);
    const AlgebraElement bg = beta_mu(lambda, gam, BetaVariant::upper_neg);
    AlgebraElement res = mul(mul(bm, bn), bg) + mul(mul(bg, bn), bm);
    res += eta(mu - 1, nu - 1) * bg;
    res += eta(gam - 1, nu - 1) * bm;
    return res;
}

}  // namespace cliffdkp
