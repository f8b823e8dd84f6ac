#include "cliffdkp/core_algebra.hpp"

#include <algorithm>

namespace cliffdkp {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxDim)
        throw RangeError("dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDim));
}

std::vector<Rational> unit_components(int i, int n) {
    if (i < 1 || i > n)
        throw RangeError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    std::vector<Rational> v(n);
    v[i - 1] = 1;
    return v;
}

}  // namespace

AlgebraElement basis(MultiIndex upper, MultiIndex lower, int n) {
    check_n(n);
    if (upper.max_entry() > n || lower.max_entry() > n)
        throw RangeError("basis index exceeds dimension " + std::to_string(n));
    return AlgebraElement(n, {upper, lower}, 1);
}

AlgebraElement basis_word(std::span<const int> upper_word, std::span<const int> lower_word, int n) {
    check_n(n);
    auto up = canonicalize(upper_word, n);
    std::vector<int> rev(lower_word.rbegin(), lower_word.rend());
    auto lo = canonicalize(rev, n);
    if (!up || !lo)
        return AlgebraElement(n);
    return AlgebraElement(n, {up.index, lo.index}, up.sign * lo.sign);
}

std::vector<BasisElement> all_basis_elements(int n) {
    check_n(n);
    auto idx = all_multi_indices(n);
    std::vector<BasisElement> out;
    out.reserve(idx.size() * idx.size());
    for (auto j : idx)
        for (auto k : idx)
            out.push_back({j, k});
    std::sort(out.begin(), out.end());
    return out;
}

// (e_j) = sum over J not containing j of sign(j, J) E(J, J u {j}), the sign
// being the parity of sorting the word (j, J). Both this sign and the one in
// embed_covector are fixed by the anticommutation relations and the Fock
// representation, where (e_j) acts as the annihilator a_j.
AlgebraElement embed_vector(std::span<const Rational> v) {
    int n = static_cast<int>(v.size());
    check_n(n);
    AlgebraElement out(n);
    auto idx = all_multi_indices(n);
    for (int j = 1; j <= n; ++j) {
        if (is_zero(v[j - 1]))
            continue;
        for (auto J : idx) {
            if (J.contains(j))
                continue;
            int sign = (J.count_below(j) % 2) ? -1 : 1;
            out.add_term({J, J.with(j)}, Rational(sign * v[j - 1]));
        }
    }
    return out;
}

AlgebraElement embed_covector(std::span<const Rational> alpha) {
    int n = static_cast<int>(alpha.size());
    check_n(n);
    AlgebraElement out(n);
    auto idx = all_multi_indices(n);
    for (int j = 1; j <= n; ++j) {
        if (is_zero(alpha[j - 1]))
            continue;
        for (auto J : idx) {
            if (J.contains(j))
                continue;
            int sign = (J.count_below(j) % 2) ? -1 : 1;
            out.add_term({J.with(j), J}, Rational(sign * alpha[j - 1]));
        }
    }
    return out;
}

AlgebraElement vector_generator(int i, int n) { return embed_vector(unit_components(i, n)); }
AlgebraElement covector_generator(int i, int n) { return embed_covector(unit_components(i, n)); }

AlgebraElement projector_P(int n) {
    check_n(n);
    return AlgebraElement(n, BasisElement{}, 1);
}

AlgebraElement projector_Pi(int p, int n) {
    check_n(n);
    AlgebraElement out(n);
    for (auto J : combinations(n, p))
        out.add_term({J, J}, 1);
    return out;
}

AlgebraElement unit(int n) {
    check_n(n);
    AlgebraElement out(n);
    for (auto J : all_multi_indices(n))
        out.add_term({J, J}, 1);
    return out;
}

AlgebraElement adjoint(const AlgebraElement& a, const Metric& g) {
    const int n = a.dim();
    if (g.dim() != n)
        throw DimensionError("metric dimension does not match element");
    if (a.is_zero())
        return a;
    // Images of the generators: (e_k)^dag = g_kj (e^j), (e^j)^dag = g^ji (e_i).
    std::vector<AlgebraElement> vec_dag, cov_dag;
    for (int i = 1; i <= n; ++i) {
        vec_dag.push_back(embed_covector(g.g().row(i)));
        cov_dag.push_back(embed_vector(g.g_inv().row(i)));
    }
    const AlgebraElement P = projector_P(n);
    AlgebraElement out(n);
    // E(J,K) = e^{j1}..e^{jp} P e_{kq}..e_{k1}, reversed:
    // (e_{k1})^dag .. (e_{kq})^dag P (e^{jp})^dag .. (e^{j1})^dag
    for (const auto& [b, c] : a.terms()) {
        AlgebraElement left = P;
        auto ks = b.lower.entries();
        for (auto it = ks.rbegin(); it != ks.rend(); ++it)
            left = mul(vec_dag[*it - 1], left);
        AlgebraElement right = P;
        auto js = b.upper.entries();
        for (auto it = js.rbegin(); it != js.rend(); ++it)
            right = mul(right, cov_dag[*it - 1]);
        out += c * mul(left, right);
    }
    return out;
}

AlgebraElement anticommutator(const AlgebraElement& a, const AlgebraElement& b) {
    return mul(a, b) + mul(b, a);
}

}  // namespace cliffdkp
