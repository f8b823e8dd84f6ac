#include "cliffdkp/subspaces.hpp"

#include <algorithm>

namespace cliffdkp {

std::vector<BasisElement> zp_basis(int n, int p) {
    auto lowers = combinations(n, p);
    std::vector<BasisElement> out;
    out.reserve(dim_zp(n, p));
    for (auto I : lowers)
        out.push_back({MultiIndex{}, I});
    for (int a = 1; a <= n; ++a)
        for (auto I : lowers)
            out.push_back({MultiIndex::from_mask(1u << (a - 1)), I});
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t dim_zp(int n, int p) {
    if (n < 0 || p < 0 || p > n)
        throw RangeError("rank " + std::to_string(p) + " outside 0.." + std::to_string(n));
    return static_cast<std::uint64_t>(n + 1) * binomial(n, p);
}

bool in_zp(const AlgebraElement& x, int n, int p) {
    if (p < 0 || p > n || x.dim() != n)
        return false;
    for (const auto& [b, c] : x.terms())
        if (b.upper.size() > 1 || b.lower.size() != p)
            return false;
    return true;
}

AlgebraElement act_dkp(const AlgebraElement& gen, const AlgebraElement& z, int p) {
    const int n = z.dim();
    if (!in_zp(z, n, p))
        throw MembershipError("element is not in Z_(" + std::to_string(p) + ")");
    for (const auto& [b, c] : gen.terms())
        if (b.upper.size() + b.lower.size() != 1)
            throw MembershipError("generator term " + b.str() + " is not of the form (^aP) or (P_v)");
    AlgebraElement r = mul(gen, z);
    if (!in_zp(r, n, p))
        throw std::logic_error("DKP action left Z_(p)");
    return r;
}

AlgebraElement zp_lower(std::span<const int> word, int n) {
    return basis_word({}, word, n);
}

AlgebraElement zp_upper(int a, std::span<const int> word, int n) {
    const int up[] = {a};
    return basis_word(up, word, n);
}

}  // namespace cliffdkp
