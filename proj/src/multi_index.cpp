#include "cliffdkp/multi_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cliffdkp/error.hpp"

namespace cliffdkp {

namespace {

void check_dim(int n) {
    if (n < 0 || n > kMaxDim)
        throw RangeError("dimension " + std::to_string(n) + " outside 0.." + std::to_string(kMaxDim));
}

void check_entry(int i, int n) {
    if (i < 1 || i > n)
        throw RangeError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

// Parity of the permutation sorting `v` (entries assumed distinct).
int sort_parity(std::vector<int>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    Rational q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

MultiIndex::MultiIndex(std::span<const int> entries, int n) {
    check_dim(n);
    int prev = 0;
    for (int i : entries) {
        check_entry(i, n);
        if (i <= prev)
            throw RangeError("multi-index entries must be strictly increasing");
        mask_ |= 1u << (i - 1);
        prev = i;
    }
}

std::vector<int> MultiIndex::entries() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

bool operator<(MultiIndex a, MultiIndex b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb)
        return sa < sb;
    std::uint32_t x = a.mask_, y = b.mask_;
    while (x && y) {
        int lx = std::countr_zero(x), ly = std::countr_zero(y);
        if (lx != ly)
            return lx < ly;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

std::string MultiIndex::str() const {
    std::string s;
    for (int i : entries()) {
        if (!s.empty())
            s += ',';
        s += std::to_string(i);
    }
    return s;
}

SignedIndex canonicalize(std::span<const int> seq, int n) {
    check_dim(n);
    std::uint32_t mask = 0;
    for (int i : seq) {
        check_entry(i, n);
        if (mask & (1u << (i - 1)))
            return {};
        mask |= 1u << (i - 1);
    }
    std::vector<int> v(seq.begin(), seq.end());
    return {sort_parity(v), MultiIndex::from_mask(mask)};
}

Rational gen_delta(std::span<const int> upper, std::span<const int> lower) {
    if (upper.size() != lower.size())
        return 0;
    std::vector<int> u(upper.begin(), upper.end()), l(lower.begin(), lower.end());
    int su = sort_parity(u), sl = sort_parity(l);
    if (std::adjacent_find(u.begin(), u.end()) != u.end() || u != l)
        return 0;
    return su * sl;
}

std::vector<MultiIndex> combinations(int n, int p) {
    check_dim(n);
    if (p < 0 || p > n)
        throw RangeError("rank " + std::to_string(p) + " outside 0.." + std::to_string(n));
    std::vector<MultiIndex> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == p)
            out.push_back(MultiIndex::from_mask(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> all_multi_indices(int n) {
    check_dim(n);
    std::vector<MultiIndex> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        out.push_back(MultiIndex::from_mask(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace cliffdkp
