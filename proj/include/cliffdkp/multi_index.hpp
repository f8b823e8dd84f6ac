#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliffdkp/rational.hpp"

namespace cliffdkp {

/// Largest supported dimension of V.
inline constexpr int kMaxDim = 16;

/// Strictly increasing tuple of indices drawn from 1..n.
///
/// A canonical multi-index is the same thing as a subset of {1,...,n}, so it
/// is stored as a bitmask (bit i-1 set when i is present). Ordering is
/// length first, then lexicographic on the entry tuple.
class MultiIndex {
public:
    MultiIndex() = default;

    /// Validates that `entries` is strictly increasing and within 1..n.
    /// Throws RangeError otherwise (repeats included).
    MultiIndex(std::span<const int> entries, int n);
    MultiIndex(std::initializer_list<int> entries, int n)
        : MultiIndex(std::span<const int>(entries.begin(), entries.size()), n) {}

    static MultiIndex from_mask(std::uint32_t mask) {
        MultiIndex m;
        m.mask_ = mask;
        return m;
    }

    std::uint32_t mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
    /// Largest entry, 0 for the empty index.
    int max_entry() const { return mask_ ? 32 - std::countl_zero(mask_) : 0; }

    std::vector<int> entries() const;

    /// Number of entries strictly less than i.
    int count_below(int i) const { return std::popcount(mask_ & ((1u << (i - 1)) - 1u)); }

    MultiIndex with(int i) const { return from_mask(mask_ | (1u << (i - 1))); }
    MultiIndex without(int i) const { return from_mask(mask_ & ~(1u << (i - 1))); }

    friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
    friend bool operator<(MultiIndex a, MultiIndex b);

    /// "1,3" style, no brackets.
    std::string str() const;

private:
    std::uint32_t mask_ = 0;
};

/// Result of sorting an arbitrary index sequence.
struct SignedIndex {
    int sign = 0;  // -1, 0, +1
    MultiIndex index;  // meaningful only when sign != 0

    explicit operator bool() const { return sign != 0; }
};

/// Sorts `seq`, returning the permutation parity; sign 0 on a repeated entry.
/// Throws RangeError if an entry lies outside 1..n.
SignedIndex canonicalize(std::span<const int> seq, int n);
inline SignedIndex canonicalize(std::initializer_list<int> seq, int n) {
    return canonicalize(std::span<const int>(seq.begin(), seq.size()), n);
}

/// Generalized Kronecker delta det(delta^{jp_a}_{k_b}).
///
/// Computed as zero when the lengths or the index sets differ, or either
/// tuple repeats an entry; otherwise the sign of the permutation taking
/// `lower` onto `upper`. Entries need not be sorted.
Rational gen_delta(std::span<const int> upper, std::span<const int> lower);
inline Rational gen_delta(std::initializer_list<int> upper, std::initializer_list<int> lower) {
    return gen_delta(std::span<const int>(upper.begin(), upper.size()),
                     std::span<const int>(lower.begin(), lower.size()));
}

/// All canonical multi-indices of length p over 1..n, in MultiIndex order.
std::vector<MultiIndex> combinations(int n, int p);

/// All 2^n canonical multi-indices over 1..n, in MultiIndex order.
std::vector<MultiIndex> all_multi_indices(int n);

std::uint64_t binomial(int n, int k);

}  // namespace cliffdkp
