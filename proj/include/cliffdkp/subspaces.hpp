#pragma once

#include <cstdint>
#include <vector>

#include "cliffdkp/core_algebra.hpp"

namespace cliffdkp {

/// Basis of Z_(p): every E([], I) and E([a], I) with |I| = p, in basis order.
std::vector<BasisElement> zp_basis(int n, int p);

/// (n + 1) * C(n, p)
std::uint64_t dim_zp(int n, int p);

/// True iff the support of x lies in zp_basis(n, p).
bool in_zp(const AlgebraElement& x, int n, int p);

/// Left action of a grade-one DKP generator on z in Z_(p).
///
/// Throws MembershipError if z is not in Z_(p) or `gen` has terms outside
/// the span of the E([j],[]) and E([],[i]).
AlgebraElement act_dkp(const AlgebraElement& gen, const AlgebraElement& z, int p);

/// (P)(e_{w1})...(e_{wp}) for an arbitrary word: the antisymmetric
/// (P_I) with signs from canonicalize, zero on repeats.
AlgebraElement zp_lower(std::span<const int> word, int n);
/// (e^a)(P)(e_{w1})...(e_{wp})
AlgebraElement zp_upper(int a, std::span<const int> word, int n);

}  // namespace cliffdkp
