#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cliffdkp/core_algebra.hpp"
#include "cliffdkp/field_poly.hpp"
#include "cliffdkp/rational_matrix.hpp"

namespace cliffdkp {

/// Deterministic generator for test data.
///
/// Draws come from std::mt19937_64 reduced with `%`, never from the
/// standard distributions, whose output is implementation-defined. The
/// same seed therefore yields the same objects on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    int uniform(int lo, int hi);
    bool coin() { return uniform(0, 1) == 1; }

    /// Numerator in [-4, 4], denominator in [1, 3].
    Rational rational();
    /// Like rational() but never zero.
    Rational nonzero_rational();
    std::vector<Rational> vector(int n);

    /// Every basis element gets a coefficient with probability 1/2.
    AlgebraElement element(int n);
    /// Random linear combination of zp_basis(n, p).
    AlgebraElement zp_element(int n, int p);

    /// Symmetric, invertible, small integer entries.
    RationalMatrix symmetric_invertible(int n);
    /// Invertible, small rational entries.
    RationalMatrix invertible(int n);

    /// Sum of up to `terms` monomials of degree <= max_degree in the y and
    /// p symbols of rank p.
    FieldPoly phase_poly(int n, int p, int max_degree, int terms = 4);
    /// As phase_poly, over y and pi symbols.
    FieldPoly field_poly(int n, int p, int max_degree, int terms = 4);

private:
    FieldPoly poly(const std::vector<FieldSymbol>& symbols, int max_degree, int terms);
    std::mt19937_64 eng_;
};

/// y symbols followed by p (or pi) symbols of rank p.
std::vector<FieldSymbol> phase_symbols(int n, int p);
std::vector<FieldSymbol> field_symbols(int n, int p);

}  // namespace cliffdkp
