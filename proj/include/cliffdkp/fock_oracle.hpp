#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffdkp/core_algebra.hpp"

namespace cliffdkp {

/// Occupation bitmask: bit i-1 set when mode i is occupied.
using FockState = std::uint32_t;

/// Exact 2^n x 2^n matrix on the fermionic Fock space, indexed by
/// FockState (row = output state, column = input state).
class DenseOperator {
public:
    explicit DenseOperator(int n = 0);
    static DenseOperator identity(int n);

    int dim() const { return n_; }
    int side() const { return side_; }
    Rational& operator()(FockState r, FockState c) { return a_[static_cast<std::size_t>(r) * side_ + c]; }
    const Rational& operator()(FockState r, FockState c) const {
        return a_[static_cast<std::size_t>(r) * side_ + c];
    }

    DenseOperator transpose() const;
    bool is_zero() const;

    friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
    friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
    friend DenseOperator operator*(const Rational& s, const DenseOperator& a);
    friend bool operator==(const DenseOperator&, const DenseOperator&) = default;

private:
    int n_;
    int side_;
    std::vector<Rational> a_;
};

enum class GeneratorKind { vector, covector };

/// (e_i) -> annihilation a_i, (e^j) -> creation a^dag_j, with the sign
/// (-1)^{#{s in S : s < i}} on the ordered state a^dag_{s1}..a^dag_{sk}|0>.
DenseOperator represent_generator(GeneratorKind kind, int index, int n);

/// The homomorphism G_n -> End(Fock): E(J,K) maps to
/// a^dag_{j1}..a^dag_{jp} |0><0| a_{kq}..a_{k1}.
DenseOperator represent(const AlgebraElement& a);

/// Image of a single basis element (cached generator products are not kept).
DenseOperator represent(const BasisElement& b, int n);

}  // namespace cliffdkp
