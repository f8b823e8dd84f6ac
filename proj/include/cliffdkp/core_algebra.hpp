#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "cliffdkp/element.hpp"
#include "cliffdkp/rational_matrix.hpp"

namespace cliffdkp {

using AlgebraElement = Element<Rational>;

/// E(upper, lower) with coefficient 1.
AlgebraElement basis(MultiIndex upper, MultiIndex lower, int n);
inline AlgebraElement basis(std::initializer_list<int> upper, std::initializer_list<int> lower, int n) {
    return basis(MultiIndex(upper, n), MultiIndex(lower, n), n);
}

/// (e^{u_1})...(e^{u_p})(P)(e_{w_1})...(e_{w_q}) for arbitrary index words.
///
/// `lower_word` is the factor order as written to the right of (P), so
/// (^J P_{k_q...k_1}) = basis_word(J, {k_q, ..., k_1}). Repeats give 0.
AlgebraElement basis_word(std::span<const int> upper_word, std::span<const int> lower_word, int n);
inline AlgebraElement basis_word(std::initializer_list<int> upper_word,
                                 std::initializer_list<int> lower_word, int n) {
    return basis_word(std::span<const int>(upper_word.begin(), upper_word.size()),
                      std::span<const int>(lower_word.begin(), lower_word.size()), n);
}

/// Every canonical basis element of G_n, 2^{2n} of them, in basis order.
std::vector<BasisElement> all_basis_elements(int n);

/// v^j (e_j) in the projector basis.
AlgebraElement embed_vector(std::span<const Rational> v);
inline AlgebraElement embed_vector(const std::vector<Rational>& v) {
    return embed_vector(std::span<const Rational>(v));
}
/// alpha_j (e^j) in the projector basis.
AlgebraElement embed_covector(std::span<const Rational> alpha);
inline AlgebraElement embed_covector(const std::vector<Rational>& alpha) {
    return embed_covector(std::span<const Rational>(alpha));
}

/// (e_i), (e^i): the unit vector / covector generators.
AlgebraElement vector_generator(int i, int n);
AlgebraElement covector_generator(int i, int n);

/// Vacuum idempotent (P) = E[|].
AlgebraElement projector_P(int n);
/// (Pi_p) = sum over increasing J with |J| = p of E(J,J).
AlgebraElement projector_Pi(int p, int n);
/// 1 = sum_p (Pi_p).
AlgebraElement unit(int n);

/// Metric adjunction: the antihomomorphism with (e_i)^dag = g_ij (e^j),
/// (e^i)^dag = g^ij (e_j) and (P)^dag = (P).
AlgebraElement adjoint(const AlgebraElement& a, const Metric& g);

/// a*b + b*a
AlgebraElement anticommutator(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace cliffdkp
