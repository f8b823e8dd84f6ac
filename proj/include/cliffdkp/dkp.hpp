#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cliffdkp/core_algebra.hpp"
#include "cliffdkp/rational_matrix.hpp"

namespace cliffdkp {

/// The five generator constructions:
///   b_upper        b^a   = (^a P) + (P_{a#})
///   b_upper_neg    b_^a  = (^a P) - (P_{a#})
///   b_lower_neg    b_v   = (P_v) - (^{v~} P)
///   beta_lower     beta_i  = (P_i) + (^{i~} P)
///   beta_lower_neg beta_i_ = (P)(e_i) - g_ij (e^j)(P)
/// where # raises with g^{-1} and ~ lowers with g.
enum class DkpFamily { b_upper, b_upper_neg, b_lower_neg, beta_lower, beta_lower_neg };

std::string to_string(DkpFamily f);
/// Accepts the names printed by to_string.
DkpFamily parse_family(const std::string& name);

struct Covector {
    std::vector<Rational> components;
};
struct Vector {
    std::vector<Rational> components;
};
/// 1-based basis index.
struct BasisIndex {
    int value;
};

using DkpArg = std::variant<Covector, Vector, BasisIndex>;

/// b-families take a Covector (b_upper, b_upper_neg) or a Vector
/// (b_lower_neg); beta-families take a BasisIndex. Throws std::invalid_argument
/// on a kind mismatch.
AlgebraElement make_generator(DkpFamily family, const DkpArg& arg, const Metric& g);

/// (P) + (Pi_1)
AlgebraElement dkp_unit(int n);

/// x1 x2 x3 + x3 x2 x1 minus the family's right-hand side
///   +-g^{-1}(a1,a2) x3 +- g^{-1}(a3,a2) x1       (b_upper / b_upper_neg)
///   -g(v1,v2) x3 - g(v3,v2) x1                   (b_lower_neg)
///   +-g_ij x_k +- g_kj x_i                       (beta_lower / beta_lower_neg)
/// Zero exactly when the trilinear relation holds.
AlgebraElement check_trilinear(DkpFamily family, const DkpArg& x1, const DkpArg& x2, const DkpArg& x3,
                               const Metric& g);

enum class BetaVariant { upper_neg, lower_neg };

/// Frame-mapped generators with the Euclidean Latin metric:
///   upper_neg: beta_^mu = Lambda^mu_a b_^{e^a}
///   lower_neg: beta__mu = (Lambda^{-1})^a_mu b__{e_a}
AlgebraElement beta_mu(const FrameMap& lambda, int mu, BetaVariant variant);

/// beta^mu beta^nu beta^gam + beta^gam beta^nu beta^mu + eta^{mu nu} beta^gam + eta^{gam nu} beta^mu
/// for the upper_neg generators, with eta supplied by the caller. The
/// relation holds identically for eta = Lambda Lambda^T; for eta = delta it
/// holds only when Lambda is orthogonal.
AlgebraElement ksymplectic_residual(const FrameMap& lambda, const RationalMatrix& eta, int mu, int nu, int gam);

}  // namespace cliffdkp
